"""Smith normal form and integer row-lattice reduction, exact arithmetic.

Matrices are plain lists of rows of Python ints; no machine-word modes
anywhere, so coefficient growth is bounded only by memory.  Pivots are
chosen with minimal absolute value to keep intermediate entries small.
"""

from .errors import ValidationError

__all__ = ["SNFResult", "smith_normal_form", "identity_matrix", "mat_mul",
           "row_lattice_basis"]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    """Product of two int matrices (lists of rows)."""
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    n = len(B)
    assert all(len(row) == n for row in A), "shape mismatch"
    cols = len(B[0])
    out = []
    for row in A:
        acc = [0] * cols
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


class SNFResult:
    """Diagonal form d_1 | d_2 | ... of an integer matrix.

    diagonal has length min(m, n) and may end in zeros; rank counts the
    nonzero entries.  When transforms are retained they are the 4-tuple
    (S, S_inv, T, T_inv) with S*A*T equal to the diagonal form.
    """

    __slots__ = ("diagonal", "rank", "shape", "transforms")

    def __init__(self, diagonal, shape, transforms=None):
        self.diagonal = list(diagonal)
        self.shape = shape
        self.rank = sum(1 for d in self.diagonal if d)
        self.transforms = transforms
        for a, b in zip(self.diagonal, self.diagonal[1:]):
            if b and (a == 0 or b % a):
                raise ValidationError("diagonal %r breaks the divisibility chain"
                                      % (self.diagonal,))

    def torsion(self):
        """Invariant factors bigger than 1 (the torsion part)."""
        return [d for d in self.diagonal if d > 1]

    def __repr__(self):
        return "SNFResult(diagonal=%r, shape=%r)" % (self.diagonal, self.shape)


def smith_normal_form(rows, shape=None, want_transforms=False):
    """Smith normal form of an integer matrix.

    >>> smith_normal_form([[2, 0], [0, 3]]).diagonal
    [1, 6]
    >>> smith_normal_form([[0]]).rank
    0
    >>> r = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    >>> r.diagonal
    [2, 2, 156]

    With shape=(m, n) an empty list stands for any m x 0 / 0 x n matrix.
    """
    if shape is None:
        m = len(rows)
        n = len(rows[0]) if rows else 0
    else:
        m, n = shape
    M = [list(r) for r in rows]
    assert len(M) == m and all(len(r) == n for r in M), "bad shape"

    if want_transforms:
        S, Si = identity_matrix(m), identity_matrix(m)
        T, Ti = identity_matrix(n), identity_matrix(n)

    def row_swap(i, j):
        M[i], M[j] = M[j], M[i]
        if want_transforms:
            S[i], S[j] = S[j], S[i]
            for r in Si:
                r[i], r[j] = r[j], r[i]

    def row_add(i, j, c):
        # row_i += c * row_j
        Mi, Mj = M[i], M[j]
        for t in range(n):
            Mi[t] += c * Mj[t]
        if want_transforms:
            Ri, Rj = S[i], S[j]
            for t in range(m):
                Ri[t] += c * Rj[t]
            for r in Si:
                r[j] -= c * r[i]

    def row_neg(i):
        M[i] = [-x for x in M[i]]
        if want_transforms:
            S[i] = [-x for x in S[i]]
            for r in Si:
                r[i] = -r[i]

    def col_swap(j, k):
        for r in M:
            r[j], r[k] = r[k], r[j]
        if want_transforms:
            for r in T:
                r[j], r[k] = r[k], r[j]
            Ti[j], Ti[k] = Ti[k], Ti[j]

    def col_add(j, k, c):
        # col_j += c * col_k
        for r in M:
            r[j] += c * r[k]
        if want_transforms:
            for r in T:
                r[j] += c * r[k]
            Tk, Tj = Ti[k], Ti[j]
            for t in range(n):
                Tk[t] -= c * Tj[t]

    t = 0
    while t < min(m, n):
        # minimal |entry| pivot in the trailing submatrix
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (best is None or abs(v) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(t, best[0])
        if best[1] != t:
            col_swap(t, best[1])

        changed = True
        while changed:
            changed = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    row_add(i, t, -q)
                    if M[i][t]:
                        # remainder is strictly smaller; promote it
                        row_swap(t, i)
                        changed = True
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    col_add(j, t, -q)
                    if M[t][j]:
                        col_swap(t, j)
                        changed = True

        p = M[t][t]
        bad = None
        for a in range(t + 1, m):
            for b in range(t + 1, n):
                if M[a][b] % p:
                    bad = a
                    break
            if bad is not None:
                break
        if bad is not None:
            # drag a non-divisible entry into the pivot row and redo
            row_add(t, bad, 1)
            continue
        if p < 0:
            row_neg(t)
        t += 1

    diagonal = [M[i][i] for i in range(min(m, n))]
    transforms = None
    if want_transforms:
        D = mat_mul(mat_mul(S, [list(r) for r in rows]), T) if rows else []
        for i in range(m):
            for j in range(n):
                want = diagonal[i] if i == j and i < len(diagonal) else 0
                assert D[i][j] == want, "transform bookkeeping broke"
        transforms = (S, Si, T, Ti)
    return SNFResult(diagonal, (m, n), transforms)


def row_lattice_basis(rows, ncols):
    """Hermite-style Z-basis of the lattice spanned by integer rows.

    Echelon over Z with positive pivots and entries above each pivot
    reduced into [0, pivot); deterministic, hence canonical.

    >>> row_lattice_basis([[7, 0], [-3, 1]], 2)
    [[1, 2], [0, 7]]
    >>> row_lattice_basis([[2, 4], [4, 8]], 2)
    [[2, 4]]
    """
    work = [list(r) for r in rows if any(r)]
    assert all(len(r) == ncols for r in work)
    basis = []
    for col in range(ncols):
        live = [r for r in work if r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            r0 = live[0]
            for r in live[1:]:
                q = r[col] // r0[col]
                for j in range(col, ncols):
                    r[j] -= q * r0[j]
            live = [r for r in live if r[col]]
        if live:
            piv = live[0]
            work.remove(piv)
            if piv[col] < 0:
                piv = [-x for x in piv]
            basis.append(piv)
        work = [r for r in work if any(r)]
    # reduce entries above every pivot into [0, pivot)
    pivots = [(next(j for j, x in enumerate(r) if x), r) for r in basis]
    for idx, (c, r) in enumerate(pivots):
        for earlier, (_, rr) in enumerate(pivots[:idx]):
            q = rr[c] // r[c]
            if q:
                for j in range(ncols):
                    rr[j] -= q * r[j]
    return basis
