"""Matrices over the weighted Laurent ring: rank and invariant factors.

Rank is fraction-free (Bareiss), valid for any weight rank.  Invariant
factors run in two stages: unit pivots are eliminated with exact row
and column operations in the localized ring, then the residual matrix
(which has no unit entries left) is resolved through determinantal
divisors, i.e. gcds of all i x i minors over the polynomial ring.
Dividing consecutive divisors is exact because an i-minor expands into
(i-1)-minors; the divisibility chain of the resulting factors is then
re-verified inside the localized ring.
"""

from .errors import UnsupportedOperationError, ValidationError
from .laurent import LaurentPoly, exact_divide
from .localized import LocalizedScalar, localized_gcd

__all__ = ["WeightedLaurentMatrix", "fraction_field_rank",
           "InvariantFactors", "invariant_factors"]


class WeightedLaurentMatrix:
    """Sparse matrix of Laurent polynomials tied to a weight system."""

    __slots__ = ("ws", "nrows", "ncols", "entries")

    def __init__(self, ws, nrows, ncols, entries):
        self.ws = ws
        self.nrows = nrows
        self.ncols = ncols
        store = {}
        for (i, j), p in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValidationError("entry (%d, %d) outside %d x %d"
                                      % (i, j, nrows, ncols))
            if isinstance(p, int):
                p = LaurentPoly.const(ws.r, p)
            assert p.r == ws.r
            if p:
                store[(i, j)] = p
        self.entries = store

    def entry(self, i, j):
        return self.entries.get((i, j), LaurentPoly(self.ws.r, {}))

    def dense(self):
        return [[self.entry(i, j) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def transpose(self):
        return WeightedLaurentMatrix(
            self.ws, self.ncols, self.nrows,
            {(j, i): p for (i, j), p in self.entries.items()})

    def __repr__(self):
        return "WeightedLaurentMatrix(%d x %d, %d nonzero)" % (
            self.nrows, self.ncols, len(self.entries))


def _pick_fewest_terms(M, rows, cols, predicate=None):
    """Deterministic pivot: fewest terms, then smallest (row, col)."""
    best = None
    best_key = None
    for i in rows:
        for j in cols:
            p = M[i][j]
            if not p:
                continue
            if predicate is not None and not predicate(p):
                continue
            key = (p.n_terms(), i, j)
            if best is None or key < best_key:
                best, best_key = (i, j), key
    return best


def fraction_field_rank(M):
    """Rank of the matrix over the fraction field, fraction-free.

    Bareiss: every intermediate entry is a minor of the input, so the
    division at each step is exact in the polynomial ring.
    """
    A = M.dense()
    m, n = M.nrows, M.ncols
    prev = LaurentPoly.const(M.ws.r, 1)
    rank = 0
    row_live = list(range(m))
    col_live = list(range(n))
    while True:
        pick = _pick_fewest_terms(A, row_live, col_live)
        if pick is None:
            return rank
        pi, pj = pick
        row_live.remove(pi)
        col_live.remove(pj)
        pivot = A[pi][pj]
        for i in row_live:
            for j in col_live:
                num = A[i][j] * pivot - A[i][pj] * A[pi][j]
                q = exact_divide(num, prev)
                assert q is not None, "fraction-free step failed to divide"
                A[i][j] = q
            A[i][pj] = LaurentPoly(M.ws.r, {})
        prev = pivot
        rank += 1


class InvariantFactors:
    """Invariant factors of a matrix over the localized ring.

    factors lists the nonzero invariant factors up to units, units
    first (reported as the constant 1); rank counts them;
    nonunit_count is the number of factors that are not units, which
    is the torsion contribution.
    """

    __slots__ = ("ws", "factors", "rank", "nonunit_count")

    def __init__(self, ws, factors, nonunit_count):
        self.ws = ws
        self.factors = factors
        self.rank = len(factors)
        self.nonunit_count = nonunit_count

    def nonunit_factors(self):
        return self.factors[self.rank - self.nonunit_count:]

    def __repr__(self):
        return ("InvariantFactors(rank=%d, nonunit=%r)"
                % (self.rank, self.nonunit_factors()))


def invariant_factors(M, minor_cap=8):
    """Invariant factors over the localized ring, weight rank <= 1.

    Unit entries are pivoted away exactly; the residual block goes
    through gcd-of-minors determinantal divisors, which is exponential
    in its size, so residual blocks larger than minor_cap on a side
    are refused rather than attempted.
    """
    ws = M.ws
    scalars = [[LocalizedScalar(ws, M.entry(i, j)) for j in range(M.ncols)]
               for i in range(M.nrows)]
    units_found = 0
    # stage 1: eliminate unit pivots with exact elementary operations
    while True:
        pick = None
        best_key = None
        for i, row in enumerate(scalars):
            for j, s in enumerate(row):
                if s and s.is_unit():
                    key = (s.num.n_terms(), i, j)
                    if pick is None or key < best_key:
                        pick, best_key = (i, j), key
        if pick is None:
            break
        pi, pj = pick
        pivot = scalars[pi][pj]
        for i in range(len(scalars)):
            if i != pi and scalars[i][pj]:
                f = scalars[i][pj] / pivot
                scalars[i] = [a - f * b
                              for a, b in zip(scalars[i], scalars[pi])]
                assert not scalars[i][pj]
        for j in range(len(scalars[pi])):
            if j != pj and scalars[pi][j]:
                f = scalars[pi][j] / pivot
                for i in range(len(scalars)):
                    scalars[i][j] = scalars[i][j] - f * scalars[i][pj]
                assert not scalars[pi][j]
        scalars = [[s for j, s in enumerate(row) if j != pj]
                   for i, row in enumerate(scalars) if i != pi]
        units_found += 1
    one = LaurentPoly.const(ws.r, 1)
    factors = [one] * units_found
    m = len(scalars)
    n = len(scalars[0]) if scalars else 0
    if m == 0 or n == 0 or all(not s for row in scalars for s in row):
        return InvariantFactors(ws, factors, 0)
    if ws.r >= 2:
        raise UnsupportedOperationError(
            "residual invariant factors need gcds; weight rank %d has none"
            % (ws.r,))
    # stage 2: clear denominators (a unit scaling, so associate classes
    # of the factors survive) and shift all exponents to be nonnegative
    denom = one
    for row in scalars:
        for s in row:
            if s and s.den != denom:
                g = localized_gcd(denom, s.den, ws)
                extra = exact_divide(s.den, g)
                denom = denom * extra
    cleared = [[_scale_clear(s, denom, ws) for s in row] for row in scalars]
    shift = [0] * ws.r
    for row in cleared:
        for p in row:
            if p:
                lo = p.exp_bounds()[0]
                shift = [min(a, b) for a, b in zip(shift, lo)]
    neg = tuple(-x for x in shift)
    cleared = [[p.shift(neg) if p else p for p in row] for row in cleared]
    if min(m, n) > minor_cap:
        raise UnsupportedOperationError(
            "residual block is %d x %d; gcd-of-minors is capped at %d "
            "(raise minor_cap to force it)" % (m, n, minor_cap))
    prev_delta = one
    nonunit = []
    for size in range(1, min(m, n) + 1):
        delta = _minor_gcd(cleared, size, ws)
        if not delta:
            break
        d = exact_divide(delta, prev_delta)
        assert d is not None, "determinantal divisors failed to divide"
        if d.terms.get(max(d.terms), 0) < 0:
            d = -d
        nonunit.append(d)
        prev_delta = delta
    factors_tail = []
    for d in nonunit:
        if ws.is_unit_poly(d):
            factors.append(one)
        else:
            factors_tail.append(d)
    for a, b in zip(factors_tail, factors_tail[1:]):
        sa = LocalizedScalar(ws, a)
        sb = LocalizedScalar(ws, b)
        if sb.exact_divide_scalar(sa) is None:
            raise ValidationError(
                "invariant factor chain broke: %r does not divide %r"
                % (a, b))
    factors.extend(factors_tail)
    return InvariantFactors(ws, factors, len(factors_tail))


def _scale_clear(s, denom, ws):
    if not s:
        return LaurentPoly(ws.r, {})
    extra = exact_divide(denom, s.den)
    assert extra is not None
    return s.num * extra


def _minor_gcd(rows, size, ws):
    from itertools import combinations
    m = len(rows)
    n = len(rows[0])
    g = LaurentPoly(ws.r, {})
    for rsel in combinations(range(m), size):
        for csel in combinations(range(n), size):
            sub = [[rows[i][j] for j in csel] for i in rsel]
            det = _poly_det(sub, ws)
            if det:
                g = det if not g else localized_gcd(g, det, ws)
    return g


def _poly_det(sub, ws):
    n = len(sub)
    if n == 1:
        return sub[0][0]
    total = LaurentPoly(ws.r, {})
    for j in range(n):
        if sub[0][j]:
            minor = [r[:j] + r[j + 1:] for r in sub[1:]]
            term = sub[0][j] * _poly_det(minor, ws)
            total = total + term if j % 2 == 0 else total - term
    return total
