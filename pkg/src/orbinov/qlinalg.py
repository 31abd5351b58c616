"""Small exact linear algebra over the rationals (Fraction entries)."""

from fractions import Fraction

__all__ = ["q_rank", "q_solve", "rref"]


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def q_rank(rows):
    """Rank over Q.

    >>> q_rank([[1, 2], [2, 4]])
    1
    """
    return len(rref(rows)[1])


def q_solve(rows, rhs):
    """One solution x of A x = rhs over Q, or None if inconsistent.

    Free variables are set to 0.

    >>> q_solve([[2, 0], [0, 4]], [1, 2])
    [Fraction(1, 2), Fraction(1, 2)]
    >>> q_solve([[1, 1]], [3])
    [Fraction(3, 1), Fraction(0, 1)]
    >>> q_solve([[0, 0]], [1]) is None
    True
    """
    if not rows:
        return [] if all(Fraction(b) == 0 for b in rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    M, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = M[i][-1]
    return x
