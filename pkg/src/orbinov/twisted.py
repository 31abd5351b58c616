"""Twisted chain complexes and exact Novikov numbers.

A closed rational cochain is first replaced by an integer-valued
exponent cochain: a forest gauge makes it vanish on tree edges, and
the leftover edge values are expanded in a lattice basis of the period
group.  The boundary maps of the complex then pick up monomial
coefficients (the face dropping the first vertex is transported along
its first edge), giving matrices over the weighted Laurent ring whose
ranks and invariant factors are the Novikov betti and torsion numbers.
"""

from fractions import Fraction

from .cochains import RationalCochain1, PeriodSpace, vec_add
from .complexes import bfs_forest, homology_of_matrices, integer_homology
from .errors import UnsupportedOperationError, ValidationError
from .laurent import LaurentPoly, WeightSystem
from .lmatrix import (WeightedLaurentMatrix, fraction_field_rank,
                      invariant_factors)
from .periods import H1Presentation, gamma_basis, period_homomorphism
from .qlinalg import q_solve

__all__ = ["IntegralLift", "integralize", "TwistedComplex",
           "twisted_complex", "NovikovNumbers", "novikov_numbers",
           "CyclicCoverCheck", "cyclic_cover_oracle", "rank1_perturb"]


class IntegralLift:
    """Integer exponent cochain representing a closed cochain's class.

    basis spans the period lattice; exponents maps each stored edge to
    a vector of integers, zero on the gauge forest.  The original
    cochain differs from the lifted one by the coboundary of
    potential, so every loop period is preserved.
    """

    __slots__ = ("complex", "basis", "exponents", "potential")

    def __init__(self, complex, basis, exponents, potential):
        self.complex = complex
        self.basis = basis
        self.exponents = exponents
        self.potential = potential

    @property
    def rank(self):
        return len(self.basis)

    def exponent(self, u, v):
        """Exponent vector along the edge u -> v, antisymmetric."""
        if (u, v) in self.exponents:
            return self.exponents[(u, v)]
        if (v, u) in self.exponents:
            return tuple(-e for e in self.exponents[(v, u)])
        return (0,) * self.rank


def integralize(cochain, h1=None):
    """Exponent cochain of a closed cochain, gauge fixed on a forest.

    The gauge shift is by an honest coboundary, so the represented
    cohomology class is untouched; values on the remaining edges are
    resolved in the period lattice basis and must come out integral.
    """
    X = cochain.complex
    if h1 is None:
        h1 = H1Presentation(X)
    ph = period_homomorphism(h1, cochain)
    basis = gamma_basis(ph)
    r = len(basis)
    _, parent, order = bfs_forest(X)
    f = {}
    for v in order:
        if v in parent:
            f[v] = vec_add(f[parent[v]], cochain.value(parent[v], v))
        else:
            f[v] = cochain.space.zero()
    exponents = {}
    k = cochain.space.k
    cols = [[basis[j][i] for j in range(r)] for i in range(k)]
    for (u, v), per in zip(h1.offtree, ph.fundamental_periods):
        if not any(per):
            continue
        coeffs = q_solve(cols, list(per))
        assert coeffs is not None and all(c.denominator == 1 for c in coeffs), \
            "off-tree period escaped the period lattice"
        exp = tuple(int(c) for c in coeffs)
        if any(exp):
            exponents[(u, v)] = exp
    return IntegralLift(X, basis, exponents, f)


class TwistedComplex:
    """Boundary matrices of a complex twisted by an integral lift."""

    __slots__ = ("complex", "lift", "ws", "boundary")

    def __init__(self, complex, lift, ws, boundary):
        self.complex = complex
        self.lift = lift
        self.ws = ws
        self.boundary = boundary

    def ncells(self, q):
        return self.complex.n_cells(q)


def twisted_complex(cochain, h1=None, lift=None):
    """Matrices of the twisted boundary over the weighted Laurent ring.

    The face that drops a cell's first vertex changes basepoint, so
    its coefficient is transported by the monomial of the first edge;
    all other faces keep plain alternating signs.  The composite of
    consecutive maps is verified to vanish.
    """
    X = cochain.complex
    if lift is None:
        lift = integralize(cochain, h1)
    ws = WeightSystem(lift.basis)
    r = ws.r
    boundary = {}
    for q in range(1, X.dim + 1):
        entries = {}
        idx = X.cell_index[q - 1]
        for j, cell in enumerate(X.cells[q]):
            sign = 1
            for drop in range(len(cell)):
                face = cell[:drop] + cell[drop + 1:]
                i = idx[face]
                if drop == 0:
                    poly = LaurentPoly.monomial(
                        r, lift.exponent(cell[0], cell[1]), sign)
                else:
                    poly = LaurentPoly.const(r, sign)
                prev = entries.get((i, j))
                entries[(i, j)] = poly if prev is None else prev + poly
                sign = -sign
        boundary[q] = WeightedLaurentMatrix(
            ws, X.n_cells(q - 1), X.n_cells(q), entries)
    for q in range(1, X.dim):
        assert _sparse_product_is_zero(boundary[q], boundary[q + 1]), \
            "twisted boundary squared is nonzero in degree %d" % (q + 1,)
    return TwistedComplex(X, lift, ws, boundary)


def _sparse_product_is_zero(A, B):
    by_row = {}
    for (k, j), p in B.entries.items():
        by_row.setdefault(k, []).append((j, p))
    acc = {}
    for (i, k), a in A.entries.items():
        for j, b in by_row.get(k, ()):
            key = (i, j)
            term = a * b
            prev = acc.get(key)
            acc[key] = term if prev is None else prev + term
    return all(not p for p in acc.values())


class NovikovNumbers:
    """Exact Novikov numbers of a class, with the route that produced
    them.

    route is "integral" when the class vanishes (ordinary homology),
    "rank-one" when torsion is computed through invariant factors, and
    "betti-only" when the period lattice has rank two or more, where
    torsion is left as None.
    """

    __slots__ = ("betti", "torsion", "rank", "route", "note")

    def __init__(self, betti, torsion, rank, route, note=None):
        self.betti = betti
        self.torsion = torsion
        self.rank = rank
        self.route = route
        self.note = note

    def euler(self):
        return sum((-1) ** q * b for q, b in enumerate(self.betti))

    def __repr__(self):
        return ("NovikovNumbers(betti=%r, torsion=%r, rank=%d, route=%r)"
                % (self.betti, self.torsion, self.rank, self.route))


def novikov_numbers(cochain, minor_cap=8):
    """Betti and torsion numbers of a closed cochain's class.

    Rank zero classes reduce to ordinary integer homology.  For
    positive rank the betti numbers come from fraction-field ranks;
    torsion additionally needs invariant factors, which exist as an
    algorithm only at rank one.
    """
    X = cochain.complex
    h1 = H1Presentation(X)
    lift = integralize(cochain, h1)
    r = lift.rank
    if r == 0:
        ih = integer_homology(X)
        return NovikovNumbers(list(ih.betti),
                              [len(t) for t in ih.torsion],
                              0, "integral")
    tc = twisted_complex(cochain, h1, lift)
    top = X.dim
    rho = [0] * (top + 2)
    for q in range(1, top + 1):
        rho[q] = fraction_field_rank(tc.boundary[q])
    betti = [X.n_cells(q) - rho[q] - rho[q + 1] for q in range(top + 1)]
    if any(b < 0 for b in betti):
        raise ValidationError("negative twisted betti number")
    if r >= 2:
        return NovikovNumbers(
            betti, None, r, "betti-only",
            "torsion needs a rank one class; consider rank1_perturb")
    torsion = []
    for q in range(top + 1):
        if q + 1 <= top:
            inv = invariant_factors(tc.boundary[q + 1], minor_cap=minor_cap)
            assert inv.rank == rho[q + 1], \
                "invariant factor rank disagrees with fraction-field rank"
            torsion.append(inv.nonunit_count)
        else:
            torsion.append(0)
    return NovikovNumbers(betti, torsion, 1, "rank-one")


class CyclicCoverCheck:
    """Agreement report between the two finite cyclic cover routes."""

    __slots__ = ("p", "explicit", "algebraic")

    def __init__(self, p, explicit, algebraic):
        self.p = p
        self.explicit = explicit
        self.algebraic = algebraic

    @property
    def consistent(self):
        return self.explicit == self.algebraic

    def __repr__(self):
        return ("CyclicCoverCheck(p=%d, consistent=%r, explicit=%r)"
                % (self.p, self.consistent, self.explicit))


def cyclic_cover_oracle(cochain, p, h1=None):
    """Homology of the degree p cyclic cover, computed two ways.

    The explicit route builds the cover as a simplicial complex with
    vertices (v, level) and takes integer homology.  The algebraic
    route substitutes the p by p cyclic shift for the twisting
    variable in the twisted boundary and takes homology of the block
    matrices.  The two answers must agree; disagreement would expose a
    defect in the twisting conventions.
    """
    if not 2 <= p <= 12:
        raise UnsupportedOperationError(
            "cover degree %d out of the supported range 2..12" % (p,))
    X = cochain.complex
    lift = integralize(cochain, h1)
    if lift.rank != 1:
        raise UnsupportedOperationError(
            "cyclic covers need a rank one class, got rank %d" % (lift.rank,))
    tc = twisted_complex(cochain, lift=lift)
    explicit = _explicit_cover_homology(X, lift, p)
    algebraic = _block_substitution_homology(X, tc, p)
    return CyclicCoverCheck(p, explicit, algebraic)


def _explicit_cover_homology(X, lift, p):
    from .complexes import build_complex

    def label(v, level):
        return "%s@%d" % (v, level)

    simplices = []
    # every cell of every dimension is lifted; closure is recomputed,
    # which also carries isolated vertices along
    all_cells = [cell for q in range(X.dim + 1) for cell in X.cells[q]]
    for cell in all_cells:
        v0 = cell[0]
        offsets = [0]
        for v in cell[1:]:
            offsets.append(lift.exponent(v0, v)[0])
        for level in range(p):
            simplices.append(tuple(label(v, (level + off) % p)
                                   for v, off in zip(cell, offsets)))
    cover = build_complex(simplices)
    assert all(cover.n_cells(q) == p * X.n_cells(q)
               for q in range(X.dim + 1)), "cover has collapsed cells"
    return integer_homology(cover)


def _block_substitution_homology(X, tc, p):
    ncells = [X.n_cells(q) * p for q in range(X.dim + 1)]
    boundaries = {}
    for q in range(1, X.dim + 1):
        M = tc.boundary[q]
        rows = ncells[q - 1]
        cols = ncells[q]
        mat = [[0] * cols for _ in range(rows)]
        for (i, j), poly in M.entries.items():
            for (e,), c in poly.terms.items():
                # T^e acts on levels as the cyclic shift by e
                for level in range(p):
                    mat[i * p + (level + e) % p][j * p + level] += c
        boundaries[q] = mat
    return homology_of_matrices(ncells, boundaries)


def rank1_perturb(cochain, precision=6):
    """Rational rank one stand-in for a higher rank class.

    Every symbolic direction is collapsed onto its decimal shadow,
    rounded to the requested number of digits; periods then live in a
    rank one lattice and torsion becomes computable.  Rank one input
    passes through unchanged; rank zero input (before or after the
    collapse) is refused since it no longer points anywhere.
    """
    X = cochain.complex
    h1 = H1Presentation(X)
    ph = period_homomorphism(h1, cochain)
    rank = len(gamma_basis(ph))
    if rank == 0:
        raise ValidationError("the zero class cannot be perturbed")
    if not cochain.space.symbols:
        return cochain
    scale = 10 ** precision
    space = PeriodSpace()

    def collapse(vec):
        exact = cochain.space.shadow_value(vec)
        return (Fraction(round(exact * scale), scale),)

    values = {}
    for (u, v) in X.edges():
        w = cochain.value(u, v)
        if any(w):
            c = collapse(w)
            if any(c):
                values[(u, v)] = c
    out = RationalCochain1(X, values, space)
    ph2 = period_homomorphism(h1, out)
    if len(gamma_basis(ph2)) == 0:
        raise ValidationError(
            "perturbation collapsed the class to zero; raise precision")
    return out
