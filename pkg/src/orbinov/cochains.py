"""Closed rational 1-cochains, with optional symbolic period parts.

A class is presented by its values on oriented edges.  Values live in
Q^k where coordinate 0 is the rational part and the remaining k-1
coordinates are coefficients of declared irrational symbols, so "1/3 +
2*alpha" with symbols ("alpha",) is (1/3, 2).  All arithmetic on the
coordinates is exact; the decimal shadows attached to symbols are used
only when a class must be perturbed to rank one.
"""

from fractions import Fraction

from .complexes import bfs_forest
from .errors import DocumentError, ValidationError

__all__ = ["PeriodSpace", "RationalCochain1", "coboundary0", "is_exact",
           "is_invariant", "subdivide_cochain", "descend_cochain"]


class PeriodSpace:
    """Value space Q + Q*sym_1 + ... with optional decimal shadows."""

    __slots__ = ("symbols", "shadows")

    def __init__(self, symbols=(), shadows=None):
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise DocumentError("duplicate period symbol")
        self.shadows = {}
        for name, value in (shadows or {}).items():
            if name not in self.symbols:
                raise DocumentError("shadow for unknown symbol %r" % (name,))
            self.shadows[name] = Fraction(value)

    @property
    def k(self):
        return 1 + len(self.symbols)

    def zero(self):
        return (Fraction(0),) * self.k

    def vector(self, value):
        """Coerce a number or a length-k sequence to a value vector."""
        if isinstance(value, (int, Fraction, str)):
            vec = [Fraction(value)] + [Fraction(0)] * (self.k - 1)
            return tuple(vec)
        vec = [Fraction(x) for x in value]
        if len(vec) != self.k:
            raise DocumentError("value %r needs %d coordinates" % (value, self.k))
        return tuple(vec)

    def shadow_value(self, vec):
        """Rational stand-in for a vector, using the symbol shadows."""
        total = vec[0]
        for name, coeff in zip(self.symbols, vec[1:]):
            if coeff:
                if name not in self.shadows:
                    raise ValidationError("symbol %r has no shadow" % (name,))
                total += coeff * self.shadows[name]
        return total

    def format(self, vec):
        """Human form: '1/3 + 2*alpha'."""
        parts = []
        if vec[0] or all(c == 0 for c in vec[1:]):
            parts.append(str(vec[0]))
        for name, coeff in zip(self.symbols, vec[1:]):
            if coeff:
                parts.append("%s*%s" % (coeff, name))
        return " + ".join(parts)

    def __eq__(self, other):
        return (isinstance(other, PeriodSpace)
                and self.symbols == other.symbols
                and self.shadows == other.shadows)

    def __repr__(self):
        return "PeriodSpace(symbols=%r)" % (self.symbols,)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def vec_scale(c, a):
    return tuple(c * x for x in a)


class RationalCochain1:
    """A closed 1-cochain on a simplicial complex.

    values maps vertex pairs to vectors; each pair must be an edge,
    each edge may appear once (in either orientation), absent edges
    are zero.  Closedness over every triangle is checked on
    construction and is a hard requirement everywhere downstream.
    """

    __slots__ = ("complex", "space", "values")

    def __init__(self, complex, values, space=None):
        self.complex = complex
        self.space = space if space is not None else PeriodSpace()
        store = {}
        for (u, v), raw in values.items():
            if u == v:
                raise DocumentError("edge (%r, %r) is degenerate" % (u, v))
            for w in (u, v):
                if w not in complex.vertex_index:
                    raise DocumentError("unknown vertex %r" % (w,))
            vec = self.space.vector(raw)
            key = (u, v)
            if complex.vertex_index[u] > complex.vertex_index[v]:
                key = (v, u)
                vec = vec_neg(vec)
            if not complex.has_cell(key):
                raise ValidationError("(%r, %r) is not an edge" % (u, v))
            if key in store:
                raise DocumentError("edge (%r, %r) assigned twice" % (u, v))
            store[key] = vec
        self.values = {k: v for k, v in store.items()
                       if any(x for x in v)}
        self._check_closed()

    def _check_closed(self):
        if self.complex.dim < 2:
            return
        for tri in self.complex.cells[2]:
            a, b, c = tri
            total = vec_add(vec_sub(self.value(a, b), self.value(a, c)),
                            self.value(b, c))
            if any(total):
                raise ValidationError(
                    "cochain is not closed on triangle %r" % (tri,))

    def value(self, u, v):
        """Value on the oriented edge u -> v (antisymmetric)."""
        if u == v:
            return self.space.zero()
        iu = self.complex.vertex_index[u]
        iv = self.complex.vertex_index[v]
        if iu < iv:
            key, flip = (u, v), False
        else:
            key, flip = (v, u), True
        if not self.complex.has_cell(key):
            raise ValidationError("(%r, %r) is not an edge" % (u, v))
        vec = self.values.get(key, self.space.zero())
        return vec_neg(vec) if flip else vec

    def sum_along(self, walk):
        """Sum of values along a vertex walk; repeated vertices allowed
        consecutively (they contribute nothing)."""
        total = self.space.zero()
        for u, v in zip(walk, walk[1:]):
            if u != v:
                total = vec_add(total, self.value(u, v))
        return total

    def is_zero(self):
        return not self.values

    def add(self, other):
        assert self.complex is other.complex and self.space == other.space
        out = dict(self.values)
        for key, vec in other.values.items():
            out[key] = vec_add(out.get(key, self.space.zero()), vec)
        return RationalCochain1(self.complex, out, self.space)

    def scale(self, c):
        c = Fraction(c)
        return RationalCochain1(
            self.complex,
            {k: vec_scale(c, v) for k, v in self.values.items()},
            self.space)

    def __eq__(self, other):
        return (isinstance(other, RationalCochain1)
                and self.complex is other.complex
                and self.space == other.space
                and self.values == other.values)

    def __repr__(self):
        return "RationalCochain1(%d nonzero edges)" % (len(self.values),)


def coboundary0(complex, potential, space=None):
    """Coboundary of a vertex function; absent vertices count as zero.

    >>> from .complexes import build_complex
    >>> X = build_complex([("a", "b"), ("b", "c")])
    >>> df = coboundary0(X, {"b": Fraction(1, 2)})
    >>> df.value("a", "b")
    (Fraction(1, 2),)
    """
    space = space if space is not None else PeriodSpace()
    f = {}
    for v, raw in potential.items():
        if v not in complex.vertex_index:
            raise DocumentError("unknown vertex %r" % (v,))
        f[v] = space.vector(raw)
    zero = space.zero()
    values = {}
    for (u, v) in (complex.cells[1] if complex.dim >= 1 else []):
        values[(u, v)] = vec_sub(f.get(v, zero), f.get(u, zero))
    return RationalCochain1(complex, values, space)


def is_exact(cochain):
    """Potential vertex function if the cochain is a coboundary, else None.

    The potential vanishes at the lowest vertex of each component.
    """
    X = cochain.complex
    roots, parent, order = bfs_forest(X)
    f = {}
    for v in order:
        if v in parent:
            f[v] = vec_add(f[parent[v]], cochain.value(parent[v], v))
        else:
            f[v] = cochain.space.zero()
    for (u, v) in (X.cells[1] if X.dim >= 1 else []):
        if vec_sub(f[v], f[u]) != cochain.value(u, v):
            return None
    return f


def is_invariant(action, cochain):
    """Whether every group element preserves the cochain's edge values."""
    X = action.complex
    assert cochain.complex is X
    for g in action.group.elements:
        for (u, v) in (X.cells[1] if X.dim >= 1 else []):
            gu = action.apply_vertex(g, u)
            gv = action.apply_vertex(g, v)
            if cochain.value(gu, gv) != cochain.value(u, v):
                return False
    return True


def subdivide_cochain(sd, cochain):
    """Transport a closed cochain along a barycentric subdivision.

    Each edge of the subdivision joins barycenters of a proper face
    pair c < d; its value is the difference of barycenter potentials
    inside d, which keeps all walk sums exact: an original edge (u, v)
    splits into two steps of value omega(u,v)/2 each.
    """
    X = cochain.complex
    Xs = sd.complex
    space = cochain.space
    values = {}
    for (a, b) in (Xs.cells[1] if Xs.dim >= 1 else []):
        ca = sd.cell_of[a]
        cb = sd.cell_of[b]
        big = ca if len(ca) >= len(cb) else cb
        small = cb if big is ca else ca
        assert set(small) < set(big), "subdivision edge is not a face flag"
        base = big[0]

        def avg(cell):
            # barycenter potential inside the big cell: phi(w) = omega(base, w)
            tot = space.zero()
            for w in cell:
                tot = vec_add(tot, cochain.value(base, w))
            return vec_scale(Fraction(1, len(cell)), tot)

        values[(a, b)] = vec_sub(avg(cb), avg(ca))
    return RationalCochain1(Xs, values, space)


def descend_cochain(qres, cochain):
    """Push an invariant closed cochain down to the orbit space.

    The cochain lives on the complex the quotient was computed from;
    any subdivisions the quotient needed are applied to the cochain
    first.  Raises ValidationError when the cochain is not invariant
    under the (subdivided) action, i.e. not basic.
    """
    current = cochain
    for sd in qres.subdivisions:
        current = subdivide_cochain(sd, current)
    act = qres.action
    if current.complex is not act.complex:
        raise DocumentError("cochain does not live on the quotient's complex")
    if not is_invariant(act, current):
        raise ValidationError("cochain is not invariant, hence not basic")
    proj = qres.projection
    Y = qres.complex
    values = {}
    seen = {}
    for (u, v) in (act.complex.cells[1] if act.complex.dim >= 1 else []):
        pu, pv = proj[u], proj[v]
        if pu == pv:
            # a regular action cannot send an edge to a vertex
            if any(current.value(u, v)):
                raise ValidationError(
                    "edge (%r, %r) collapses but carries a nonzero value"
                    % (u, v))
            continue
        key = tuple(sorted((pu, pv), key=Y.vertex_index.__getitem__))
        vec = current.value(u, v) if key == (pu, pv) else current.value(v, u)
        if key in seen:
            assert seen[key] == vec, "invariant cochain disagreed on an orbit"
        else:
            seen[key] = vec
            values[key] = vec
    return RationalCochain1(Y, values, current.space)
