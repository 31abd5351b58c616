"""Finite groups acting simplicially on complexes, and their quotients.

The action is on the right: apply_vertex(g, v) is v.g, and
apply_vertex(mul(g, h), v) == apply_vertex(h, apply_vertex(g, v)).

A quotient by the raw action only yields a simplicial complex with the
expected identifications when the action is regular: whenever some
tuple of group elements moves the vertices of a simplex onto a vertex
set that again spans a simplex, a single group element must realize
that move.  Checking only "no two vertices of a simplex share an
orbit" is weaker and accepts actions whose naive quotients are wrong,
so regularity here quantifies over all element tuples, degenerate
target tuples included.  Two barycentric subdivisions always repair an
irregular action.
"""

from itertools import product

from .complexes import barycentric_subdivision, build_complex
from .errors import DocumentError, ValidationError

__all__ = ["FiniteGroup", "SimplicialAction", "is_regular",
           "QuotientResult", "quotient_complex"]


class FiniteGroup:
    """Multiplication-table group on string labels.

    >>> z2 = FiniteGroup(["e", "r"], [["e", "r"], ["r", "e"]])
    >>> z2.identity
    'e'
    >>> z2.mul("r", "r")
    'e'
    >>> z2.inverse("r")
    'r'
    """

    __slots__ = ("elements", "index", "table", "identity")

    def __init__(self, elements, table):
        self.elements = list(elements)
        if len(set(self.elements)) != len(self.elements):
            raise DocumentError("duplicate group element label")
        if not self.elements:
            raise DocumentError("empty group")
        n = len(self.elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(table) != n or any(len(row) != n for row in table):
            raise DocumentError("multiplication table must be %d x %d" % (n, n))
        for row in table:
            for g in row:
                if g not in self.index:
                    raise DocumentError("table entry %r is not an element" % (g,))
        self.table = [list(row) for row in table]
        # identity: two-sided
        ident = None
        for g in self.elements:
            if (all(self.mul(g, h) == h for h in self.elements)
                    and all(self.mul(h, g) == h for h in self.elements)):
                ident = g
                break
        if ident is None:
            raise ValidationError("group table has no identity")
        self.identity = ident
        for g in self.elements:
            if not any(self.mul(g, h) == ident and self.mul(h, g) == ident
                       for h in self.elements):
                raise ValidationError("element %r has no inverse" % (g,))
        # exhaustive associativity; these groups are tiny
        for a in self.elements:
            for b in self.elements:
                ab = self.mul(a, b)
                for c in self.elements:
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise ValidationError(
                            "table is not associative at (%r, %r, %r)" % (a, b, c))

    def mul(self, g, h):
        return self.table[self.index[g]][self.index[h]]

    def inverse(self, g):
        ident = self.identity
        for h in self.elements:
            if self.mul(g, h) == ident:
                return h
        raise ValidationError("element %r has no inverse" % (g,))

    @property
    def order(self):
        return len(self.elements)

    @classmethod
    def cyclic(cls, n, prefix="g"):
        """Z/n with elements g0..g{n-1} (g0 the identity).

        >>> FiniteGroup.cyclic(3).mul("g1", "g2")
        'g0'
        """
        names = ["%s%d" % (prefix, i) for i in range(n)]
        table = [[names[(i + j) % n] for j in range(n)] for i in range(n)]
        return cls(names, table)


class SimplicialAction:
    """A finite group acting on a complex by simplicial automorphisms."""

    __slots__ = ("group", "complex", "vertex_maps")

    def __init__(self, group, complex, vertex_maps):
        self.group = group
        self.complex = complex
        maps = {g: dict(m) for g, m in vertex_maps.items()}
        for g in maps:
            if g not in group.index:
                raise DocumentError("vertex map for unknown element %r" % (g,))
        ident = group.identity
        maps.setdefault(ident, {v: v for v in complex.vertices})
        for g in group.elements:
            if g not in maps:
                raise DocumentError("missing vertex map for element %r" % (g,))
        vset = set(complex.vertices)
        for g, m in maps.items():
            if set(m) != vset or set(m.values()) != vset:
                raise DocumentError(
                    "vertex map for %r is not a bijection of the vertex set" % (g,))
        self.vertex_maps = maps
        for v in complex.vertices:
            if maps[ident][v] != v:
                raise ValidationError("identity element must act trivially")
        for g in group.elements:
            for h in group.elements:
                gh = group.mul(g, h)
                for v in complex.vertices:
                    if maps[h][maps[g][v]] != maps[gh][v]:
                        raise ValidationError(
                            "vertex maps break the table at (%r, %r)" % (g, h))
        for q, layer in enumerate(complex.cells):
            if q == 0:
                continue
            for cell in layer:
                for g in group.elements:
                    image = tuple(sorted((maps[g][v] for v in cell),
                                         key=complex.vertex_index.__getitem__))
                    if not complex.has_cell(image):
                        raise ValidationError(
                            "element %r does not map simplex %r to a simplex"
                            % (g, cell))

    def apply_vertex(self, g, v):
        return self.vertex_maps[g][v]

    def apply_tuple(self, g, vertices):
        """Entrywise image of an ordered vertex tuple (no re-sorting)."""
        m = self.vertex_maps[g]
        return tuple(m[v] for v in vertices)

    def apply_cell(self, g, cell):
        """Image of a stored cell, back in increasing vertex order."""
        m = self.vertex_maps[g]
        return tuple(sorted((m[v] for v in cell),
                            key=self.complex.vertex_index.__getitem__))

    def vertex_orbit(self, v):
        return sorted({self.vertex_maps[g][v] for g in self.group.elements},
                      key=self.complex.vertex_index.__getitem__)


def is_regular(action):
    """Regularity of the action in the strong, quotient-safe sense.

    For every simplex (v_0..v_q) and every tuple (g_0..g_q) of group
    elements such that the set {v_i.g_i} spans a simplex, some single g
    must satisfy v_i.g = v_i.g_i for all i.  Quantifying over tuples
    with repeated target vertices is what catches actions that flip an
    edge setwise without fixing it pointwise.
    """
    X = action.complex
    G = action.group.elements
    maps = action.vertex_maps
    key = X.vertex_index.__getitem__
    for q in range(1, X.dim + 1):
        for cell in X.cells[q]:
            for assign in product(G, repeat=q + 1):
                targets = [maps[g][v] for g, v in zip(assign, cell)]
                spanned = tuple(sorted(set(targets), key=key))
                if not X.has_cell(spanned):
                    continue
                if not any(all(maps[g][v] == t for v, t in zip(cell, targets))
                           for g in G):
                    return False
    return True


class QuotientResult:
    """Orbit-space complex plus the data needed to move cochains around.

    complex: the orbit space.  action: the regular action that was
    actually divided out (equal to the input action when no
    subdivision was needed).  subdivisions: the chain of SdResult
    records applied to reach it (empty when none).  projection: vertex
    of action.complex -> orbit vertex label.
    """

    __slots__ = ("complex", "projection", "action", "subdivisions")

    def __init__(self, complex, projection, action, subdivisions):
        self.complex = complex
        self.projection = projection
        self.action = action
        self.subdivisions = subdivisions

    @property
    def stages(self):
        return len(self.subdivisions)

    @property
    def subdivided(self):
        return bool(self.subdivisions)


def lift_action(action, sd):
    """Transport an action along a barycentric subdivision of its space."""
    lifted = {}
    for g in action.group.elements:
        m = {}
        for cell, label in sd.barycenter_of.items():
            m[label] = sd.barycenter_of[action.apply_cell(g, cell)]
        lifted[g] = m
    return SimplicialAction(action.group, sd.complex, lifted)


def quotient_complex(action):
    """Orbit space of a simplicial action.

    Irregular actions are barycentrically subdivided (at most twice,
    which always suffices) before dividing; the result records how
    many stages were applied.  Orbit vertices are labeled q0, q1, ...
    in order of their smallest representative.
    """
    subdivisions = []
    current = action
    while not is_regular(current):
        if len(subdivisions) >= 2:
            raise ValidationError(
                "action is still irregular after two subdivisions")
        sd = barycentric_subdivision(current.complex)
        current = lift_action(current, sd)
        subdivisions.append(sd)
    X = current.complex
    orbit_of = {}
    orbits = []
    for v in X.vertices:
        if v in orbit_of:
            continue
        orbit = current.vertex_orbit(v)
        orbits.append(orbit)
        for w in orbit:
            orbit_of[w] = len(orbits) - 1
    labels = ["q%d" % i for i in range(len(orbits))]
    projection = {v: labels[orbit_of[v]] for v in X.vertices}
    simplices = set()
    for q in range(1, X.dim + 1):
        for cell in X.cells[q]:
            image = tuple(sorted({projection[v] for v in cell}))
            if len(image) != len(cell):
                raise ValidationError(
                    "regular action still collapsed simplex %r" % (cell,))
            simplices.add(image)
    Y = build_complex(sorted(simplices), vertices=labels)
    return QuotientResult(Y, projection, current, subdivisions)
