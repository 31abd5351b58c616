"""Finite simplicial complexes with exact integer homology.

Vertices are arbitrary sortable hashable labels (the corpus uses
strings).  Cells are stored as tuples in increasing vertex order; an
input tuple in any order contributes the orientation sign of the sort
permutation.
"""

from collections import deque
from itertools import permutations

from .errors import DocumentError, ValidationError
from .snf import smith_normal_form

__all__ = ["SimplicialComplex", "build_complex", "sort_with_parity",
           "IntHomology", "integer_homology", "homology_of_matrices",
           "euler_characteristic", "SdResult", "barycentric_subdivision",
           "bfs_forest"]


def sort_with_parity(vertices, key):
    """Sort a vertex tuple, returning (sorted_tuple, sign of permutation).

    sign is None when a vertex repeats (degenerate simplex).

    >>> sort_with_parity(("c", "a", "b"), key={"a": 0, "b": 1, "c": 2})
    (('a', 'b', 'c'), 1)
    >>> sort_with_parity(("b", "a"), key={"a": 0, "b": 1})
    (('a', 'b'), -1)
    """
    seq = list(vertices)
    if len(set(seq)) != len(seq):
        return tuple(sorted(seq, key=lambda v: key[v])), None
    sign = 1
    # insertion sort; fine at simplex sizes
    for i in range(1, len(seq)):
        j = i
        while j > 0 and key[seq[j - 1]] > key[seq[j]]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return tuple(seq), sign


class SimplicialComplex:
    __slots__ = ("vertices", "vertex_index", "cells", "cell_index", "dim")

    def __init__(self, vertices, cells):
        self.vertices = list(vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.cells = cells                      # cells[q] = sorted cell list
        self.cell_index = [{c: i for i, c in enumerate(layer)}
                           for layer in cells]
        self.dim = len(cells) - 1

    def n_cells(self, q):
        return len(self.cells[q]) if 0 <= q <= self.dim else 0

    def has_cell(self, simplex):
        q = len(simplex) - 1
        if not (0 <= q <= self.dim):
            return False
        return tuple(simplex) in self.cell_index[q]

    def normalize(self, simplex):
        """Sorted form and orientation sign of a vertex tuple.

        Raises DocumentError on unknown vertices, ValidationError when
        the sorted tuple is not a cell.  Degenerate tuples get sign 0.
        """
        for v in simplex:
            if v not in self.vertex_index:
                raise DocumentError("unknown vertex %r" % (v,))
        cell, sign = sort_with_parity(simplex, self.vertex_index)
        if sign is None:
            return cell, 0
        if not self.has_cell(cell):
            raise ValidationError("%r is not a simplex of the complex"
                                  % (simplex,))
        return cell, sign

    def boundary_matrix(self, q):
        """Integer matrix of the boundary C_q -> C_{q-1}.

        Rows are indexed by (q-1)-cells, columns by q-cells, both in
        stored order.  Out-of-range q gives the appropriately shaped
        zero matrix.
        """
        rows = self.n_cells(q - 1)
        cols = self.n_cells(q)
        mat = [[0] * cols for _ in range(rows)]
        if q <= 0 or q > self.dim:
            return mat
        idx = self.cell_index[q - 1]
        for j, cell in enumerate(self.cells[q]):
            sign = 1
            for drop in range(len(cell)):
                face = cell[:drop] + cell[drop + 1:]
                mat[idx[face]][j] += sign
                sign = -sign
        return mat

    def edges(self):
        return self.cells[1] if self.dim >= 1 else []

    def __repr__(self):
        counts = [len(layer) for layer in self.cells]
        return "SimplicialComplex(%s cells by dim)" % (counts,)


def build_complex(simplices, vertices=None):
    """Build a complex from generating simplices, closing under faces.

    simplices: iterable of vertex tuples in any order (orientation is
    normalized away; storage order is increasing).  vertices fixes the
    vertex order and admits isolated vertices; when omitted it is the
    sorted set of vertices that occur.

    >>> X = build_complex([("a", "b", "c")])
    >>> [len(layer) for layer in X.cells]
    [3, 3, 1]
    >>> X.boundary_matrix(2)
    [[1], [-1], [1]]
    """
    gens = [tuple(s) for s in simplices]
    if vertices is None:
        seen = sorted({v for s in gens for v in s})
    else:
        seen = list(vertices)
        if len(set(seen)) != len(seen):
            raise DocumentError("duplicate vertex in vertex list")
    if not seen:
        raise DocumentError("empty complex: no vertices")
    index = {v: i for i, v in enumerate(seen)}
    layers = [set((v,) for v in seen)]
    for s in gens:
        for v in s:
            if v not in index:
                raise DocumentError("unknown vertex %r in simplex %r" % (v, s))
        if len(set(s)) != len(s):
            raise DocumentError("repeated vertex in simplex %r" % (s,))
        cell = tuple(sorted(s, key=index.__getitem__))
        q = len(cell) - 1
        while len(layers) <= q:
            layers.append(set())
        layers[q].add(cell)
    # close under faces
    for q in range(len(layers) - 1, 1, -1):
        for cell in layers[q]:
            for drop in range(len(cell)):
                layers[q - 1].add(cell[:drop] + cell[drop + 1:])
    cells = [sorted(layer, key=lambda c: tuple(index[v] for v in c))
             for layer in layers]
    return SimplicialComplex(seen, cells)


def euler_characteristic(X):
    """Alternating sum of cell counts.

    >>> euler_characteristic(build_complex([("a", "b", "c")]))
    1
    """
    return sum((-1) ** q * len(layer) for q, layer in enumerate(X.cells))


def bfs_forest(X):
    """Breadth-first spanning forest of the 1-skeleton.

    Returns (roots, parent, order): one root per connected component
    (its lowest vertex), parent[v] = previous vertex on the tree path
    (roots absent), and the visit order.  Deterministic: neighbors are
    taken in vertex order.
    """
    adj = {v: [] for v in X.vertices}
    for (u, v) in (X.cells[1] if X.dim >= 1 else []):
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort(key=X.vertex_index.__getitem__)
    roots = []
    parent = {}
    order = []
    seen = set()
    for start in X.vertices:
        if start in seen:
            continue
        roots.append(start)
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = u
                    queue.append(w)
    return roots, parent, order


class IntHomology:
    """Integer homology: betti[q] and torsion[q] (invariant factors > 1)."""

    __slots__ = ("betti", "torsion")

    def __init__(self, betti, torsion):
        self.betti = betti
        self.torsion = torsion

    def __repr__(self):
        return "IntHomology(betti=%r, torsion=%r)" % (self.betti, self.torsion)

    def __eq__(self, other):
        return (isinstance(other, IntHomology)
                and self.betti == other.betti
                and self.torsion == other.torsion)


def homology_of_matrices(ncells, boundaries):
    """Homology of a bounded chain complex of free Z-modules.

    ncells[q] is the rank in degree q; boundaries[q] maps degree q to
    q-1 (boundaries[0] is ignored).  The composite of consecutive maps
    is checked to vanish.
    """
    top = len(ncells) - 1
    ranks = []
    snfs = []
    for q in range(top + 2):
        if 1 <= q <= top:
            mat = boundaries[q]
            assert len(mat) == (ncells[q - 1] if q >= 1 else 0)
            assert all(len(r) == ncells[q] for r in mat)
            snfs.append(smith_normal_form(mat))
            ranks.append(snfs[-1].rank)
        else:
            snfs.append(None)
            ranks.append(0)
    for q in range(1, top):
        comp = _mat_mul_int(boundaries[q], boundaries[q + 1])
        if any(any(row) for row in comp):
            raise ValidationError("boundary squared is nonzero in degree %d"
                                  % (q + 1,))
    betti = [ncells[q] - ranks[q] - ranks[q + 1] for q in range(top + 1)]
    torsion = []
    for q in range(top + 1):
        snf = snfs[q + 1]
        torsion.append(snf.torsion() if snf is not None else [])
    if any(b < 0 for b in betti):
        raise ValidationError("negative betti number; ranks are inconsistent")
    return IntHomology(betti, torsion)


def _mat_mul_int(A, B):
    if not A or not B:
        return []
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


def integer_homology(X):
    """Exact integer homology of a simplicial complex.

    >>> H = integer_homology(build_complex([("a", "b"), ("b", "c"), ("a", "c")]))
    >>> H.betti
    [1, 1]
    >>> H.torsion
    [[], []]
    """
    ncells = [len(layer) for layer in X.cells]
    boundaries = [X.boundary_matrix(q) for q in range(X.dim + 1)]
    return homology_of_matrices(ncells, boundaries)


class SdResult:
    """Barycentric subdivision with the cell <-> barycenter dictionaries."""

    __slots__ = ("complex", "barycenter_of", "cell_of")

    def __init__(self, complex, barycenter_of, cell_of):
        self.complex = complex
        self.barycenter_of = barycenter_of
        self.cell_of = cell_of


def _bar_label(cell):
    return "(" + ",".join(str(v) for v in cell) + ")"


def barycentric_subdivision(X):
    """First barycentric subdivision.

    New vertices are barycenters of cells of X, labeled by the cell;
    simplices are flags of proper faces.  Vertex order of the new
    complex is (dimension, stored cell order), so original vertices
    come first.

    >>> sd = barycentric_subdivision(build_complex([("a", "b")]))
    >>> sd.complex.vertices
    ['(a)', '(b)', '(a,b)']
    >>> len(sd.complex.cells[1])
    2
    """
    barycenter_of = {}
    order = []
    for layer in X.cells:
        for cell in layer:
            label = _bar_label(cell)
            barycenter_of[cell] = label
            order.append(label)
    if len(set(order)) != len(order):
        # vertex labels containing commas can alias two cells
        raise DocumentError("barycenter label collision")
    cell_of = {lab: cell for cell, lab in barycenter_of.items()}
    maximal = []
    for q, layer in enumerate(X.cells):
        for cell in layer:
            if q == X.dim or not _has_coface(X, cell, q):
                maximal.append(cell)
    simplices = []
    for cell in maximal:
        for perm in permutations(cell):
            chain = []
            for k in range(1, len(perm) + 1):
                face = tuple(sorted(perm[:k], key=X.vertex_index.__getitem__))
                chain.append(barycenter_of[face])
            simplices.append(tuple(chain))
    return SdResult(build_complex(simplices, vertices=order),
                    barycenter_of, cell_of)


def _has_coface(X, cell, q):
    if q + 1 > X.dim:
        return False
    cset = set(cell)
    for cand in X.cells[q + 1]:
        if cset.issubset(cand):
            return True
    return False
