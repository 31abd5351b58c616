"""Regenerate the bundled corpus documents.

Builds each example, verifies its advertised properties (homology,
ranks, novikov numbers, inequality slacks, round-trips, and the full
validate command), and only then writes canonical JSON into
src/orbinov/corpus/.  Run from the repository root:

    python3 tools/make_corpus.py
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from orbinov import (H1Presentation, check_inequalities, gamma_basis,
                     integer_homology, novikov_numbers, period_homomorphism,
                     quotient_complex)
from orbinov.cli import main as cli_main
from orbinov.cochains import descend_cochain
from orbinov.complexes import build_complex
from orbinov.documents import OrbifoldDocument, format_fraction, \
    loads_document
from orbinov.qlinalg import q_solve

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "orbinov",
                       "corpus")

Z2_GROUP = {"elements": ["e", "m"], "table": [["e", "m"], ["m", "e"]]}


def solve_cocycle(X, targets):
    """Closed rational edge values with prescribed free-generator periods.

    targets[i] is the requested period of the i-th free H_1 generator.
    Unknowns are one rational per edge; equations are closedness on
    every triangle plus the period of every free generator, written
    through fundamental cycles of the off-tree edges.
    """
    edges = X.cells[1]
    index = {e: i for i, e in enumerate(edges)}
    key = X.vertex_index.__getitem__
    rows, rhs = [], []
    for (a, b, c) in (X.cells[2] if X.dim >= 2 else []):
        row = [0] * len(edges)
        row[index[(a, b)]] += 1
        row[index[(b, c)]] += 1
        row[index[(a, c)]] -= 1
        rows.append(row)
        rhs.append(0)
    h1 = H1Presentation(X)
    free = [(cyc, t) for cyc, order, t in
            zip(h1.generator_cycles, h1.orders,
                iter_targets(targets, h1.orders)) if order == 0]
    for cyc, target in free:
        row = [0] * len(edges)
        for j, mult in enumerate(cyc):
            if not mult:
                continue
            u, v = h1.offtree[j]
            walk = [u, v] + h1.tree_walk(v, u)[1:]
            for a, b in zip(walk, walk[1:]):
                if a == b:
                    continue
                e = (a, b) if key(a) < key(b) else (b, a)
                row[index[e]] += mult if e == (a, b) else -mult
        rows.append(row)
        rhs.append(target)
    sol = q_solve(rows, [Fraction(x) for x in rhs])
    assert sol is not None, "period targets are not realizable"
    return {e: sol[i] for e, i in index.items() if sol[i]}


def iter_targets(targets, orders):
    it = iter(targets)
    return [next(it) if order == 0 else None for order in orders]


def merge_coordinates(X, per_coordinate):
    """Zip k separate rational cocycles into one vector-valued edge list."""
    k = len(per_coordinate)
    edges = sorted(set().union(*[set(d) for d in per_coordinate]),
                   key=lambda e: (X.vertex_index[e[0]],
                                  X.vertex_index[e[1]]))
    out = []
    for e in edges:
        vec = [d.get(e, Fraction(0)) for d in per_coordinate]
        out.append([e[0], e[1], [format_fraction(x) for x in vec]])
    return out


def edges_entry(X, values):
    return merge_coordinates(X, [values])


def cocycle_dict(edges, symbols=(), shadows=None):
    return {"symbols": list(symbols), "shadows": dict(shadows or {}),
            "edges": edges}


def orbit_dict(X):
    doc = OrbifoldDocument("", "", None, X, {}, {})
    return doc._space_dict(X)


def expect(cond, what):
    if not cond:
        raise AssertionError("corpus verification failed: %s" % (what,))


def verify_inequalities(numbers, critical, want_slacks=None, want_holds=True):
    report = check_inequalities(numbers, critical)
    expect(report.holds == want_holds,
           "verdict %r, wanted %r" % (report.holds, want_holds))
    if want_slacks is not None:
        expect(all(row.slack == s for row, s in
                   zip(report.rows, want_slacks)),
               "slacks %r != %r" % ([r.slack for r in report.rows],
                                    want_slacks))
    return report


def doc_orbit_cochain(doc, name):
    om = doc.cochain(name)
    if doc.action is None:
        return doc.space, om
    qres = quotient_complex(doc.action)
    return qres.complex, descend_cochain(qres, om)


def rank_of(X, om):
    return len(gamma_basis(period_homomorphism(H1Presentation(X), om)))


# ---------------------------------------------------------------- circle

def make_circle():
    X = build_complex([("a", "b"), ("b", "c"), ("a", "c")],
                      vertices=["a", "b", "c"])
    third = Fraction(1, 3)
    dtheta = {("a", "b"): third, ("b", "c"): third, ("a", "c"): -third}
    data = {
        "name": "circle",
        "description": "Triangle model of the circle with the discrete "
                       "angle class: total period 1, no critical points.",
        "orbit": orbit_dict(X),
        "cocycles": {
            "dtheta": cocycle_dict(edges_entry(X, dtheta)),
            "zero": cocycle_dict([]),
        },
        "critical_data": {
            "flat": {"counts": [0, 0],
                     "provenance": "a closed form with no zeroes"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    ih = integer_homology(doc.space)
    expect(ih.betti == [1, 1] and ih.torsion == [[], []], "circle homology")
    om = doc.cochain("dtheta")
    expect(rank_of(doc.space, om) == 1, "circle rank")
    nums = novikov_numbers(om)
    expect(nums.betti == [0, 0] and nums.torsion == [0, 0],
           "circle novikov")
    verify_inequalities(nums, doc.critical("flat"), want_slacks=[0] * 4)
    return doc


# ---------------------------------------------------------------- rp2

RP2_TRIANGLES = [(1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
                 (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6)]


def make_rp2():
    names = ["v%d" % i for i in range(1, 7)]
    cells = [tuple("v%d" % i for i in tri) for tri in RP2_TRIANGLES]
    X = build_complex(cells, vertices=names)
    data = {
        "name": "rp2",
        "description": "Six vertex triangulation of the real projective "
                       "plane; order two torsion in degree one.",
        "orbit": orbit_dict(X),
        "cocycles": {"zero": cocycle_dict([])},
        "critical_data": {
            "minimal": {"counts": [1, 1, 1],
                        "provenance": "perfect Morse vector for the "
                                      "projective plane"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    ih = integer_homology(doc.space)
    expect(ih.betti == [1, 0, 0] and ih.torsion == [[], [2], []],
           "rp2 homology")
    nums = novikov_numbers(doc.cochain("zero"))
    expect(nums.betti == [1, 0, 0] and nums.torsion == [0, 1, 0],
           "rp2 novikov at zero")
    verify_inequalities(nums, doc.critical("minimal"),
                        want_slacks=[0] * 6)
    return doc


# ---------------------------------------------------------------- torus7

def make_torus7():
    names = ["v%d" % i for i in range(7)]
    cells = []
    for i in range(7):
        cells.append(tuple("v%d" % ((i + d) % 7) for d in (0, 1, 3)))
        cells.append(tuple("v%d" % ((i + d) % 7) for d in (0, 2, 3)))
    X = build_complex(cells, vertices=names)
    e1_values = solve_cocycle(X, [1, 0])
    irr0 = solve_cocycle(X, [1, 0])
    irr1 = solve_cocycle(X, [0, 1])
    data = {
        "name": "torus7",
        "description": "Seven vertex torus (complete graph on seven "
                       "vertices); one lattice class and one class with "
                       "an irrational direction.",
        "orbit": orbit_dict(X),
        "cocycles": {
            "zero": cocycle_dict([]),
            "e1": cocycle_dict(edges_entry(X, e1_values)),
            "irr": cocycle_dict(merge_coordinates(X, [irr0, irr1]),
                                symbols=["alpha"],
                                shadows={"alpha": "1.41421356"}),
        },
        "critical_data": {
            "flat": {"counts": [0, 0, 0],
                     "provenance": "a closed form with no zeroes"},
            "height": {"counts": [1, 2, 1],
                       "provenance": "standard height on the torus"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    ih = integer_homology(doc.space)
    expect(ih.betti == [1, 2, 1] and all(t == [] for t in ih.torsion),
           "torus7 homology")
    nums0 = novikov_numbers(doc.cochain("zero"))
    expect(nums0.betti == [1, 2, 1] and nums0.torsion == [0, 0, 0],
           "torus7 novikov at zero")
    verify_inequalities(nums0, doc.critical("height"),
                        want_slacks=[0] * 6)
    om1 = doc.cochain("e1")
    expect(rank_of(doc.space, om1) == 1, "torus7 e1 rank")
    nums1 = novikov_numbers(om1)
    expect(nums1.betti == [0, 0, 0] and nums1.torsion == [0, 0, 0],
           "torus7 e1 novikov")
    verify_inequalities(nums1, doc.critical("flat"), want_slacks=[0] * 6)
    om2 = doc.cochain("irr")
    expect(rank_of(doc.space, om2) == 2, "torus7 irr rank")
    nums2 = novikov_numbers(om2)
    expect(nums2.betti == [0, 0, 0] and nums2.torsion is None,
           "torus7 irr novikov")
    return doc


# ---------------------------------------------------------------- klein

def make_klein():
    n = 4

    def nb(x, y):
        if y < n:
            return "g%d_%d" % (x % n, y)
        return "g%d_%d" % ((-x) % n, 0)

    cells = []
    dy = {}
    quarter = Fraction(1, 4)
    for x in range(n):
        for y in range(n):
            p, q = nb(x, y), nb(x + 1, y)
            r, s = nb(x, y + 1), nb(x + 1, y + 1)
            cells.append((p, q, s))
            cells.append((p, s, r))
            dy[(p, r)] = quarter
            dy[(p, s)] = quarter
    vertices = ["g%d_%d" % (x, y) for x in range(n) for y in range(n)]
    X = build_complex(cells, vertices=vertices)
    data = {
        "name": "klein",
        "description": "Sixteen vertex Klein bottle built from a grid "
                       "with a flipped vertical gluing; the base circle "
                       "class has nowhere vanishing representatives.",
        "orbit": orbit_dict(X),
        "cocycles": {
            "zero": cocycle_dict([]),
            "dy": cocycle_dict(edges_entry(X, dy)),
        },
        "critical_data": {
            "flat": {"counts": [0, 0, 0],
                     "provenance": "a closed form with no zeroes"},
            "height": {"counts": [1, 2, 1],
                       "provenance": "minimal Morse vector for the "
                                     "Klein bottle"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    ih = integer_homology(doc.space)
    expect(ih.betti == [1, 1, 0] and ih.torsion == [[], [2], []],
           "klein homology")
    nums0 = novikov_numbers(doc.cochain("zero"))
    expect(nums0.betti == [1, 1, 0] and nums0.torsion == [0, 1, 0],
           "klein novikov at zero")
    verify_inequalities(nums0, doc.critical("height"),
                        want_slacks=[0] * 6)
    om = doc.cochain("dy")
    expect(rank_of(doc.space, om) == 1, "klein dy rank")
    nums = novikov_numbers(om)
    expect(nums.betti == [0, 0, 0] and nums.torsion == [0, 0, 0],
           "klein dy novikov")
    verify_inequalities(nums, doc.critical("flat"), want_slacks=[0] * 6)
    return doc


# ---------------------------------------------------------------- hexagon

def make_hexagon():
    labels = ["h%d" % i for i in range(6)]
    edges = [(labels[i], labels[(i + 1) % 6]) for i in range(6)]
    X = build_complex(edges, vertices=labels)
    sixth = Fraction(1, 6)
    values = {("h%d" % i, "h%d" % (i + 1)): sixth for i in range(5)}
    values[("h0", "h5")] = -sixth
    data = {
        "name": "hexagon_z2",
        "description": "Hexagonal circle with the free half turn; the "
                       "angle class descends to the quotient circle.",
        "action": {
            "group": dict(Z2_GROUP),
            "space": orbit_dict(X),
            "vertex_maps": {"m": {"h%d" % i: "h%d" % ((i + 3) % 6)
                                  for i in range(6)}},
        },
        "cocycles": {
            "dtheta": cocycle_dict(edges_entry(X, values)),
            "zero": cocycle_dict([]),
        },
        "critical_data": {
            "flat": {"counts": [0, 0],
                     "provenance": "a closed form with no zeroes"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    qres = quotient_complex(doc.action)
    expect(qres.stages == 0, "hexagon quotient needs no subdivision")
    ih = integer_homology(qres.complex)
    expect(ih.betti == [1, 1], "hexagon orbit homology")
    Xq, om = doc_orbit_cochain(doc, "dtheta")
    expect(rank_of(Xq, om) == 1, "hexagon dtheta rank")
    nums = novikov_numbers(om)
    expect(nums.betti == [0, 0] and nums.torsion == [0, 0],
           "hexagon dtheta novikov")
    verify_inequalities(nums, doc.critical("flat"), want_slacks=[0] * 4)
    return doc


# ---------------------------------------------------------------- mirror square

def make_mirror_square():
    labels = ["s%d" % i for i in range(4)]
    edges = [(labels[i], labels[(i + 1) % 4]) for i in range(4)]
    X = build_complex(edges, vertices=labels)
    values = {("s1", "s2"): Fraction(1), ("s0", "s3"): Fraction(1)}
    data = {
        "name": "mirror_square",
        "description": "Square circle reflected across a diagonal; the "
                       "orbit space is a mirrored interval.",
        "action": {
            "group": dict(Z2_GROUP),
            "space": orbit_dict(X),
            "vertex_maps": {"m": {"s0": "s1", "s1": "s0",
                                  "s2": "s3", "s3": "s2"}},
        },
        "cocycles": {
            "across": cocycle_dict(edges_entry(X, values)),
            "zero": cocycle_dict([]),
        },
        "critical_data": {
            "min": {"counts": [1, 0],
                    "provenance": "single minimum on the quotient "
                                  "interval"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    qres = quotient_complex(doc.action)
    expect(qres.stages == 1, "mirror square needs one subdivision")
    ih = integer_homology(qres.complex)
    expect(ih.betti == [1, 0], "mirror square orbit homology")
    Xq, om = doc_orbit_cochain(doc, "across")
    expect(rank_of(Xq, om) == 0, "across descends to an exact cochain")
    nums = novikov_numbers(om)
    expect(nums.betti == [1, 0] and nums.torsion == [0, 0],
           "mirror square novikov")
    verify_inequalities(nums, doc.critical("min"), want_slacks=[0] * 4)
    return doc


# ---------------------------------------------------------------- pillowcase

def torus_grid_cells(n, label):
    cells = []
    for x in range(n):
        for y in range(n):
            p = label(x, y)
            q = label(x + 1, y)
            r = label(x, y + 1)
            s = label(x + 1, y + 1)
            cells.append((p, q, s))
            cells.append((p, s, r))
    return cells


def make_pillowcase():
    n = 4

    def label(x, y):
        return "g%d_%d" % (x % n, y % n)

    vertices = [label(x, y) for x in range(n) for y in range(n)]
    X = build_complex(torus_grid_cells(n, label), vertices=vertices)
    data = {
        "name": "pillowcase",
        "description": "Grid torus modulo the point reflection; the "
                       "orbit space is a sphere with four cone points.",
        "action": {
            "group": dict(Z2_GROUP),
            "space": orbit_dict(X),
            "vertex_maps": {"m": {label(x, y): label(-x, -y)
                                  for x in range(n) for y in range(n)}},
        },
        "cocycles": {"zero": cocycle_dict([])},
        "critical_data": {
            "minimal": {"counts": [1, 0, 1],
                        "provenance": "one minimum and one maximum on "
                                      "the quotient sphere"},
            "bump": {"counts": [2, 1, 2],
                     "provenance": "non minimal counts with cancelling "
                                   "pairs"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    qres = quotient_complex(doc.action)
    ih = integer_homology(qres.complex)
    expect(ih.betti == [1, 0, 1] and all(t == [] for t in ih.torsion),
           "pillowcase orbit homology")
    Xq, om = doc_orbit_cochain(doc, "zero")
    nums = novikov_numbers(om)
    expect(nums.betti == [1, 0, 1] and nums.torsion == [0, 0, 0],
           "pillowcase novikov at zero")
    verify_inequalities(nums, doc.critical("minimal"),
                        want_slacks=[0] * 6)
    verify_inequalities(nums, doc.critical("bump"))
    return doc


# ---------------------------------------------------------------- mirror cylinder

def make_mirror_cylinder():
    ni, nj = 6, 4

    def label(i, j):
        return "c%d_%d" % (i % ni, j % nj)

    cells = []
    dx = {}
    sixth = Fraction(1, 6)
    for i in range(ni):
        for j in range(nj):
            p, q = label(i, j), label(i + 1, j)
            r, s = label(i, j + 1), label(i + 1, j + 1)
            if j in (0, 1):
                cells.append((p, q, s))
                cells.append((p, s, r))
                dx[(p, s)] = sixth
            else:
                cells.append((p, q, r))
                cells.append((q, s, r))
                dx[(q, r)] = -sixth
            dx[(p, q)] = sixth
    vertices = [label(i, j) for i in range(ni) for j in range(nj)]
    X = build_complex(cells, vertices=vertices)
    data = {
        "name": "mirror_cylinder",
        "description": "Product of a free circle with a reflected "
                       "circle; the orbit space is a cylinder and the "
                       "free direction gives a nowhere vanishing class.",
        "action": {
            "group": dict(Z2_GROUP),
            "space": orbit_dict(X),
            "vertex_maps": {"m": {label(i, j): label(i, -j)
                                  for i in range(ni) for j in range(nj)}},
        },
        "cocycles": {
            "dx": cocycle_dict(edges_entry(X, dx)),
            "zero": cocycle_dict([]),
        },
        "critical_data": {
            "flat": {"counts": [0, 0, 0],
                     "provenance": "a closed form with no zeroes"},
        },
    }
    doc = OrbifoldDocument.from_dict(data)
    qres = quotient_complex(doc.action)
    ih = integer_homology(qres.complex)
    expect(ih.betti == [1, 1, 0] and all(t == [] for t in ih.torsion),
           "mirror cylinder orbit homology")
    Xq, om = doc_orbit_cochain(doc, "dx")
    expect(rank_of(Xq, om) == 1, "mirror cylinder dx rank")
    nums = novikov_numbers(om)
    expect(nums.betti == [0, 0, 0] and nums.torsion == [0, 0, 0],
           "mirror cylinder dx novikov")
    verify_inequalities(nums, doc.critical("flat"), want_slacks=[0] * 6)
    return doc


MAKERS = [make_circle, make_rp2, make_torus7, make_klein, make_hexagon,
          make_mirror_square, make_pillowcase, make_mirror_cylinder]


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    paths = []
    for make in MAKERS:
        doc = make()
        text = doc.serialize()
        again = loads_document(text)
        expect(again.serialize() == text, "%s round-trip" % (doc.name,))
        path = os.path.join(OUT_DIR, doc.name + ".json")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        paths.append(path)
        print("wrote %s" % (path,))
    for path in paths:
        code = cli_main(["validate", path])
        expect(code == 0, "validate %s exited %d" % (path, code))
    print("all %d documents verified" % (len(paths),))


if __name__ == "__main__":
    main()
