"""Three finite group actions and their orbit spaces.

A free half turn on a hexagon gives a smaller circle; a reflection of
a square circle gives a mirrored interval; the point reflection of a
grid torus gives the pillowcase sphere with four cone points.  The
quotient builder subdivides only when some group element identifies a
simplex with itself the wrong way.
"""

from orbinov import integer_homology, is_regular, novikov_numbers, \
    quotient_complex
from orbinov.cli import resolve_document
from orbinov.cochains import descend_cochain


def show(name, cocycle=None):
    doc = resolve_document(name)
    act = doc.action
    print("%s: %s" % (name, doc.description))
    print("  regular as given:", is_regular(act))
    qres = quotient_complex(act)
    X = qres.complex
    print("  subdivision stages:", qres.stages)
    sizes = [X.n_cells(q) for q in range(X.dim + 1)]
    print("  orbit space cells by degree:", sizes)
    ih = integer_homology(X)
    print("  orbit homology: betti %s, torsion %s" % (ih.betti, ih.torsion))
    if cocycle:
        om = descend_cochain(qres, doc.cochain(cocycle))
        nums = novikov_numbers(om)
        print("  %s descends; twisted betti %s, torsion counts %s"
              % (cocycle, nums.betti, nums.torsion))
    print()
    return qres, ih


def main():
    qres, ih = show("hexagon_z2", cocycle="dtheta")
    assert qres.stages == 0 and ih.betti == [1, 1]

    qres, ih = show("mirror_square", cocycle="across")
    assert qres.stages == 1 and ih.betti == [1, 0]

    qres, ih = show("pillowcase")
    assert ih.betti == [1, 0, 1] and ih.torsion == [[], [], []]
    print("the pillowcase is a sphere in homology: the four cone "
          "points are invisible to it")


if __name__ == "__main__":
    main()
