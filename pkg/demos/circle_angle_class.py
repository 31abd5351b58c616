"""The discrete angle class on a triangle circle.

The sum of the three edge values is 1, so the class generates the
period lattice Z.  Its twisted homology vanishes in every degree,
which is exactly what lets a critical count of zero pass the
inequality check: a nowhere vanishing closed form needs no critical
points.
"""

from orbinov import check_inequalities, integer_homology, novikov_numbers
from orbinov.cli import resolve_document


def main():
    doc = resolve_document("circle")
    print("space:", doc.description)

    ih = integer_homology(doc.space)
    print("integer homology betti:", ih.betti)
    assert ih.betti == [1, 1]

    om = doc.cochain("dtheta")
    print("edge values:", {e: str(v[0]) for e, v in sorted(
        om.values.items())})

    nums = novikov_numbers(om)
    print("twisted numbers: betti %s, torsion %s (route %s)"
          % (nums.betti, nums.torsion, nums.route))
    assert nums.betti == [0, 0] and nums.torsion == [0, 0]

    report = check_inequalities(nums, doc.critical("flat"))
    print("against zero critical counts:")
    for row in report.rows:
        print(" ", row)
    assert report.holds and all(row.slack == 0 for row in report.rows)
    print("verdict: a free circle direction needs no critical points")


if __name__ == "__main__":
    main()
