"""Morse-type lower bounds checked against computed Novikov numbers.

Two families are verified for critical point counts c_j: the plain
bounds c_j >= b_j + q_j + q_{j-1}, and the alternating partial sums
sum_k (-1)^k c_{j-k} >= q_j + sum_k (-1)^k b_{j-k}.  When only betti
numbers are available (rank two and higher classes) the torsion terms
are dropped and the report says so; the certificate is then one-sided
but still a genuine necessary condition.

Violations are findings, not crashes: the report carries every row
with its slack and an overall verdict.
"""

from .errors import ValidationError

__all__ = ["CriticalData", "InequalityRow", "InequalityReport",
           "check_inequalities"]


class CriticalData:
    """Critical point counts per degree, with optional provenance."""

    __slots__ = ("counts", "provenance")

    def __init__(self, counts, provenance=None):
        cleaned = []
        for j, c in enumerate(counts):
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValidationError(
                    "critical count in degree %d is not an integer: %r"
                    % (j, c))
            if c < 0:
                raise ValidationError(
                    "negative critical count %d in degree %d" % (c, j))
            cleaned.append(c)
        self.counts = cleaned
        self.provenance = provenance

    def padded(self, top):
        """Counts padded with zeros through degree top; counts beyond
        the dimension of the space are refused."""
        if len(self.counts) > top + 1:
            extra = self.counts[top + 1:]
            if any(extra):
                raise ValidationError(
                    "critical counts extend past degree %d: %r"
                    % (top, extra))
        out = list(self.counts[:top + 1])
        out.extend([0] * (top + 1 - len(out)))
        return out

    def __repr__(self):
        return "CriticalData(%r)" % (self.counts,)


class InequalityRow:
    __slots__ = ("family", "degree", "lhs", "rhs", "slack", "ok")

    def __init__(self, family, degree, lhs, rhs):
        self.family = family
        self.degree = degree
        self.lhs = lhs
        self.rhs = rhs
        self.slack = lhs - rhs
        self.ok = lhs >= rhs

    def __repr__(self):
        mark = "ok" if self.ok else "VIOLATED"
        return ("%s degree %d: %d >= %d (slack %d, %s)"
                % (self.family, self.degree, self.lhs, self.rhs,
                   self.slack, mark))


class InequalityReport:
    """All rows of both families plus the overall verdict."""

    __slots__ = ("rows", "mode")

    def __init__(self, rows, mode):
        self.rows = rows
        self.mode = mode

    @property
    def holds(self):
        return all(row.ok for row in self.rows)

    def violations(self):
        return [row for row in self.rows if not row.ok]

    def __repr__(self):
        return ("InequalityReport(%s, %d rows, holds=%r)"
                % (self.mode, len(self.rows), self.holds))


def check_inequalities(numbers, critical):
    """Verify the lower bounds for computed numbers and given counts.

    numbers is a NovikovNumbers instance; critical a CriticalData.
    With torsion available the mode is "full", otherwise "betti-only"
    and the torsion contributions are omitted from both families.
    """
    betti = numbers.betti
    top = len(betti) - 1
    c = critical.padded(top)
    if numbers.torsion is None:
        q = [0] * (top + 1)
        mode = "betti-only"
    else:
        q = list(numbers.torsion)
        mode = "full"
    rows = []
    for j in range(top + 1):
        prev_q = q[j - 1] if j >= 1 else 0
        rows.append(InequalityRow("plain", j, c[j],
                                  betti[j] + q[j] + prev_q))
    for j in range(top + 1):
        lhs = sum((-1) ** k * c[j - k] for k in range(j + 1))
        rhs = q[j] + sum((-1) ** k * betti[j - k] for k in range(j + 1))
        rows.append(InequalityRow("alternating", j, lhs, rhs))
    return InequalityReport(rows, mode)
