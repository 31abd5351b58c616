"""Reading and writing the engine's document format.

A document is a JSON object describing one orbifold presentation plus
its named cocycles and optional critical point counts.  Exactly one of
"action" (a finite group acting on a complex) or "orbit" (a bare
complex) is present.  All numbers are exact: rationals are "p/q"
strings, and the only decimals allowed are the advisory shadows
attached to declared irrational symbols.

Parsing is strict.  Unknown keys, floats where rationals belong,
dangling vertices and malformed tables are DocumentErrors with a field
path; mathematical violations (a value on a non-edge, a non-closed
cocycle) surface later as ValidationErrors when the cochain is built.
serialize() emits a canonical form: sorted keys, edges oriented by
vertex order, maximal simplices only.  parse(serialize(parse(s)))
equals parse(s).
"""

import json
import re
from fractions import Fraction

from .actions import FiniteGroup, SimplicialAction
from .cochains import PeriodSpace, RationalCochain1
from .complexes import build_complex
from .errors import DocumentError
from .inequalities import CriticalData

__all__ = ["OrbifoldDocument", "load_document", "loads_document",
           "parse_fraction", "format_fraction"]

_FRACTION_RE = re.compile(r"-?\d+(/[1-9]\d*)?\Z")
_DECIMAL_RE = re.compile(r"-?\d+(\.\d+)?\Z")


def parse_fraction(text, where):
    """Exact rational from a "p/q" or "p" string.

    >>> parse_fraction("-3/6", "x")
    Fraction(-1, 2)
    """
    if not isinstance(text, str) or not _FRACTION_RE.match(text):
        raise DocumentError("%s: expected a p/q string, got %r"
                            % (where, text))
    return Fraction(text)


def format_fraction(fr):
    """Canonical "p/q" or "p" string of a rational.

    >>> format_fraction(Fraction(-2, 4)), format_fraction(Fraction(5))
    ('-1/2', '5')
    """
    if fr.denominator == 1:
        return "%d" % (fr.numerator,)
    return "%d/%d" % (fr.numerator, fr.denominator)


def _expect(obj, kind, where, kindname):
    if not isinstance(obj, kind):
        raise DocumentError("%s: expected %s, got %r"
                            % (where, kindname, type(obj).__name__))
    return obj


def _check_keys(obj, allowed, where):
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise DocumentError("%s: unknown keys %s" % (where, extra))


def _parse_space(obj, where):
    _expect(obj, dict, where, "an object")
    _check_keys(obj, ("vertices", "simplices"), where)
    if "vertices" not in obj or "simplices" not in obj:
        raise DocumentError("%s: needs vertices and simplices" % (where,))
    vertices = _expect(obj["vertices"], list, where + ".vertices", "a list")
    for v in vertices:
        _expect(v, str, where + ".vertices", "vertex names")
    simplices = _expect(obj["simplices"], list, where + ".simplices",
                        "a list")
    cells = []
    for i, cell in enumerate(simplices):
        spot = "%s.simplices[%d]" % (where, i)
        _expect(cell, list, spot, "a list")
        for v in cell:
            _expect(v, str, spot, "vertex names")
        cells.append(tuple(cell))
    return build_complex(cells, vertices=vertices)


def _parse_group(obj, where):
    _expect(obj, dict, where, "an object")
    _check_keys(obj, ("elements", "table"), where)
    if "elements" not in obj or "table" not in obj:
        raise DocumentError("%s: needs elements and table" % (where,))
    elements = _expect(obj["elements"], list, where + ".elements", "a list")
    table = _expect(obj["table"], list, where + ".table", "a list")
    return FiniteGroup(elements, table)


def _parse_action(obj, where):
    _expect(obj, dict, where, "an object")
    _check_keys(obj, ("group", "space", "vertex_maps"), where)
    for field in ("group", "space", "vertex_maps"):
        if field not in obj:
            raise DocumentError("%s: needs %s" % (where, field))
    group = _parse_group(obj["group"], where + ".group")
    space = _parse_space(obj["space"], where + ".space")
    raw = _expect(obj["vertex_maps"], dict, where + ".vertex_maps",
                  "an object")
    maps = {}
    for g, table in raw.items():
        spot = "%s.vertex_maps.%s" % (where, g)
        maps[g] = dict(_expect(table, dict, spot, "an object"))
    return SimplicialAction(group, space, maps)


def _parse_cocycle(obj, X, where):
    _expect(obj, dict, where, "an object")
    _check_keys(obj, ("symbols", "shadows", "edges"), where)
    symbols = _expect(obj.get("symbols", []), list, where + ".symbols",
                      "a list")
    for s in symbols:
        _expect(s, str, where + ".symbols", "symbol names")
    if len(set(symbols)) != len(symbols):
        raise DocumentError("%s.symbols: repeated symbol" % (where,))
    shadows = _expect(obj.get("shadows", {}), dict, where + ".shadows",
                      "an object")
    for sym, dec in shadows.items():
        spot = "%s.shadows.%s" % (where, sym)
        if sym not in symbols:
            raise DocumentError("%s: not a declared symbol" % (spot,))
        if not isinstance(dec, str) or not _DECIMAL_RE.match(dec):
            raise DocumentError("%s: expected a decimal string, got %r"
                                % (spot, dec))
    k = 1 + len(symbols)
    edges = _expect(obj.get("edges", []), list, where + ".edges", "a list")
    parsed = []
    seen = set()
    for i, entry in enumerate(edges):
        spot = "%s.edges[%d]" % (where, i)
        _expect(entry, list, spot, "a [u, v, value] triple")
        if len(entry) != 3:
            raise DocumentError("%s: expected a [u, v, value] triple"
                                % (spot,))
        u, v, value = entry
        _expect(u, str, spot, "vertex names")
        _expect(v, str, spot, "vertex names")
        for w in (u, v):
            if w not in X.vertex_index:
                raise DocumentError("%s: unknown vertex %r" % (spot, w))
        key = (u, v) if X.vertex_index[u] < X.vertex_index[v] else (v, u)
        if u == v or not X.has_cell(key):
            raise DocumentError("%s: (%r, %r) is not an edge" % (spot, u, v))
        if key in seen:
            raise DocumentError("%s: edge assigned twice" % (spot,))
        seen.add(key)
        if isinstance(value, str):
            value = [value]
        _expect(value, list, spot, "a list of p/q strings")
        if len(value) != k:
            raise DocumentError(
                "%s: value needs %d coordinates (1 + symbols), got %d"
                % (spot, k, len(value)))
        vec = tuple(parse_fraction(x, spot) for x in value)
        parsed.append((u, v, vec))
    return {"symbols": list(symbols),
            "shadows": {s: shadows[s] for s in symbols if s in shadows},
            "edges": parsed}


def _parse_critical(obj, where):
    _expect(obj, dict, where, "an object")
    _check_keys(obj, ("counts", "provenance"), where)
    counts = _expect(obj.get("counts", []), list, where + ".counts",
                     "a list")
    for c in counts:
        if not isinstance(c, int) or isinstance(c, bool):
            raise DocumentError("%s.counts: expected integers, got %r"
                                % (where, c))
    provenance = obj.get("provenance")
    if provenance is not None:
        _expect(provenance, str, where + ".provenance", "a string")
    return CriticalData(counts, provenance)


class OrbifoldDocument:
    """One presentation, its named cocycles, and critical data."""

    __slots__ = ("name", "description", "action", "space",
                 "cocycle_specs", "critical_blocks")

    def __init__(self, name, description, action, space,
                 cocycle_specs, critical_blocks):
        self.name = name
        self.description = description
        self.action = action
        self.space = space
        self.cocycle_specs = cocycle_specs
        self.critical_blocks = critical_blocks

    @classmethod
    def from_dict(cls, data):
        _expect(data, dict, "document", "an object")
        _check_keys(data, ("name", "description", "action", "orbit",
                           "cocycles", "critical_data"), "document")
        name = _expect(data.get("name", ""), str, "name", "a string")
        description = _expect(data.get("description", ""), str,
                              "description", "a string")
        has_action = "action" in data
        has_orbit = "orbit" in data
        if has_action == has_orbit:
            raise DocumentError(
                "document: exactly one of action and orbit is required")
        if has_action:
            action = _parse_action(data["action"], "action")
            space = action.complex
        else:
            action = None
            space = _parse_space(data["orbit"], "orbit")
        raw_cocycles = _expect(data.get("cocycles", {}), dict, "cocycles",
                               "an object")
        cocycle_specs = {}
        for cname, spec in raw_cocycles.items():
            cocycle_specs[cname] = _parse_cocycle(
                spec, space, "cocycles.%s" % (cname,))
        raw_critical = _expect(data.get("critical_data", {}), dict,
                               "critical_data", "an object")
        critical_blocks = {}
        for bname, spec in raw_critical.items():
            critical_blocks[bname] = _parse_critical(
                spec, "critical_data.%s" % (bname,))
        return cls(name, description, action, space,
                   cocycle_specs, critical_blocks)

    def cocycle_names(self):
        return sorted(self.cocycle_specs)

    def critical_names(self):
        return sorted(self.critical_blocks)

    def period_space(self, name):
        spec = self._spec(name)
        shadows = {s: Fraction(d) for s, d in spec["shadows"].items()}
        return PeriodSpace(spec["symbols"], shadows)

    def cochain(self, name):
        """Materialize a named cocycle; closedness is checked here."""
        spec = self._spec(name)
        values = {(u, v): vec for (u, v, vec) in spec["edges"]}
        return RationalCochain1(self.space, values,
                                space=self.period_space(name))

    def critical(self, name):
        if name not in self.critical_blocks:
            raise DocumentError("no critical data named %r (have: %s)"
                                % (name, ", ".join(self.critical_names())))
        return self.critical_blocks[name]

    def _spec(self, name):
        if name not in self.cocycle_specs:
            raise DocumentError("no cocycle named %r (have: %s)"
                                % (name, ", ".join(self.cocycle_names())))
        return self.cocycle_specs[name]

    def _space_dict(self, X):
        maximal = []
        for q in range(X.dim, -1, -1):
            for cell in X.cells[q]:
                if not any(set(cell) < set(other) for other in maximal):
                    maximal.append(cell)
        key = X.vertex_index.__getitem__
        return {"vertices": list(X.vertices),
                "simplices": sorted([list(c) for c in maximal],
                                    key=lambda c: [key(v) for v in c])}

    def to_dict(self):
        out = {"name": self.name, "description": self.description}
        if self.action is not None:
            group = self.action.group
            maps = {}
            for g in group.elements:
                table = self.action.vertex_maps[g]
                if any(table[v] != v for v in self.space.vertices):
                    maps[g] = {v: table[v] for v in self.space.vertices}
            out["action"] = {
                "group": {"elements": list(group.elements),
                          "table": [[group.mul(a, b)
                                     for b in group.elements]
                                    for a in group.elements]},
                "space": self._space_dict(self.space),
                "vertex_maps": maps,
            }
        else:
            out["orbit"] = self._space_dict(self.space)
        key = self.space.vertex_index.__getitem__
        cocycles = {}
        for cname in self.cocycle_names():
            spec = self.cocycle_specs[cname]
            edges = []
            for (u, v, vec) in spec["edges"]:
                if key(u) > key(v):
                    u, v, vec = v, u, tuple(-x for x in vec)
                edges.append((u, v, vec))
            edges.sort(key=lambda e: (key(e[0]), key(e[1])))
            cocycles[cname] = {
                "symbols": list(spec["symbols"]),
                "shadows": dict(spec["shadows"]),
                "edges": [[u, v, [format_fraction(x) for x in vec]]
                          for (u, v, vec) in edges],
            }
        out["cocycles"] = cocycles
        critical = {}
        for bname in self.critical_names():
            cd = self.critical_blocks[bname]
            block = {"counts": list(cd.counts)}
            if cd.provenance is not None:
                block["provenance"] = cd.provenance
            critical[bname] = block
        out["critical_data"] = critical
        return out

    def serialize(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def loads_document(text):
    """Parse a document from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("line %d column %d: %s"
                            % (exc.lineno, exc.colno, exc.msg)) from exc
    return OrbifoldDocument.from_dict(data)


def load_document(path):
    """Parse a document from a file path."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc)) from exc
    return loads_document(text)
