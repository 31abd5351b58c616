"""The action groupoid's nerve with local coefficients.

Cells are pairs (anchor, word): an ordered simplex of the space the
group acts on, together with a string of group elements.  Two
boundary operators act on chains of such cells.  The group direction
drops or composes word letters, with the last face relocating the
anchor by the inverse of the dropped letter.  The space direction is
the twisted simplicial boundary: dropping the anchor's first vertex
transports the coefficient by the monomial of the first edge.

Exponents come from the quotient: the basic cochain descends to the
orbit space, is integralized there, and the exponents pull back.
That makes them invariant by construction, which is exactly what the
mixed commutation identity needs; invariance and closedness are still
re-verified on the way in.

The operators satisfy four identities: each boundary squares to zero,
they commute, and the total differential (with the bidegree sign
rule) squares to zero.  These are checked cell by cell in the test
harness; the module itself stays agnostic about truncation except for
refusing words longer than its depth.
"""

import random

from .actions import quotient_complex
from .cochains import descend_cochain, is_invariant
from .errors import DocumentError, ValidationError
from .laurent import LaurentPoly
from .periods import H1Presentation
from .twisted import integralize

__all__ = ["NerveCell", "LocalChain", "NerveModel", "nerve_model",
           "random_chain", "identity_failures"]


class NerveCell:
    """An ordered anchor simplex with a word of group elements."""

    __slots__ = ("anchor", "word")

    def __init__(self, anchor, word):
        self.anchor = tuple(anchor)
        self.word = tuple(word)

    @property
    def q(self):
        return len(self.anchor) - 1

    @property
    def n(self):
        return len(self.word)

    def __eq__(self, other):
        return (isinstance(other, NerveCell)
                and self.anchor == other.anchor and self.word == other.word)

    def __hash__(self):
        return hash((self.anchor, self.word))

    def __repr__(self):
        return "NerveCell(%r, %r)" % (self.anchor, self.word)


class LocalChain:
    """Finite formal sum of nerve cells with Laurent coefficients."""

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=()):
        self.r = r
        clean = {}
        for cell, coeff in (terms.items() if isinstance(terms, dict)
                            else terms):
            if isinstance(coeff, int):
                coeff = LaurentPoly.const(r, coeff)
            if coeff:
                prev = clean.get(cell)
                total = coeff if prev is None else prev + coeff
                if total:
                    clean[cell] = total
                elif cell in clean:
                    del clean[cell]
        self.terms = clean

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, LocalChain) and self.r == other.r
                and self.terms == other.terms)

    def __add__(self, other):
        assert self.r == other.r
        out = dict(self.terms)
        for cell, coeff in other.terms.items():
            prev = out.get(cell)
            total = coeff if prev is None else prev + coeff
            if total:
                out[cell] = total
            elif cell in out:
                del out[cell]
        return LocalChain(self.r, out)

    def __neg__(self):
        return LocalChain(self.r, {c: -p for c, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        if isinstance(poly, int):
            poly = LaurentPoly.const(self.r, poly)
        return LocalChain(self.r, {c: p * poly
                                   for c, p in self.terms.items()})

    def __repr__(self):
        return "LocalChain(%d cells)" % (len(self.terms),)


class NerveModel:
    """Boundary operators on the nerve of a regular action.

    Built by nerve_model; operates on the (possibly subdivided)
    complex that the regular action acts on.
    """

    __slots__ = ("action", "complex", "exponents", "r", "depth")

    def __init__(self, action, exponents, r, depth):
        self.action = action
        self.complex = action.complex
        self.exponents = exponents
        self.r = r
        self.depth = depth
        self._check_exponents()

    def _check_exponents(self):
        X = self.complex
        zero = (0,) * self.r
        for g in self.action.group.elements:
            for (u, v) in X.edges():
                gu, gv = (self.action.apply_vertex(g, u),
                          self.action.apply_vertex(g, v))
                if self.exp(gu, gv) != self.exp(u, v):
                    raise ValidationError(
                        "exponent cochain is not invariant on edge %r under %r"
                        % ((u, v), g))
        for tri in (X.cells[2] if X.dim >= 2 else []):
            a, b, c = tri
            total = tuple(x + y - z for x, y, z in
                          zip(self.exp(a, b), self.exp(b, c), self.exp(a, c)))
            if total != zero:
                raise ValidationError(
                    "exponent cochain is not closed on %r" % (tri,))

    def exp(self, u, v):
        """Exponent vector along the edge u -> v, antisymmetric."""
        if u == v:
            return (0,) * self.r
        if (u, v) in self.exponents:
            return self.exponents[(u, v)]
        if (v, u) in self.exponents:
            return tuple(-e for e in self.exponents[(v, u)])
        raise ValidationError("no exponent for edge %r" % ((u, v),))

    def cell(self, anchor, word):
        """Validated nerve cell on this model's complex and group."""
        anchor = tuple(anchor)
        if not anchor:
            raise DocumentError("empty anchor")
        if len(set(anchor)) != len(anchor):
            raise DocumentError("anchor %r repeats a vertex" % (anchor,))
        key = tuple(sorted(anchor, key=self.complex.vertex_index.get))
        if not self.complex.has_cell(key):
            raise ValidationError("anchor %r is not a simplex" % (anchor,))
        word = tuple(word)
        for g in word:
            if g not in self.action.group.index:
                raise DocumentError("unknown group element %r" % (g,))
        if len(word) > self.depth:
            raise ValidationError(
                "word of length %d exceeds truncation depth %d"
                % (len(word), self.depth))
        return NerveCell(anchor, word)

    def unit(self, anchor, word):
        return LocalChain(self.r, {self.cell(anchor, word): 1})

    def group_boundary(self, chain):
        """Word-direction boundary: drop, compose, or relocate."""
        group = self.action.group
        out = []
        for cell, coeff in chain.terms.items():
            word = cell.word
            n = len(word)
            if n == 0:
                continue
            sign = 1
            for k in range(n):
                if k == 0:
                    face = NerveCell(cell.anchor, word[1:])
                else:
                    merged = (word[:k - 1]
                              + (group.mul(word[k - 1], word[k]),)
                              + word[k + 1:])
                    face = NerveCell(cell.anchor, merged)
                out.append((face, coeff if sign > 0 else -coeff))
                sign = -sign
            moved = self.action.apply_tuple(group.inverse(word[-1]),
                                            cell.anchor)
            last = NerveCell(moved, word[:-1])
            out.append((last, coeff if sign > 0 else -coeff))
        return LocalChain(self.r, out)

    def face_boundary(self, chain):
        """Anchor-direction boundary, twisted on the leading face."""
        out = []
        for cell, coeff in chain.terms.items():
            anchor = cell.anchor
            if len(anchor) == 1:
                continue
            head = LaurentPoly.monomial(self.r,
                                        self.exp(anchor[0], anchor[1]))
            out.append((NerveCell(anchor[1:], cell.word), coeff * head))
            sign = -1
            for j in range(1, len(anchor)):
                face = NerveCell(anchor[:j] + anchor[j + 1:], cell.word)
                out.append((face, coeff if sign > 0 else -coeff))
                sign = -sign
        return LocalChain(self.r, out)

    def total_boundary(self, chain):
        """Total differential with the bidegree sign rule."""
        total = LocalChain(self.r)
        for cell, coeff in chain.terms.items():
            single = LocalChain(self.r, {cell: coeff})
            s_group = -1 if (cell.q + cell.n) % 2 else 1
            s_face = -1 if cell.q % 2 else 1
            total = total + self.group_boundary(single).scale(s_group)
            total = total + self.face_boundary(single).scale(s_face)
        return total


def random_chain(model, rng, max_word=3, max_cells=3):
    """Small random chain for identity spot checks, rng driven.

    Anchors come from the model's complex in any vertex order, words
    from the full element list (identities included), coefficients are
    signed monomials with small exponents.
    """
    X = model.complex
    terms = []
    for _ in range(rng.randrange(1, max_cells + 1)):
        q = rng.randrange(X.dim + 1)
        anchor = list(rng.choice(X.cells[q]))
        rng.shuffle(anchor)
        word = tuple(rng.choice(model.action.group.elements)
                     for _ in range(rng.randrange(max_word + 1)))
        exp = tuple(rng.randrange(-2, 3) for _ in range(model.r))
        coeff = LaurentPoly.monomial(model.r, exp) * rng.choice((1, -1))
        terms.append((model.cell(anchor, word), coeff))
    return LocalChain(model.r, terms)


def identity_failures(model, seed, samples, max_word=3):
    """Check the four boundary identities on seeded random chains.

    Both operators must square to zero, they must commute, and the
    signed total differential must square to zero.  Returns failure
    descriptions; an empty list is a clean pass.
    """
    max_word = min(max_word, model.depth)
    rng = random.Random(seed)
    fails = []
    for i in range(samples):
        c = random_chain(model, rng, max_word=max_word)
        if model.group_boundary(model.group_boundary(c)):
            fails.append("sample %d: word boundary squared is nonzero" % i)
        if model.face_boundary(model.face_boundary(c)):
            fails.append("sample %d: face boundary squared is nonzero" % i)
        if (model.face_boundary(model.group_boundary(c))
                != model.group_boundary(model.face_boundary(c))):
            fails.append("sample %d: boundaries do not commute" % i)
        if model.total_boundary(model.total_boundary(c)):
            fails.append("sample %d: total differential squared is nonzero"
                         % i)
    return fails


def nerve_model(action, cochain, depth=4):
    """Nerve operators for an invariant closed cochain on an action.

    The action is regularized by quotient_complex (subdividing when
    needed); the cochain must live on the action's complex and be
    invariant.  Exponents are integralized on the orbit space and
    pulled back, so they are invariant on the nose.
    """
    if cochain.complex is not action.complex:
        raise DocumentError("cochain lives on a different complex")
    if not is_invariant(action, cochain):
        raise ValidationError("cochain is not invariant, hence not basic")
    qres = quotient_complex(action)
    down = descend_cochain(qres, cochain)
    lift = integralize(down, H1Presentation(qres.complex))
    act = qres.action
    proj = qres.projection
    exponents = {}
    r = lift.rank
    for (u, v) in act.complex.edges():
        exponents[(u, v)] = lift.exponent(proj[u], proj[v])
    return NerveModel(act, exponents, r, depth)
