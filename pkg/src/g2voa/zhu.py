"""Finite enveloping algebra U(g) and the Zhu map N(k, 0) -> U(g).

The Zhu map sends a vacuum-module monomial to a signed product of the
underlying finite generators:

    a_1(-n_1-1) ... a_m(-n_m-1) . 1  |->  (-1)^(n_1+...+n_m) a_m ... a_1

Note the reversed order.  With this order the map is compatible with the
relation ``a(-1)b(-1).1 - b(-1)a(-1).1 = [a,b](-2).1``, so it gives the same
answer on every spanning monomial, canonical or not.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .affine_pbw import AffineAlgebra, VacuumState, default_algebra
from .chevalley import BASIS, BY_NAME, DIM, INDEX, StructureTable, build_structure_table
from .pbw import PBWElement, Straightener, add_into
from .rootsys import COROOTS, ZERO, Root


class FiniteUEAElement(PBWElement):
    """Element of U(g) in canonical PBW form (F's < H's < E's)."""

    __slots__ = ()


class FiniteAlgebra:
    element_class = FiniteUEAElement

    def __init__(self, table: StructureTable):
        self.table = table
        self.engine = Straightener(lambda x, y: self.table.brackets[x][y])

    def element(self, terms=None, *, canonical=False) -> FiniteUEAElement:
        return FiniteUEAElement(self, terms, canonical=canonical)

    def one(self) -> FiniteUEAElement:
        return self.element({(): Fraction(1)}, canonical=True)

    def gen(self, name: str) -> FiniteUEAElement:
        if name in BY_NAME:
            return self.element({(INDEX[BY_NAME[name]],): Fraction(1)}, canonical=True)
        if name[0] == "H" and len(name) == 3:
            h = COROOTS[(int(name[1]), int(name[2]))]
            return h.c10 * self.gen("H10") + h.c01 * self.gen("H01")
        raise KeyError(f"unknown generator {name!r}")

    def adjoint(self, x: str | int, y: FiniteUEAElement) -> FiniteUEAElement:
        """``x_L y = [x, y]`` for a basis element ``x``."""
        code = INDEX[BY_NAME[x]] if isinstance(x, str) else x
        return self.element(self.engine.derivation(code, y.terms), canonical=True)

    def weight_of(self, x: FiniteUEAElement) -> Root | None:
        found = None
        for w in x.terms:
            wt = ZERO
            for g in w:
                wt = wt + BASIS[g].weight
            if found is None:
                found = wt
            elif found != wt:
                return None
        return found

    def format(self, x: FiniteUEAElement) -> str:
        if not x.terms:
            return "0"
        parts = []
        for w in sorted(x.terms, key=lambda w: (len(w), w)):
            mono = " ".join(BASIS[g].name for g in w) or "1"
            parts.append(f"{x.terms[w]} * {mono}")
        return " + ".join(parts)

    def parse(self, text: str) -> FiniteUEAElement:
        text = text.strip()
        if text == "0":
            return self.element()
        acc: dict = {}
        for term in text.split(" + "):
            coeff, mono = term.split(" * ", 1)
            mono = mono.strip()
            word = () if mono == "1" else tuple(INDEX[BY_NAME[t]] for t in mono.split())
            add_into(acc, [(word, Fraction(coeff))])
        return self.element(acc)


@lru_cache(maxsize=None)
def default_finite_algebra() -> FiniteAlgebra:
    return FiniteAlgebra(build_structure_table())


def finite_algebra_for(affine: AffineAlgebra) -> FiniteAlgebra:
    if affine is default_algebra():
        return default_finite_algebra()
    return FiniteAlgebra(affine.table)


def zhu_image(state: VacuumState, finite: FiniteAlgebra | None = None) -> FiniteUEAElement:
    """Image of ``state`` in U(g) under the Zhu map."""
    fin = finite or finite_algebra_for(state.element.algebra)
    acc: dict = {}
    for w, c in state.element.terms.items():
        sign = 1
        word = []
        for g in reversed(w):
            mode, i = divmod(g, DIM)
            if (-mode - 1) % 2:
                sign = -sign
            word.append(i)
        add_into(acc, [(tuple(word), sign * c)])
    return fin.element(acc)


def finite_multiply(x: FiniteUEAElement, y: FiniteUEAElement) -> FiniteUEAElement:
    return x * y
