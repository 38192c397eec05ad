"""Enveloping algebra of the affine Lie algebra of type G2^(1) and the vacuum module.

The affine algebra is spanned by ``a(n) = a (x) t^n`` and a central ``K`` with

    [a(m), b(n)] = [a, b](m + n) + m (a, b) delta_{m+n,0} K.

``K`` is treated as one more generator that commutes with everything and sorts
after every ``a(n)``.  Coefficients therefore live in Q[K] without a separate
polynomial type: the K-degree of a term is the number of trailing K's.

PBW order: ``a(m) < b(n)`` iff ``m < n``, or ``m == n`` and ``a`` precedes ``b``
in :data:`g2voa.chevalley.BASIS`.  Annihilators of the vacuum (modes >= 0)
therefore sit at the right end of every canonical monomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from .chevalley import BASIS, BY_NAME, DIM, INDEX, BasisElement, StructureTable, build_structure_table
from .pbw import PBWElement, Straightener, Word, add_into
from .rootsys import COROOTS, ZERO, Root

K_CODE = 1 << 40


@dataclass(frozen=True, order=True)
class AffineGenerator:
    base: BasisElement
    mode: int

    @property
    def code(self) -> int:
        return self.mode * DIM + INDEX[self.base]

    @classmethod
    def from_code(cls, code: int) -> AffineGenerator:
        mode, i = divmod(code, DIM)
        return cls(BASIS[i], mode)

    def __str__(self) -> str:
        return f"{self.base.name}({self.mode})"


class UEAElement(PBWElement):
    """Element of U(affine g) with coefficients in Q[K]."""

    __slots__ = ()

    def k_polynomials(self) -> dict[Word, dict[int, Fraction]]:
        """Group terms as ``monomial without K -> {K-degree: coefficient}``."""
        out: dict[Word, dict[int, Fraction]] = {}
        for w, c in self.terms.items():
            n = _k_count(w)
            out.setdefault(w[: len(w) - n], {})[n] = c
        return out

    def specialize(self, k) -> UEAElement:
        """Substitute ``K -> k``."""
        k = Fraction(k)
        acc: dict = {}
        for w, c in self.terms.items():
            n = _k_count(w)
            add_into(acc, [(w[: len(w) - n], c * k**n)])
        return UEAElement(self.algebra, acc, canonical=True)


def _k_count(word: Word) -> int:
    n = 0
    for g in reversed(word):
        if g != K_CODE:
            break
        n += 1
    return n


@dataclass(frozen=True)
class VacuumState:
    """``element . 1`` in N(k, 0); every factor of ``element`` has mode <= -1."""

    element: UEAElement
    level: Fraction

    def __post_init__(self):
        for w in self.element.terms:
            if any(g == K_CODE or g // DIM >= 0 for g in w):
                raise ValueError("vacuum state contains a non-negative mode or K")

    def act(self, x: UEAElement) -> VacuumState:
        """Apply ``x`` to this state."""
        return apply_to_vacuum(x * self.element, self.level)

    def is_zero(self) -> bool:
        return not self.element

    def __str__(self) -> str:
        return str(self.element)


class AffineAlgebra:
    """U(affine g) built over a given finite structure table."""

    element_class = UEAElement

    def __init__(self, table: StructureTable):
        self.table = table
        self.engine = Straightener(self._bracket_codes)

    def _bracket_codes(self, x: int, y: int) -> tuple:
        if x == K_CODE or y == K_CODE:
            return ()
        m, i = divmod(x, DIM)
        n, j = divmod(y, DIM)
        out = [((m + n) * DIM + k, c) for k, c in self.table.brackets[i][j]]
        if m + n == 0 and m:
            c = m * self.table.form[i][j]
            if c:
                out.append((K_CODE, c))
        return tuple(out)

    # -- construction -------------------------------------------------------
    def element(self, terms=None, *, canonical=False) -> UEAElement:
        return UEAElement(self, terms, canonical=canonical)

    def one(self) -> UEAElement:
        return self.element({(): Fraction(1)}, canonical=True)

    @property
    def K(self) -> UEAElement:
        return self.element({(K_CODE,): Fraction(1)}, canonical=True)

    def gen(self, name: str, mode: int) -> UEAElement:
        """``X(mode)`` for a basis name; ``H_ij`` with non-simple ij is expanded."""
        if name in BY_NAME:
            return self.element({(AffineGenerator(BY_NAME[name], mode).code,): Fraction(1)}, canonical=True)
        if name[0] == "H" and len(name) == 3:
            h = COROOTS[(int(name[1]), int(name[2]))]
            return h.c10 * self.gen("H10", mode) + h.c01 * self.gen("H01", mode)
        raise KeyError(f"unknown generator {name!r}")

    def of(self, g: AffineGenerator) -> UEAElement:
        return self.element({(g.code,): Fraction(1)}, canonical=True)

    # -- serialization ------------------------------------------------------
    def format(self, x: UEAElement) -> str:
        groups = x.k_polynomials()
        if not groups:
            return "0"
        parts = []
        for w in sorted(groups, key=lambda w: (len(w), w)):
            poly = groups[w]
            if set(poly) == {0}:
                coeff = str(poly[0])
            else:
                coeff = "(" + " + ".join(
                    str(poly[n]) if n == 0 else f"{poly[n]}*K" if n == 1 else f"{poly[n]}*K^{n}"
                    for n in sorted(poly)
                ) + ")"
            mono = " ".join(str(AffineGenerator.from_code(g)) for g in w) or "1"
            parts.append(f"{coeff} * {mono}")
        return " + ".join(parts)

    def parse(self, text: str) -> UEAElement:
        text = text.strip()
        if text == "0":
            return self.element()
        acc: dict = {}
        for term in _split_top(text):
            coeff_txt, mono_txt = term.split(" * ", 1)
            word = _parse_word(mono_txt)
            for n, c in _parse_kpoly(coeff_txt).items():
                add_into(acc, [(word + (K_CODE,) * n, c)])
        return self.element(acc)

    # -- weights ------------------------------------------------------------
    def weight_of(self, x: UEAElement) -> tuple[Root, int] | None:
        """``(finite weight, total mode)`` shared by all terms, or None if inhomogeneous."""
        found = None
        for w in x.terms:
            wt, deg = ZERO, 0
            for g in w:
                if g == K_CODE:
                    continue
                mode, i = divmod(g, DIM)
                wt, deg = wt + BASIS[i].weight, deg + mode
            if found is None:
                found = (wt, deg)
            elif found != (wt, deg):
                return None
        return found

    def vacuum_project(self, x: UEAElement) -> UEAElement:
        """Drop the terms that kill the vacuum, keeping ``K`` symbolic.

        A canonical term kills the vacuum when its last non-``K`` factor has
        mode >= 0; the survivors describe ``x . 1`` with coefficients in Q[K].
        """
        acc: dict = {}
        for w, c in x.terms.items():
            core = w[: len(w) - _k_count(w)]
            if core and core[-1] // DIM >= 0:
                continue
            acc[w] = c
        return self.element(acc, canonical=True)

    def apply_to_vacuum(self, x: UEAElement, k) -> VacuumState:
        k = Fraction(k)
        return VacuumState(self.vacuum_project(x).specialize(k), k)


_GEN_RE = re.compile(r"([EFH]\d\d)\((-?\d+)\)")


def _split_top(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            parts.append(text[start:i])
            start = i + 3
            i += 2
        i += 1
    parts.append(text[start:])
    return parts


def _parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return ()
    codes = []
    for tok in text.split():
        m = _GEN_RE.fullmatch(tok)
        if not m:
            raise ValueError(f"bad generator token {tok!r}")
        codes.append(AffineGenerator(BY_NAME[m.group(1)], int(m.group(2))).code)
    return tuple(codes)


def _parse_kpoly(text: str) -> dict[int, Fraction]:
    text = text.strip()
    if not text.startswith("("):
        return {0: Fraction(text)}
    out = {}
    for piece in text[1:-1].split(" + "):
        if "*K" in piece:
            c, _, rest = piece.partition("*K")
            n = int(rest[1:]) if rest.startswith("^") else 1
        else:
            c, n = piece, 0
        out[n] = Fraction(c)
    return out


@lru_cache(maxsize=None)
def default_algebra() -> AffineAlgebra:
    return AffineAlgebra(build_structure_table())


def _as_element(x, alg: AffineAlgebra) -> UEAElement:
    if isinstance(x, AffineGenerator):
        return alg.of(x)
    if isinstance(x, str) and x == "K":
        return alg.K
    return x


def bracket_affine(x, y, algebra: AffineAlgebra | None = None) -> UEAElement:
    """``[x, y]`` for generators (``AffineGenerator`` or ``"K"``) or general elements."""
    alg = algebra or default_algebra()
    x, y = _as_element(x, alg), _as_element(y, alg)
    return x * y - y * x


def multiply(x: UEAElement, y: UEAElement) -> UEAElement:
    return x * y


def apply_to_vacuum(x: UEAElement, k) -> VacuumState:
    return x.algebra.apply_to_vacuum(x, k)


def weight_of(x: UEAElement) -> tuple[Root, int] | None:
    return x.algebra.weight_of(x)


def vacuum_project(x: UEAElement) -> UEAElement:
    return x.algebra.vacuum_project(x)
