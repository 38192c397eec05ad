"""PBW straightening engine shared by the affine and finite enveloping algebras.

Generators are encoded as integers whose natural order *is* the PBW order, so a
monomial is canonical exactly when its tuple of codes is non-decreasing.
Elements are dicts ``word -> Fraction`` with no zero entries.

Straightening rewrites the first descent ``... x y ...`` (``x > y``) as
``... y x ... + ... [x, y] ...``.  The swap strictly lowers the number of
inversions of the word, and the bracket term strictly lowers its length, so
the pair ``(length, inversions)`` decreases lexicographically and the rewrite
terminates.  Normal forms of words are memoized per engine.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

Word = tuple  # tuple[int, ...]
Terms = dict  # Word -> Fraction
BracketFn = Callable[[int, int], tuple]  # (x, y) -> ((z, c), ...)


def inversions(word: Word) -> int:
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def add_into(acc: Terms, terms: Iterable[tuple[Word, Fraction]], scale: Fraction = Fraction(1)) -> None:
    for w, c in terms:
        v = acc.get(w, 0) + scale * c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


class Straightener:
    """Normal-ordering for the enveloping algebra of a Lie algebra given by ``bracket``.

    ``bracket(x, y)`` must return the expansion of ``[x, y]`` on generator codes
    as a tuple of ``(code, coefficient)`` pairs.
    """

    def __init__(self, bracket: BracketFn):
        self._bracket = lru_cache(maxsize=None)(bracket)
        self._normal = lru_cache(maxsize=None)(self._normal_uncached)
        self._ad_word = lru_cache(maxsize=None)(self._ad_word_uncached)

    def bracket(self, x: int, y: int) -> tuple:
        return self._bracket(x, y)

    def normal_word(self, word: Word) -> tuple[tuple[Word, Fraction], ...]:
        """Canonical form of a single word, as ``((word, coeff), ...)``."""
        return self._normal(word)

    def _normal_uncached(self, word: Word) -> tuple[tuple[Word, Fraction], ...]:
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                break
        else:
            return ((word, Fraction(1)),)
        x, y = word[i], word[i + 1]
        head, tail = word[:i], word[i + 2:]
        acc: Terms = {}
        add_into(acc, self._normal(head + (y, x) + tail))
        for z, c in self._bracket(x, y):
            add_into(acc, self._normal(head + (z,) + tail), c)
        return tuple(acc.items())

    def normalize(self, terms: Mapping[Word, Fraction]) -> Terms:
        acc: Terms = {}
        for w, c in terms.items():
            add_into(acc, self._normal(w), c)
        return acc

    def multiply(self, left: Mapping[Word, Fraction], right: Mapping[Word, Fraction]) -> Terms:
        acc: Terms = {}
        for u, a in left.items():
            for v, b in right.items():
                add_into(acc, self._normal(u + v), a * b)
        return acc

    def _ad_word_uncached(self, x: int, w: Word) -> tuple[tuple[Word, Fraction], ...]:
        acc: Terms = {}
        for i, y in enumerate(w):
            for z, d in self._bracket(x, y):
                add_into(acc, self._normal(w[:i] + (z,) + w[i + 1:]), d)
        return tuple(acc.items())

    def ad_word(self, x: int, w: Word) -> tuple[tuple[Word, Fraction], ...]:
        """Canonical form of ``[x, w]`` for a single word ``w``."""
        return self._ad_word(x, w)

    def derivation(self, x: int, terms: Mapping[Word, Fraction]) -> Terms:
        """``ad x`` applied to a canonical element, expanded as a derivation."""
        acc: Terms = {}
        for w, c in terms.items():
            add_into(acc, self._ad_word(x, w), c)
        return acc

    def cache_info(self):
        return self._normal.cache_info()


class PBWElement:
    """Exact element of an enveloping algebra in canonical PBW form.

    Subclasses supply generator names through their ``algebra``.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms: Mapping[Word, Fraction] | None = None, *, canonical: bool = False):
        self.algebra = algebra
        if terms is None:
            self.terms: Terms = {}
        elif canonical:
            self.terms = {w: Fraction(c) for w, c in terms.items() if c}
        else:
            self.terms = algebra.engine.normalize(terms)

    def _new(self, terms: Terms) -> PBWElement:
        return type(self)(self.algebra, terms, canonical=True)

    def _coerce(self, other) -> PBWElement:
        if isinstance(other, PBWElement):
            if other.algebra is not self.algebra:
                raise TypeError("elements belong to different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self._new({(): Fraction(other)} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        add_into(acc, other.terms.items())
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new({w: c * other for w, c in self.terms.items()} if other else {})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self.algebra.engine.multiply(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, n: int):
        out = self._coerce(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({self.algebra.format(self)!r})"

    def __str__(self):
        return self.algebra.format(self)

    def commutator(self, other) -> PBWElement:
        other = self._coerce(other)
        return self * other - other * self


def fmt_rational(c: Fraction) -> str:
    return str(Fraction(c))
