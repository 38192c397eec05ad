"""Root system of type G2 over exact rationals.

Roots are stored in the basis of simple roots ``alpha`` (short) and ``beta``
(long).  The bilinear form is normalized so that the highest root
``theta = 3*alpha + 2*beta`` has square length 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

# Gram matrix of the simple roots: (alpha, alpha), (alpha, beta), (beta, beta).
_GRAM = ((Fraction(2, 3), Fraction(-1)), (Fraction(-1), Fraction(2)))


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


@dataclass(frozen=True, order=True)
class Root:
    """Element ``coeff_alpha * alpha + coeff_beta * beta`` of the root lattice."""

    coeff_alpha: int
    coeff_beta: int

    def __add__(self, other: Root) -> Root:
        return Root(self.coeff_alpha + other.coeff_alpha, self.coeff_beta + other.coeff_beta)

    def __sub__(self, other: Root) -> Root:
        return Root(self.coeff_alpha - other.coeff_alpha, self.coeff_beta - other.coeff_beta)

    def __neg__(self) -> Root:
        return Root(-self.coeff_alpha, -self.coeff_beta)

    def __mul__(self, n: int) -> Root:
        return Root(n * self.coeff_alpha, n * self.coeff_beta)

    __rmul__ = __mul__

    @property
    def label(self) -> tuple[int, int]:
        return (self.coeff_alpha, self.coeff_beta)

    @property
    def is_root(self) -> bool:
        return self in _ROOT_SET

    @property
    def is_positive(self) -> bool:
        return self in _POSITIVE_SET

    @property
    def height(self) -> int:
        return self.coeff_alpha + self.coeff_beta

    def as_weight(self) -> FiniteWeight:
        """Coordinates ``(<x, alpha^vee>, <x, beta^vee>)`` of this lattice element."""
        return FiniteWeight(
            2 * inner_product(self, ALPHA) / inner_product(ALPHA, ALPHA),
            2 * inner_product(self, BETA) / inner_product(BETA, BETA),
        )

    def __str__(self) -> str:
        return f"{self.coeff_alpha}a+{self.coeff_beta}b"


@dataclass(frozen=True)
class CorootExpansion:
    """``H = c10 * H10 + c01 * H01`` in terms of the simple coroots."""

    c10: int
    c01: int

    def __add__(self, other: CorootExpansion) -> CorootExpansion:
        return CorootExpansion(self.c10 + other.c10, self.c01 + other.c01)

    def __neg__(self) -> CorootExpansion:
        return CorootExpansion(-self.c10, -self.c01)

    def __mul__(self, n: int) -> CorootExpansion:
        return CorootExpansion(n * self.c10, n * self.c01)

    __rmul__ = __mul__


@dataclass(frozen=True)
class FiniteWeight:
    """A weight ``mu`` of the Cartan subalgebra, stored as ``(mu(H10), mu(H01))``."""

    mu10: Fraction
    mu01: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu10", Fraction(self.mu10))
        object.__setattr__(self, "mu01", Fraction(self.mu01))

    def __add__(self, other: FiniteWeight) -> FiniteWeight:
        return FiniteWeight(self.mu10 + other.mu10, self.mu01 + other.mu01)

    def __sub__(self, other: FiniteWeight) -> FiniteWeight:
        return FiniteWeight(self.mu10 - other.mu10, self.mu01 - other.mu01)

    def __neg__(self) -> FiniteWeight:
        return FiniteWeight(-self.mu10, -self.mu01)

    def __mul__(self, c: Rational) -> FiniteWeight:
        return FiniteWeight(c * self.mu10, c * self.mu01)

    __rmul__ = __mul__

    def __lt__(self, other: FiniteWeight) -> bool:
        return (self.mu10, self.mu01) < (other.mu10, other.mu01)

    @property
    def is_dominant_integral(self) -> bool:
        return all(x.denominator == 1 and x >= 0 for x in (self.mu10, self.mu01))

    def __str__(self) -> str:
        return f"({self.mu10}, {self.mu01})"


ALPHA = Root(1, 0)
BETA = Root(0, 1)
THETA = Root(3, 2)
ZERO = Root(0, 0)

POSITIVE_ROOTS: tuple[Root, ...] = tuple(
    Root(i, j) for i, j in ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
)
ROOTS: tuple[Root, ...] = POSITIVE_ROOTS + tuple(-r for r in POSITIVE_ROOTS)
_ROOT_SET = frozenset(ROOTS)
_POSITIVE_SET = frozenset(POSITIVE_ROOTS)

OMEGA1 = FiniteWeight(1, 0)
OMEGA2 = FiniteWeight(0, 1)
RHO_BAR = FiniteWeight(1, 1)
DUAL_COXETER = 4


def inner_product(x: Root, y: Root) -> Fraction:
    """Normalized invariant form on the root lattice, ``(theta, theta) = 2``."""
    a = (x.coeff_alpha, x.coeff_beta)
    b = (y.coeff_alpha, y.coeff_beta)
    return sum((a[i] * _GRAM[i][j] * b[j] for i in range(2) for j in range(2)), Fraction(0))


def coroot_expansion(gamma: Root) -> CorootExpansion:
    """Expansion of ``gamma^vee = 2 gamma / (gamma, gamma)`` in ``H10, H01``."""
    if not gamma.is_root:
        raise DomainError(f"{gamma} is not a root of G2")
    norm = inner_product(gamma, gamma)
    c10 = gamma.coeff_alpha * inner_product(ALPHA, ALPHA) / norm
    c01 = gamma.coeff_beta * inner_product(BETA, BETA) / norm
    assert c10.denominator == 1 and c01.denominator == 1
    return CorootExpansion(int(c10), int(c01))


COROOTS: dict[tuple[int, int], CorootExpansion] = {
    r.label: coroot_expansion(r) for r in POSITIVE_ROOTS
}


def pairing(mu: FiniteWeight, gamma: Root) -> Fraction:
    """``<mu, gamma^vee>`` evaluated through the coroot expansion."""
    h = coroot_expansion(gamma)
    return h.c10 * mu.mu10 + h.c01 * mu.mu01


def simple_reflection(i: int, x: Root) -> Root:
    """Reflection of a lattice element in the simple root ``alpha`` (i=0) or ``beta`` (i=1)."""
    s = (ALPHA, BETA)[i]
    n = 2 * inner_product(x, s) / inner_product(s, s)
    assert n.denominator == 1
    return x - s * int(n)


def weight_to_root(mu: FiniteWeight) -> Root:
    """Inverse of :meth:`Root.as_weight` on the root lattice."""
    # alpha = (2, -1) and beta = (-3, 2) in weight coordinates; the inverse is integral.
    a = 2 * mu.mu10 + 3 * mu.mu01
    b = mu.mu10 + 2 * mu.mu01
    if a.denominator != 1 or b.denominator != 1:
        raise DomainError(f"{mu} is not in the root lattice")
    return Root(int(a), int(b))


def weyl_dimension(mu: FiniteWeight) -> int:
    """Dimension of the irreducible G2-module with highest weight ``mu``."""
    if not mu.is_dominant_integral:
        raise DomainError(f"{mu} is not dominant integral")
    shifted = mu + RHO_BAR
    num = Fraction(1)
    for gamma in POSITIVE_ROOTS:
        num *= pairing(shifted, gamma) / pairing(RHO_BAR, gamma)
    assert num.denominator == 1
    return int(num)
