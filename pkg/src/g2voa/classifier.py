"""Highest weights allowed by the zero-weight polynomials, and affine weight checks.

Affine weights are ``level * Lambda0 + mu + d * delta`` with ``mu`` a finite
weight in the fundamental-weight coordinates ``(mu(H10), mu(H01))``.  A real
affine root is ``gamma_bar + m delta``; its coroot pairs with a weight of
level ``L`` and finite part ``mu`` as

    <lambda, gamma^vee> = m * 2L / (gamma_bar, gamma_bar) + <mu, gamma_bar^vee>.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import univariate as up
from .adjoint_polys import CartanPolynomial
from .rootsys import (
    DUAL_COXETER,
    POSITIVE_ROOTS,
    RHO_BAR,
    ROOTS,
    DomainError,
    FiniteWeight,
    Root,
    coroot_expansion,
    inner_product,
    pairing,
)

Q = Fraction


# -- common zeros ---------------------------------------------------------------------

@dataclass(frozen=True)
class CommonZeros:
    zeros: frozenset[FiniteWeight]
    flags: tuple[str, ...] = ()

    def sorted(self) -> list[FiniteWeight]:
        return sorted(self.zeros, key=lambda m: (m.mu10, m.mu01))


def solve_common_zeros(polys: Mapping[str, CartanPolynomial]) -> CommonZeros:
    """All rational ``(h10, h01)`` where q, p1 and p2 vanish.

    ``p1`` must not involve ``h01``.  Any factor without rational roots that
    could hide further (irrational) solutions is reported in ``flags``.
    """
    q, p1, p2 = polys["q"], polys["p1"], polys["p2"]
    flags: list[str] = []
    p1_coeffs = p1.univariate_h10()
    if not p1_coeffs:
        raise DomainError("p1 is the zero polynomial")
    mu10s, rest = up.split_rational(p1_coeffs)
    if up.degree(rest) > 0:
        flags.append(f"p1 has a factor without rational roots: {up.to_text(rest, 'h10')}")
    zeros = set()
    for m10 in mu10s:
        g = up.gcd(q.specialize_h10(m10), p2.specialize_h10(m10))
        if not g:
            flags.append(f"q and p2 both vanish identically at h10 = {m10}")
            continue
        roots, rest = up.split_rational(g)
        if up.degree(rest) > 0:
            flags.append(
                f"at h10 = {m10} the common factor {up.to_text(rest, 'h01')} has no rational roots"
            )
        zeros.update(FiniteWeight(m10, r) for r in roots)
    return CommonZeros(frozenset(zeros), tuple(flags))


def dominant_integral_filter(weights: Iterable[FiniteWeight]) -> set[FiniteWeight]:
    return {m for m in weights if m.is_dominant_integral}


# -- affine weights -------------------------------------------------------------------

@dataclass(frozen=True)
class AffineWeight:
    level: Fraction
    finite: FiniteWeight = field(default_factory=lambda: FiniteWeight(0, 0))
    delta_coeff: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "level", Q(self.level))
        object.__setattr__(self, "delta_coeff", Q(self.delta_coeff))

    def __add__(self, other: AffineWeight) -> AffineWeight:
        return AffineWeight(
            self.level + other.level, self.finite + other.finite, self.delta_coeff + other.delta_coeff
        )

    def __sub__(self, other: AffineWeight) -> AffineWeight:
        return self + other * -1

    def __mul__(self, c) -> AffineWeight:
        return AffineWeight(c * self.level, self.finite * c, c * self.delta_coeff)

    def __str__(self) -> str:
        return f"{self.level}*L0 + {self.finite} + {self.delta_coeff}*delta"


RHO = AffineWeight(DUAL_COXETER, RHO_BAR, 0)


def level_weight(k, mu: FiniteWeight | None = None) -> AffineWeight:
    """``k Lambda0 + mu``."""
    return AffineWeight(Q(k), mu or FiniteWeight(0, 0), 0)


def lambda_series(n: int, i: int) -> AffineWeight:
    """``(n - 2 + i/3) Lambda0``, the admissible levels with denominator 3."""
    return level_weight(n - 2 + Q(i, 3))


@dataclass(frozen=True)
class RealAffineRoot:
    """``finite_part + m * delta`` with ``m > 0``, or ``m == 0`` and a positive finite part."""

    finite_part: Root
    m: int

    def __post_init__(self) -> None:
        if not self.finite_part.is_root:
            raise DomainError(f"{self.finite_part} is not a root")
        if self.m < 0 or (self.m == 0 and not self.finite_part.is_positive):
            raise DomainError(f"{self} is not a positive real affine root")

    @property
    def coroot_k_coefficient(self) -> Fraction:
        return self.m * 2 / inner_product(self.finite_part, self.finite_part)

    def coroot_vector(self) -> tuple[Fraction, Fraction, Fraction]:
        """``gamma^vee`` in the basis ``H10, H01, K``."""
        h = coroot_expansion(self.finite_part)
        return (Q(h.c10), Q(h.c01), self.coroot_k_coefficient)

    def __str__(self) -> str:
        return f"{self.finite_part}+{self.m}d"


def pairing_affine(lambda_plus_rho: AffineWeight, gamma: RealAffineRoot) -> Fraction:
    """``<lambda_plus_rho, gamma^vee>``."""
    return gamma.coroot_k_coefficient * lambda_plus_rho.level + pairing(
        lambda_plus_rho.finite, gamma.finite_part
    )


def shifted_reflection(gamma: RealAffineRoot, lam: AffineWeight) -> AffineWeight:
    """``r_gamma . lam = lam - <lam + rho, gamma^vee> gamma``."""
    p = pairing_affine(lam + RHO, gamma)
    return AffineWeight(
        lam.level,
        lam.finite - gamma.finite_part.as_weight() * p,
        lam.delta_coeff - p * gamma.m,
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    pairing_ok: bool
    span_ok: bool
    witness_violations: tuple[tuple[RealAffineRoot, Fraction], ...]
    m_bound: int
    period: int

    @property
    def admissible(self) -> bool:
        return self.pairing_ok and self.span_ok


def _m_bound(shifted: AffineWeight) -> int:
    """Past this ``m`` every pairing is positive (the slope in ``m`` is positive)."""
    top = max(abs(_finite_inner(shifted.finite, g)) for g in ROOTS)
    return max(0, math.ceil(top / shifted.level)) + 1


def _finite_inner(mu: FiniteWeight, gamma: Root) -> Fraction:
    """``(mu, gamma)`` for ``mu`` in fundamental-weight coordinates."""
    return pairing(mu, gamma) * inner_product(gamma, gamma) / 2


def _rank(vectors: Iterable[tuple[Fraction, ...]]) -> int:
    rows: list[list[Fraction]] = []
    for v in vectors:
        v = list(v)
        for r in rows:
            piv = next(i for i, c in enumerate(r) if c)
            if v[piv]:
                f = v[piv] / r[piv]
                v = [a - f * b for a, b in zip(v, r)]
        if any(v):
            rows.append(v)
    return len(rows)


def check_admissible(lam: AffineWeight) -> AdmissibilityReport:
    shifted = lam + RHO
    if shifted.level <= 0:
        raise DomainError("the shifted level must be positive")
    m_star = _m_bound(shifted)

    violations = []
    for m in range(m_star + 1):
        for g in POSITIVE_ROOTS if m == 0 else ROOTS:
            gamma = RealAffineRoot(g, m)
            p = pairing_affine(shifted, gamma)
            if p.denominator == 1 and p <= 0:
                violations.append((gamma, p))

    # <lambda, gamma^vee> is affine in m; integrality repeats with period equal
    # to the denominator of the slope.
    period = 1
    for g in ROOTS:
        d = (2 * lam.level / inner_product(g, g)).denominator
        period = period * d // math.gcd(period, d)
    integral = []
    for m in range(period + 1):
        for g in POSITIVE_ROOTS if m == 0 else ROOTS:
            gamma = RealAffineRoot(g, m)
            if pairing_affine(lam, gamma).denominator == 1:
                integral.append(gamma.coroot_vector())
    span_ok = _rank(integral) == 3
    return AdmissibilityReport(not violations, span_ok, tuple(violations), m_star, period)
