"""Candidate singular vectors in N(k, 0) and the commutator identities behind them.

The building blocks are

    a = E21(-1)
    b = E31(-1) E11(-1) - E32(-1) E10(-1)
    c = E31(-1)^2 E01(-1) - E32(-1) E31(-1) H01(-1) - E32(-1)^2 F01(-1)
    w = E31(-1) E32(-2) - E32(-1) E31(-2)
    u = a^2/3 - b
    v = 2 a^3/9 - a b - 3 c

and the candidates are ``u.1`` (k = -5/3), ``(v + w).1`` (k = -4/3) and
``u (v - w).1`` (k = -2/3).  A vector is singular when E10(0), E01(0) and
F32(1) all kill it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .affine_pbw import AffineAlgebra, UEAElement, VacuumState, default_algebra

Q = Fraction
LEVELS = (Q(-5, 3), Q(-4, 3), Q(-2, 3))
GENERATOR_NAMES = ("a", "b", "c", "w", "u", "v")


def build_generators(algebra: AffineAlgebra | None = None) -> dict[str, UEAElement]:
    alg = algebra or default_algebra()
    g = alg.gen
    a = g("E21", -1)
    b = g("E31", -1) * g("E11", -1) - g("E32", -1) * g("E10", -1)
    c = (
        g("E31", -1) ** 2 * g("E01", -1)
        - g("E32", -1) * g("E31", -1) * g("H01", -1)
        - g("E32", -1) ** 2 * g("F01", -1)
    )
    w = g("E31", -1) * g("E32", -2) - g("E32", -1) * g("E31", -2)
    u = Q(1, 3) * a**2 - b
    v = Q(2, 9) * a**3 - a * b - 3 * c
    return {"a": a, "b": b, "c": c, "w": w, "u": u, "v": v}


def candidate_element(level, algebra: AffineAlgebra | None = None) -> UEAElement:
    """The element whose action on the vacuum gives the candidate for ``level``."""
    gens = build_generators(algebra)
    u, v, w = gens["u"], gens["v"], gens["w"]
    table = {LEVELS[0]: u, LEVELS[1]: v + w, LEVELS[2]: u * (v - w)}
    try:
        return table[Q(level)]
    except KeyError:
        raise ValueError(f"no candidate singular vector for level {level}") from None


@dataclass(frozen=True)
class SingularCandidate:
    level: Fraction
    element: UEAElement
    state: VacuumState

    @classmethod
    def build(cls, level, element: UEAElement | None = None) -> SingularCandidate:
        """Candidate at ``level``; ``element`` defaults to the matching one.

        Passing a different ``element`` gives a mismatched pairing, which is
        how the negative controls are built.
        """
        level = Q(level)
        if element is None:
            element = candidate_element(level)
        return cls(level, element, element.algebra.apply_to_vacuum(element, level))


def candidates(algebra: AffineAlgebra | None = None) -> list[SingularCandidate]:
    return [SingularCandidate.build(k, candidate_element(k, algebra)) for k in LEVELS]


def mismatched_candidates(algebra: AffineAlgebra | None = None) -> list[SingularCandidate]:
    """Every (level, element) pairing except the three correct ones."""
    out = []
    for k in LEVELS:
        for k2 in LEVELS:
            if k2 != k:
                out.append(SingularCandidate.build(k, candidate_element(k2, algebra)))
    return out


@dataclass(frozen=True)
class SingularityReport:
    level: Fraction
    e10_zero: bool
    e01_zero: bool
    f32_zero: bool
    residuals: dict[str, VacuumState]

    @property
    def is_singular(self) -> bool:
        return self.e10_zero and self.e01_zero and self.f32_zero

    def to_json(self) -> dict:
        return {
            "level": str(self.level),
            "e10_zero": self.e10_zero,
            "e01_zero": self.e01_zero,
            "f32_zero": self.f32_zero,
            "singular": self.is_singular,
            "residuals": {k: str(v) for k, v in self.residuals.items()},
        }


SINGULARITY_OPERATORS = (("e10", "E10", 0), ("e01", "E01", 0), ("f32", "F32", 1))


def check_singular(candidate: SingularCandidate) -> SingularityReport:
    alg = candidate.element.algebra
    residuals = {
        key: candidate.state.act(alg.gen(name, mode)) for key, name, mode in SINGULARITY_OPERATORS
    }
    return SingularityReport(
        candidate.level,
        residuals["e10"].is_zero(),
        residuals["e01"].is_zero(),
        residuals["f32"].is_zero(),
        residuals,
    )


# -- identity registry ------------------------------------------------------------

_TOKEN = re.compile(r"([EFH]\d\d)\((-?\d+)\)|([abcuvwK])$")


class _Builder:
    """Shorthand for writing products such as ``m("a E31(-1) H01(-1)")``."""

    def __init__(self, algebra: AffineAlgebra):
        self.alg = algebra
        self.gens = build_generators(algebra)

    def m(self, text: str) -> UEAElement:
        out = self.alg.one()
        for tok in text.split():
            hit = _TOKEN.fullmatch(tok)
            if not hit:
                raise ValueError(f"bad token {tok!r}")
            if hit.group(1):
                out = out * self.alg.gen(hit.group(1), int(hit.group(2)))
            elif tok == "K":
                out = out * self.alg.K
            else:
                out = out * self.gens[tok]
        return out

    def br(self, x: str | UEAElement, y: str | UEAElement) -> UEAElement:
        x = self.m(x) if isinstance(x, str) else x
        y = self.m(y) if isinstance(y, str) else y
        return x.commutator(y)

    def vac(self, x: UEAElement) -> UEAElement:
        return self.alg.vacuum_project(x)


@dataclass(frozen=True)
class Identity:
    """``lhs == rhs`` in U(affine g) with Q[K] coefficients.

    With ``on_vacuum`` both sides are first applied to the vacuum keeping
    ``K`` symbolic; with ``level`` set, ``K`` is then specialized.
    """

    id: str
    lhs: Callable[[_Builder], UEAElement]
    rhs: Callable[[_Builder], UEAElement]
    on_vacuum: bool = False
    level: Fraction | None = None
    # Set when the printed right-hand side is wrong: ``rhs`` is then the
    # corrected form and ``printed`` the one as displayed, kept for the report.
    printed: Callable[[_Builder], UEAElement] | None = None
    note: str = ""


@dataclass(frozen=True)
class IdentityResult:
    identity: str
    passed: bool
    lhs: str
    rhs: str
    diff: str
    deviation: dict | None = None

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "status": "pass" if self.passed else "fail",
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.deviation is not None:
            out["deviation"] = self.deviation
        return out


def _vw(B: _Builder) -> UEAElement:
    return B.m("v") - B.m("w")


def _lemma_e10() -> list[Identity]:
    return [
        Identity("raise.[a,E10(0)]", lambda B: B.br("a", "E10(0)"), lambda B: 3 * B.m("E31(-1)")),
        Identity("raise.[b,E10(0)]", lambda B: B.br("b", "E10(0)"), lambda B: 2 * B.m("E31(-1) E21(-1)")),
        Identity(
            "raise.[E31(-1)^2 E01(-1),E10(0)]",
            lambda B: B.br("E31(-1) E31(-1) E01(-1)", "E10(0)"),
            lambda B: -B.m("E31(-1) E31(-1) E11(-1)"),
        ),
        Identity(
            "raise.[E32(-1) E31(-1) H01(-1),E10(0)]",
            lambda B: B.br("E32(-1) E31(-1) H01(-1)", "E10(0)"),
            lambda B: -B.m("E32(-1) E31(-1) E10(-1)"),
        ),
        Identity(
            "raise.[E32(-1)^2 F01(-1),E10(0)]",
            lambda B: B.br("E32(-1) E32(-1) F01(-1)", "E10(0)"),
            lambda B: B.m("E32(-1)") * 0,
        ),
        Identity(
            "raise.[c,E10(0)]",
            lambda B: B.br("c", "E10(0)"),
            lambda B: B.m("E32(-1) E31(-1) E10(-1)") - B.m("E31(-1) E31(-1) E11(-1)"),
        ),
        Identity("raise.[u,E10(0)]", lambda B: B.br("u", "E10(0)"), lambda B: B.m("a") * 0),
        Identity("raise.[v,E10(0)]", lambda B: B.br("v", "E10(0)"), lambda B: B.m("a") * 0),
        Identity("raise.[w,E10(0)]", lambda B: B.br("w", "E10(0)"), lambda B: B.m("a") * 0),
    ] + [
        Identity(f"raise.[{x},E01(0)]", lambda B, x=x: B.br(x, "E01(0)"), lambda B: B.m("a") * 0)
        for x in GENERATOR_NAMES
    ]


def _lemma_f32() -> list[Identity]:
    def b_rhs(B):
        return (
            B.m("E31(-1) F21(0)")
            - B.m("E11(-1) F01(0)")
            - B.m("E10(-1) H32(0)")
            + B.m("E10(-1)")
            + B.m("K E10(-1)")
        )

    def c_rhs(B):
        return (
            B.m("E32(-1) E31(-1) F32(0)")
            + B.m("E32(-1) H01(-1) F01(0)")
            - 2 * B.m("E32(-1) F01(-1) H32(0)")
            + (2 * B.m("K") + 2) * B.m("E32(-1) F01(-1)")
            + B.m("E31(-1) E31(-1) F31(0)")
            - 2 * B.m("E31(-1) E01(-1) F01(0)")
            - B.m("E31(-1) H01(-1) H32(0)")
            + (B.m("K") + 1) * B.m("E31(-1) H01(-1)")
        )

    def u_rhs(B):
        return (
            -(B.m("K") + Q(5, 3)) * B.m("E10(-1)")
            - B.m("E31(-1) F21(0)")
            - Q(2, 3) * B.m("E21(-1) F11(0)")
            + B.m("E11(-1) F01(0)")
            + B.m("E10(-1) H32(0)")
        )

    def v_rhs(B):
        # The last two terms are left unexpanded in the displayed formula;
        # the engine's own brackets are substituted for them.
        return (
            -B.m("E32(-1) E10(-1) F11(0)")
            - 3 * B.m("E32(-1) F01(-1)")
            + Q(4, 3) * B.m("E31(-2)")
            + B.m("E31(-1) E11(-1) F11(0)")
            - B.m("E31(-1) H11(-1)")
            - Q(2, 3) * B.m("a a F11(0)")
            - Q(1, 3) * B.m("a E10(-1)")
            - B.m("a") * B.br("b", "F32(1)")
            - 3 * B.br("c", "F32(1)")
        )

    def w_rhs(B):
        return (
            -B.m("E32(-2) F01(0)")
            + B.m("E32(-1) F01(-1)")
            - B.m("E31(-2) H32(0)")
            + B.m("E31(-1) H32(-1)")
            + B.m("K E31(-2)")
        )

    return [
        Identity("f32.[a,F32(1)]", lambda B: B.br("a", "F32(1)"), lambda B: -B.m("F11(0)")),
        Identity("f32.[b,F32(1)]", lambda B: B.br("b", "F32(1)"), b_rhs),
        Identity("f32.[c,F32(1)]", lambda B: B.br("c", "F32(1)"), c_rhs),
        Identity("f32.[u,F32(1)]", lambda B: B.br("u", "F32(1)"), u_rhs),
        Identity("f32.[v,F32(1)]", lambda B: B.br("v", "F32(1)"), v_rhs),
        Identity("f32.[w,F32(1)]", lambda B: B.br("w", "F32(1)"), w_rhs),
    ]


def _lemma_lowering() -> list[Identity]:
    def f11_rhs(B):
        return (
            (Q(1, 3) * B.m("a a") - 2 * B.m("b")) * B.m("E10(-1)")
            + B.m("a E31(-1) H10(-1)")
            - 5 * B.m("a E31(-2)")
            + 5 * B.m("E31(-1) E21(-2)")
            + 3 * B.m("E31(-1) E31(-1) F10(-1)")
            + 3 * B.m("E32(-1) E31(-1) F11(-1)")
            - 3 * B.m("a E32(-1) F01(-1)")
        )

    def f21_rhs(B):
        return (
            (-Q(2, 3) * B.m("a a") + B.m("b")) * B.m("H21(-1)")
            + Q(2, 3) * B.m("a E21(-2)")
            - 2 * B.m("a E31(-1) F10(-1)")
            - 2 * B.m("a E32(-1) F11(-1)")
            + 3 * B.m("E31(-1) E11(-1) H01(-1)")
            + 3 * B.m("E32(-1) E10(-1) H01(-1)")
            - 6 * B.m("E31(-1) E10(-1) E01(-1)")
            + 6 * B.m("E32(-1) E11(-1) F01(-1)")
            + 4 * B.m("E11(-1) E31(-2)")
            - 4 * B.m("E10(-1) E32(-2)")
        )

    def f11_ab_printed(B):
        inner = -B.m("E31(-1) H11(-1)") + B.m("a E10(-1)") - 3 * B.m("E32(-1) F01(-1)")
        return -2 * B.m("E10(-1) b") - B.m("a") * inner

    def f11_ab(B):
        # [F11(0), a] = +2 E10(-1), consistent with the a^3 line above; the
        # displayed form carries the opposite overall sign.
        return -f11_ab_printed(B)

    def f11_c(B):
        return (
            -B.m("E31(-1) E31(-1) F10(-1)")
            + B.m("a E31(-1) H01(-1)")
            - B.m("E32(-1) E31(-1) F11(-1)")
            + 2 * B.m("a E32(-1) F01(-1)")
        )

    return [
        Identity("lower.[H32(0),v-w]", lambda B: B.br(B.m("H32(0)"), _vw(B)), lambda B: 3 * _vw(B)),
        Identity("lower.[F01(0),v-w]", lambda B: B.br(B.m("F01(0)"), _vw(B)), lambda B: B.m("a") * 0),
        Identity("lower.[F11(0),v-w]", lambda B: B.br(B.m("F11(0)"), _vw(B)), f11_rhs),
        Identity("lower.[F21(0),v-w]", lambda B: B.br(B.m("F21(0)"), _vw(B)), f21_rhs),
        Identity(
            "lower.[F11(0),a^3]",
            lambda B: B.br("F11(0)", "a a a"),
            lambda B: 6 * B.m("a a E10(-1)") - 18 * B.m("a E31(-2)"),
        ),
        Identity(
            "lower.[F11(0),ab]",
            lambda B: B.br("F11(0)", "a b"),
            f11_ab,
            printed=f11_ab_printed,
            note="printed right-hand side has the wrong overall sign",
        ),
        Identity("lower.[F11(0),c]", lambda B: B.br("F11(0)", "c"), f11_c),
        Identity(
            "lower.[F11(0),w]",
            lambda B: B.br("F11(0)", "w"),
            lambda B: B.m("a E31(-2)") - B.m("E31(-1) E21(-2)"),
        ),
        Identity(
            "lower.[E10(-1),b]",
            lambda B: B.br("E10(-1)", "b"),
            lambda B: -2 * B.m("E31(-1) E21(-2)"),
        ),
        Identity("lower.[a,b]", lambda B: B.br("a", "b"), lambda B: 3 * B.m("w")),
    ]


def _singularity_proof() -> list[Identity]:
    """Vacuum-level steps used to show F32(1) kills the k = -4/3 and k = -2/3 candidates."""
    k43, k23 = LEVELS[1], LEVELS[2]

    def f32_vw(B):
        return -B.br(B.m("v") + B.m("w"), B.m("F32(1)"))

    def f32_vw_rhs(B):
        K = B.m("K")
        return (
            3 * B.m("E32(-1) F01(-1)")
            - Q(4, 3) * B.m("E31(-2)")
            + B.m("E31(-1) H11(-1)")
            + Q(1, 3) * B.m("a E10(-1)")
            + (K + 1) * B.m("a E10(-1)")
            + 3 * (2 * K + 2) * B.m("E32(-1) F01(-1)")
            + 3 * (K + 1) * B.m("E31(-1) H01(-1)")
            - B.m("E32(-1) F01(-1)")
            - B.m("E31(-1) H32(-1)")
            - K * B.m("E31(-2)")
        )

    def left_part(B):
        return B.br("F32(1)", "u") * _vw(B)

    def left_general(B):
        K = B.m("K")
        return (
            Q(2, 9) * (K - Q(1, 3)) * B.m("a a a E10(-1)")
            - K * B.m("b a E10(-1)")
            - (3 * K + 2) * B.m("E10(-1) c")
            - (4 * K + Q(8, 3)) * B.m("w E10(-1)")
            - 6 * B.m("u E31(-1) H01(-1)")
            - 6 * B.m("u E32(-1) F01(-1)")
            - 2 * B.m("u E31(-1) H10(-1)")
            + (2 * K + Q(4, 3)) * B.m("E31(-1) a E21(-2)")
            + 3 * K * B.m("b E31(-2)")
            - (2 * K + Q(2, 3)) * B.m("a a E31(-2)")
        )

    def left_at_level(B):
        return (
            -Q(2, 9) * B.m("a a a E10(-1)")
            + Q(2, 3) * B.m("b a E10(-1)")
            - 6 * B.m("u E31(-1) H01(-1)")
            - 6 * B.m("u E32(-1) F01(-1)")
            - 2 * B.m("u E31(-1) H10(-1)")
            + 2 * B.m("u E31(-2)")
        )

    def left_regrouped(B, first_cartan="H01"):
        return (
            -Q(2, 3) * B.m("u a E10(-1)")
            - 6 * B.m(f"u E31(-1) {first_cartan}(-1)")
            - 6 * B.m("u E32(-1) F01(-1)")
            - 2 * B.m("u E31(-1) H10(-1)")
            + 2 * B.m("u E31(-2)")
        )

    def right_part(B):
        return B.m("u") * B.br(B.m("F32(1)"), _vw(B))

    def right_general(B):
        K = B.m("K")
        return (
            (6 * K + 10) * B.m("u E32(-1) F01(-1)")
            + (K + Q(4, 3)) * B.m("u a E10(-1)")
            + 2 * B.m("u E31(-1) H10(-1)")
            + (3 * K + 8) * B.m("u E31(-1) H01(-1)")
            + (K - Q(4, 3)) * B.m("u E31(-2)")
        )

    def right_at_level(B):
        return (
            6 * B.m("u E32(-1) F01(-1)")
            + Q(2, 3) * B.m("u a E10(-1)")
            + 2 * B.m("u E31(-1) H10(-1)")
            + 6 * B.m("u E31(-1) H01(-1)")
            - 2 * B.m("u E31(-2)")
        )

    return [
        Identity("vacuum.-[v+w,F32(1)].1", f32_vw, f32_vw_rhs, on_vacuum=True),
        Identity("vacuum.-[v+w,F32(1)].1@-4/3", f32_vw, lambda B: B.m("a") * 0, on_vacuum=True, level=k43),
        Identity("vacuum.[F32(1),u](v-w).1", left_part, left_general, on_vacuum=True),
        Identity("vacuum.[F32(1),u](v-w).1@-2/3", left_part, left_at_level, on_vacuum=True, level=k23),
        Identity(
            "vacuum.[F32(1),u](v-w).1@-2/3.regrouped",
            left_part,
            left_regrouped,
            on_vacuum=True,
            level=k23,
            printed=lambda B: left_regrouped(B, "H10"),
            note="printed form has H10 in place of H01 in the first u E31(-1) term",
        ),
        Identity("vacuum.u[F32(1),v-w].1", right_part, right_general, on_vacuum=True),
        Identity("vacuum.u[F32(1),v-w].1@-2/3", right_part, right_at_level, on_vacuum=True, level=k23),
    ]


def appendix_identities() -> list[Identity]:
    return _lemma_e10() + _lemma_f32() + _lemma_lowering() + _singularity_proof()


def evaluate_identity(identity: Identity, algebra: AffineAlgebra | None = None) -> IdentityResult:
    B = _Builder(algebra or default_algebra())
    lhs, rhs = identity.lhs(B), identity.rhs(B)
    if identity.on_vacuum:
        lhs, rhs = B.vac(lhs), B.vac(rhs)
    if identity.level is not None:
        lhs, rhs = lhs.specialize(identity.level), rhs.specialize(identity.level)
    diff = lhs - rhs
    deviation = None
    if identity.printed is not None:
        deviation = {
            "note": identity.note,
            "engine": str(lhs),
            "printed": str(identity.printed(B)),
        }
    return IdentityResult(identity.id, not diff, str(lhs), str(rhs), str(diff), deviation)


def verify_appendix_a(algebra: AffineAlgebra | None = None) -> list[IdentityResult]:
    return [evaluate_identity(i, algebra) for i in appendix_identities()]
