"""Chevalley basis of the simple Lie algebra of type G2.

The bracket table is generated rather than typed in.  Only the Serre
presentation is given by hand; the six non-simple root vectors of each sign
are *defined* as iterated brackets of the simple ones, and every other bracket
is obtained by unfolding those definitions with the Jacobi identity.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .rootsys import (
    ALPHA,
    BETA,
    COROOTS,
    DUAL_COXETER,
    POSITIVE_ROOTS,
    ZERO,
    Root,
    inner_product,
)


class StructureError(RuntimeError):
    """The generated bracket table violates a Lie algebra axiom."""


@dataclass(frozen=True)
class BasisElement:
    kind: str  # "E", "F" or "H"
    label: tuple[int, int]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.label[0]}{self.label[1]}"

    @property
    def weight(self) -> Root:
        if self.kind == "H":
            return ZERO
        r = Root(*self.label)
        return r if self.kind == "E" else -r

    def __str__(self) -> str:
        return self.name


# PBW order: all F's, then H10, H01, then all E's; each family by root height.
BASIS: tuple[BasisElement, ...] = (
    tuple(BasisElement("F", r.label) for r in POSITIVE_ROOTS)
    + (BasisElement("H", (1, 0)), BasisElement("H", (0, 1)))
    + tuple(BasisElement("E", r.label) for r in POSITIVE_ROOTS)
)
INDEX: dict[BasisElement, int] = {b: i for i, b in enumerate(BASIS)}
BY_NAME: dict[str, BasisElement] = {b.name: b for b in BASIS}
DIM = len(BASIS)


def basis(name: str) -> BasisElement:
    try:
        return BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown basis element {name!r}") from None


E10, E01, E11, E21, E31, E32 = (BY_NAME[f"E{i}{j}"] for i, j in COROOTS)
F10, F01, F11, F21, F31, F32 = (BY_NAME[f"F{i}{j}"] for i, j in COROOTS)
H10, H01 = BY_NAME["H10"], BY_NAME["H01"]

SIMPLE = frozenset({E10, E01, F10, F01, H10, H01})

# Higher root vectors: X = c * [Y, Z].
DEFINITIONS: dict[BasisElement, tuple[Fraction, BasisElement, BasisElement]] = {
    E11: (Fraction(1), E10, E01),
    E21: (Fraction(1, 2), E11, E10),
    E31: (Fraction(1, 3), E21, E10),
    E32: (Fraction(1), E31, E01),
    F11: (Fraction(1), F01, F10),
    F21: (Fraction(1, 2), F10, F11),
    F31: (Fraction(1, 3), F10, F21),
    F32: (Fraction(1), F01, F31),
}

# Lookup of [Y, Z] for each defining pair.
_DEFINED_PAIRS = {(y, z): (x, 1 / c) for x, (c, y, z) in DEFINITIONS.items()}

Vector = dict  # BasisElement -> Fraction, zero entries dropped


def _coroot_vector(label: tuple[int, int]) -> Vector:
    h = COROOTS[label]
    out = {}
    if h.c10:
        out[H10] = Fraction(h.c10)
    if h.c01:
        out[H01] = Fraction(h.c01)
    return out


def _h_value(h: BasisElement, w: Root) -> Fraction:
    """``<w, h>`` for a simple coroot ``h``."""
    s = ALPHA if h.label == (1, 0) else BETA
    return 2 * inner_product(w, s) / inner_product(s, s)


def _axpy(acc: Vector, c: Fraction, v: Mapping[BasisElement, Fraction]) -> None:
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def _bracket_vec(u: Mapping, v: Mapping) -> Vector:
    acc: Vector = {}
    for x, cx in u.items():
        for y, cy in v.items():
            _axpy(acc, cx * cy, _serre_bracket(x, y))
    return acc


@lru_cache(maxsize=None)
def _serre_bracket_cached(x: BasisElement, y: BasisElement) -> tuple:
    return tuple(_serre_bracket_raw(x, y).items())


def _serre_bracket(x: BasisElement, y: BasisElement) -> Vector:
    return dict(_serre_bracket_cached(x, y))


def _serre_bracket_raw(x: BasisElement, y: BasisElement) -> Vector:
    if x == y:
        return {}
    if x.kind == "H":
        c = _h_value(x, y.weight)
        return {y: c} if c else {}
    if y.kind == "H":
        c = -_h_value(y, x.weight)
        return {x: c} if c else {}
    total = x.weight + y.weight
    if total == ZERO:
        # [E_r, F_r] is fixed by the presentation only for simple r; the rest unfold below.
        if x in SIMPLE and y in SIMPLE:
            sign = 1 if x.kind == "E" else -1
            return {k: sign * c for k, c in _coroot_vector(x.label).items()}
    elif not total.is_root:
        return {}
    if (x, y) in _DEFINED_PAIRS:
        z, c = _DEFINED_PAIRS[(x, y)]
        return {z: c}
    if (y, x) in _DEFINED_PAIRS:
        z, c = _DEFINED_PAIRS[(y, x)]
        return {z: -c}
    if x in SIMPLE and y in DEFINITIONS:
        # [x, c[y1, y2]] = c([[x, y1], y2] + [y1, [x, y2]])
        c, y1, y2 = DEFINITIONS[y]
        acc = _bracket_vec(_serre_bracket(x, y1), {y2: Fraction(1)})
        _axpy(acc, Fraction(1), _bracket_vec({y1: Fraction(1)}, _serre_bracket(x, y2)))
        return {k: c * v for k, v in acc.items()}
    if y in SIMPLE:
        return {k: -v for k, v in _serre_bracket(y, x).items()}
    # Both non-simple: [c[x1, x2], y] = c([x1, [x2, y]] - [x2, [x1, y]])
    c, x1, x2 = DEFINITIONS[x]
    acc = _bracket_vec({x1: Fraction(1)}, _serre_bracket(x2, y))
    _axpy(acc, Fraction(-1), _bracket_vec({x2: Fraction(1)}, _serre_bracket(x1, y)))
    return {k: c * v for k, v in acc.items()}


@dataclass(frozen=True)
class StructureTable:
    """Bracket and normalized invariant form on the 14 basis elements.

    ``brackets[i][j]`` is a tuple of ``(index, coefficient)`` pairs sorted by
    index; ``form[i][j]`` is the normalized form value.
    """

    brackets: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]
    form: tuple[tuple[Fraction, ...], ...]

    def bracket(self, x: BasisElement, y: BasisElement) -> dict[BasisElement, Fraction]:
        return {BASIS[k]: c for k, c in self.brackets[INDEX[x]][INDEX[y]]}

    def normalized_form(self, x: BasisElement, y: BasisElement) -> Fraction:
        return self.form[INDEX[x]][INDEX[y]]

    def ad_matrix(self, x: BasisElement) -> list[list[Fraction]]:
        """Matrix of ``ad x`` acting on column vectors in the basis order."""
        i = INDEX[x]
        m = [[Fraction(0)] * DIM for _ in range(DIM)]
        for j in range(DIM):
            for k, c in self.brackets[i][j]:
                m[k][j] = c
        return m

    def with_flipped_sign(self, x: BasisElement, y: BasisElement) -> StructureTable:
        """Copy with ``[x, y]`` and ``[y, x]`` negated; used for mutation testing."""
        i, j = INDEX[x], INDEX[y]
        rows = [list(r) for r in self.brackets]
        rows[i][j] = tuple((k, -c) for k, c in rows[i][j])
        if i != j:
            rows[j][i] = tuple((k, -c) for k, c in rows[j][i])
        return StructureTable(tuple(tuple(r) for r in rows), self.form)

    def check_antisymmetry(self) -> list[tuple[BasisElement, BasisElement]]:
        bad = []
        for i in range(DIM):
            for j in range(DIM):
                neg = tuple((k, -c) for k, c in self.brackets[j][i])
                if self.brackets[i][j] != neg:
                    bad.append((BASIS[i], BASIS[j]))
        return bad

    def check_jacobi(self) -> list[tuple[BasisElement, BasisElement, BasisElement]]:
        """Triples violating ``[x,[y,z]] = [[x,y],z] + [y,[x,z]]``."""
        bad = []
        for i in range(DIM):
            for j in range(DIM):
                for k in range(DIM):
                    acc: dict[int, Fraction] = {}
                    for m, c in self.brackets[j][k]:
                        for n, d in self.brackets[i][m]:
                            acc[n] = acc.get(n, 0) + c * d
                    for m, c in self.brackets[i][j]:
                        for n, d in self.brackets[m][k]:
                            acc[n] = acc.get(n, 0) - c * d
                    for m, c in self.brackets[i][k]:
                        for n, d in self.brackets[j][m]:
                            acc[n] = acc.get(n, 0) - c * d
                    if any(acc.values()):
                        bad.append((BASIS[i], BASIS[j], BASIS[k]))
        return bad

    def check_invariance(self) -> list[tuple[BasisElement, BasisElement, BasisElement]]:
        """Triples violating ``([x,y],z) + (y,[x,z]) = 0``."""
        bad = []
        for i in range(DIM):
            for j in range(DIM):
                for k in range(DIM):
                    s = sum((c * self.form[m][k] for m, c in self.brackets[i][j]), Fraction(0))
                    s += sum((c * self.form[j][m] for m, c in self.brackets[i][k]), Fraction(0))
                    if s:
                        bad.append((BASIS[i], BASIS[j], BASIS[k]))
        return bad

    def to_json(self) -> str:
        """Full table as JSON: ``"x,y" -> [[name, "p/q"], ...]`` plus the form."""
        payload = {
            "bracket": {
                f"{BASIS[i].name},{BASIS[j].name}": [
                    [BASIS[k].name, str(c)] for k, c in self.brackets[i][j]
                ]
                for i in range(DIM)
                for j in range(DIM)
            },
            "form": {
                f"{BASIS[i].name},{BASIS[j].name}": str(self.form[i][j])
                for i in range(DIM)
                for j in range(DIM)
                if self.form[i][j]
            },
        }
        return json.dumps(payload, indent=1, sort_keys=True)


def _killing_normalized(brackets) -> tuple[tuple[Fraction, ...], ...]:
    # tr(ad x ad y) = 2 h^vee (x, y) for the form with (theta, theta) = 2.
    scale = Fraction(1, 2 * DUAL_COXETER)
    form = [[Fraction(0)] * DIM for _ in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            tr = Fraction(0)
            for m in range(DIM):
                # (ad x ad y) e_m -> coefficient of e_m
                for n, c in brackets[j][m]:
                    for p, d in brackets[i][n]:
                        if p == m:
                            tr += c * d
            form[i][j] = scale * tr
    return tuple(tuple(r) for r in form)


@lru_cache(maxsize=1)
def build_structure_table() -> StructureTable:
    """Generate and verify the G2 bracket table in the fixed Chevalley basis."""
    rows = []
    for x in BASIS:
        row = []
        for y in BASIS:
            v = _serre_bracket(x, y)
            row.append(tuple(sorted((INDEX[k], c) for k, c in v.items() if c)))
        rows.append(tuple(row))
    brackets = tuple(rows)
    table = StructureTable(brackets, _killing_normalized(brackets))

    problems = []
    if table.check_antisymmetry():
        problems.append("antisymmetry")
    if table.check_jacobi():
        problems.append("Jacobi identity")
    for r in POSITIVE_ROOTS:
        e, f = BY_NAME[f"E{r.label[0]}{r.label[1]}"], BY_NAME[f"F{r.label[0]}{r.label[1]}"]
        if table.bracket(e, f) != _coroot_vector(r.label):
            problems.append(f"[{e},{f}] is not the coroot")
    if table.normalized_form(E32, F32) != 1:
        problems.append("(E32, F32) != 1")
    if problems:
        raise StructureError("generated table fails: " + ", ".join(problems))
    return table


def normalized_form(x: BasisElement, y: BasisElement) -> Fraction:
    return build_structure_table().normalized_form(x, y)


def coroot(label: tuple[int, int]) -> dict[BasisElement, Fraction]:
    """``H_ij`` as a combination of ``H10`` and ``H01``."""
    return _coroot_vector(label)
