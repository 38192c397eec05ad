"""Expected values used by ``--check`` modes of the command line."""
from __future__ import annotations

from fractions import Fraction as Q

from .rootsys import FiniteWeight

LEVELS = (Q(-5, 3), Q(-4, 3), Q(-2, 3))


def _w(*pairs) -> frozenset[FiniteWeight]:
    return frozenset(FiniteWeight(Q(a), Q(b)) for a, b in pairs)


EXPECTED_ZEROS = {
    Q(-5, 3): _w((0, 0), (0, "-2/3"), (1, "-4/3")),
    Q(-4, 3): _w((0, 0), (0, "-2/3"), (0, "-1/3"), (1, 0), (1, "-4/3"), (2, "-5/3")),
    Q(-2, 3): _w(
        (0, 0), (0, "-2/3"), (0, "-1/3"), (0, "1/3"), (0, 1), (1, 0),
        (1, "-4/3"), (1, "-2/3"), (2, 0), (2, "-5/3"), (2, "-4/3"), (4, "-7/3"),
    ),
}

EXPECTED_DOMINANT = {
    Q(-5, 3): _w((0, 0)),
    Q(-4, 3): _w((0, 0), (1, 0)),
    Q(-2, 3): _w((0, 0), (1, 0), (0, 1), (2, 0)),
}

# [v_k] as a polynomial in [a], [b], [c]: (coefficient, word) pairs.
ZHU_FORMULAS = {
    Q(-5, 3): ((Q(1, 3), "aa"), (Q(-1), "b")),
    Q(-4, 3): ((Q(2, 9), "aaa"), (Q(-1), "ab"), (Q(-3), "c")),
    Q(-2, 3): (
        (Q(2, 27), "aaaaa"), (Q(-5, 9), "aaab"), (Q(-1), "aac"), (Q(1), "abb"), (Q(3), "bc"),
    ),
}


def formula_text(level) -> str:
    parts = []
    for c, word in ZHU_FORMULAS[Q(level)]:
        mono = "".join(f"[{x}]" for x in word)
        parts.append(f"{c} {mono}")
    return " + ".join(parts)
