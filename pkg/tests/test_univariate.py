from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from g2voa import univariate as up

x = sympy.Symbol("x")
coeff = st.fractions(min_value=-6, max_value=6, max_denominator=4)
polys = st.lists(coeff, max_size=5).map(up.trim)
roots = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3), min_size=1, max_size=4)


def to_sympy(p):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)] or [0], x, domain="QQ")


def from_sympy(p):
    return up.trim([Q(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())])


def from_roots(rs, lead=Q(1)):
    p = [lead]
    for r in rs:
        p = up.mul(p, [-r, Q(1)])
    return p


@given(polys, polys)
def test_mul_matches_sympy(p, q):
    assert up.mul(p, q) == from_sympy(to_sympy(p) * to_sympy(q))


@given(polys, polys)
def test_divmod_matches_sympy(p, q):
    assume(q)
    quo, rem = up.divmod_poly(p, q)
    sq, sr = sympy.div(to_sympy(p), to_sympy(q))
    assert quo == from_sympy(sq) and rem == from_sympy(sr)


@given(polys, polys, polys)
def test_gcd_matches_sympy(p, q, r):
    a, b = up.mul(p, r), up.mul(q, r)
    assume(a or b)
    assert up.gcd(a, b) == from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)).monic())


@given(roots, coeff.filter(bool))
def test_rational_roots_recovered(rs, lead):
    p = from_roots(rs, lead)
    assert up.rational_roots(p) == sorted(set(rs))
    assert up.evaluate(p, rs[0]) == 0


@given(roots)
def test_square_free_factors_match_sympy(rs):
    p = from_roots(rs)
    ours = sorted((tuple(f), i) for f, i in up.square_free_factors(p))
    _, theirs = sympy.sqf_list(to_sympy(p))
    assert ours == sorted((tuple(from_sympy(f.monic())), i) for f, i in theirs)


@given(roots)
def test_split_rational_leaves_irreducible_part(rs):
    p = up.mul(from_roots(rs), [Q(2), Q(0), Q(1)])  # x^2 + 2 has no rational root
    found, rest = up.split_rational(p)
    assert found == sorted(set(rs))
    assert rest == [Q(2), Q(0), Q(1)]


def test_rational_roots_of_zero_polynomial():
    with pytest.raises(ValueError):
        up.rational_roots([])


def test_constant_has_no_roots():
    assert up.rational_roots([Q(3)]) == []
    assert up.split_rational([Q(3)]) == ([], [Q(1)])


def test_derivative_and_text():
    p = [Q(1), Q(0), Q(3)]
    assert up.derivative(p) == [Q(0), Q(6)]
    assert up.to_text(p, "h") == "3 * h^2 + 1"
    assert up.to_text([]) == "0"
