from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from g2voa.affine_pbw import (
    AffineGenerator, VacuumState, apply_to_vacuum, bracket_affine, default_algebra,
    vacuum_project, weight_of,
)
from g2voa.chevalley import BASIS, basis
from g2voa.pbw import inversions
from g2voa.rootsys import Root

alg = default_algebra()
names = st.sampled_from([b.name for b in BASIS])
modes = st.integers(-2, 2)
gens = st.builds(lambda n, m: alg.gen(n, m), names, modes)
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def elements(draw, max_terms=3, max_len=3):
    out = alg.element()
    for _ in range(draw(st.integers(1, max_terms))):
        term = alg.one()
        for _ in range(draw(st.integers(0, max_len))):
            term = term * draw(gens)
        out = out + draw(coeffs) * term
    return out


def g(name, mode):
    return alg.gen(name, mode)


def test_central_term():
    # [E32(1), F32(-1)] = H32(0) + K since (E32, F32) = 1
    assert bracket_affine(AffineGenerator(basis("E32"), 1), AffineGenerator(basis("F32"), -1)) == g("H32", 0) + alg.K
    # [E10(m), F10(-m)] = H10(0) + 3 m K
    assert g("E10", 2).commutator(g("F10", -2)) == g("H10", 0) + 6 * alg.K


def test_zero_mode_has_no_central_term():
    assert g("E32", 0).commutator(g("F32", 0)) == g("H32", 0)


def test_k_is_central():
    for b in BASIS:
        assert bracket_affine("K", AffineGenerator(b, 1)) == alg.element()


def test_canonical_words_are_sorted():
    x = g("E32", -1) * g("F01", -2) * g("H10", 1) * g("E10", -1)
    for w in x.terms:
        assert inversions(w) == 0


def test_format_and_parse_round_trip():
    x = (g("E10", 1) * g("F10", -1) + Q(2, 3) * g("E21", -1) ** 2) * (alg.K + 1)
    text = str(x)
    assert alg.parse(text) == x
    assert "K" in text


def test_zero_formats_as_zero():
    assert str(alg.element()) == "0"
    assert alg.parse("0") == alg.element()


def test_weight_of_building_blocks():
    assert weight_of(g("E21", -1)) == (Root(2, 1), -1)
    c = g("E31", -1) ** 2 * g("E01", -1) - g("E32", -1) * g("E31", -1) * g("H01", -1)
    assert weight_of(c) == (Root(6, 3), -3)
    assert weight_of(g("E10", 0) + g("E01", 0)) is None


def test_vacuum_annihilation():
    assert apply_to_vacuum(g("E10", 0), -1).is_zero()
    s = apply_to_vacuum(g("E32", 1) * g("F32", -1), Q(-5, 3))
    assert s.element == Q(-5, 3) * alg.one()


def test_vacuum_project_keeps_k():
    x = g("E32", 1) * g("F32", -1)
    assert vacuum_project(x) == alg.K
    assert vacuum_project(x).specialize(Q(-2, 3)) == Q(-2, 3) * alg.one()


def test_vacuum_state_rejects_annihilators():
    with pytest.raises(ValueError):
        VacuumState(g("E10", 0), Q(-5, 3))


def test_vacuum_action_composes():
    s = apply_to_vacuum(g("E21", -1), Q(-4, 3))
    t = s.act(g("F21", 0))
    assert t.element == apply_to_vacuum(g("F21", 0) * g("E21", -1), Q(-4, 3)).element


@given(elements(), elements(), elements())
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements(), elements())
def test_distributivity_and_commutator_antisymmetry(x, y):
    assert x.commutator(y) == -y.commutator(x)
    assert (x + y) * (x - y) == x * x - x * y + y * x - y * y


@given(gens, gens, gens)
def test_affine_jacobi(x, y, z):
    total = x.commutator(y.commutator(z)) + y.commutator(z.commutator(x)) + z.commutator(x.commutator(y))
    assert not total


@given(elements())
def test_normal_form_is_idempotent(x):
    again = alg.element(dict(x.terms))
    assert again == x


@given(gens, gens)
def test_grading_of_products(x, y):
    wx, wy = weight_of(x), weight_of(y)
    prod = x * y
    if prod:
        assert weight_of(prod) == (wx[0] + wy[0], wx[1] + wy[1])


@given(elements(), st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_specialization_is_a_ring_map(x, k):
    y = x * alg.K + x
    assert y.specialize(k) == x.specialize(k) * (k + 1)
