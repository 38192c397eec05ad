from fractions import Fraction as Q

import pytest

from g2voa.affine_pbw import AffineAlgebra, weight_of
from g2voa.chevalley import basis, build_structure_table
from g2voa.classifier import RealAffineRoot, level_weight, shifted_reflection
from g2voa.rootsys import FiniteWeight, Root
from g2voa.singular import (
    LEVELS, SingularCandidate, appendix_identities, build_generators, candidate_element, candidates,
    check_singular, mismatched_candidates, verify_appendix_a,
)


def test_candidates_are_singular():
    for cand in candidates():
        report = check_singular(cand)
        assert report.is_singular, report.to_json()
        assert all(r.is_zero() for r in report.residuals.values())


def test_candidates_are_nonzero():
    for cand in candidates():
        assert not cand.state.is_zero()


def test_mismatched_pairs_fail():
    mism = mismatched_candidates()
    assert len(mism) == 6
    for cand in mism:
        report = check_singular(cand)
        assert not report.is_singular
        # the lowest root vector of the affine algebra is what detects the level
        assert not report.f32_zero
        assert report.e10_zero and report.e01_zero


@pytest.mark.parametrize("k", LEVELS)
@pytest.mark.parametrize("eps", [Q(1, 7), Q(-1, 7), Q(1, 100)])
def test_perturbed_levels_fail(k, eps):
    cand = SingularCandidate.build(k + eps, candidate_element(k))
    assert not check_singular(cand).is_singular


def test_unknown_level_rejected():
    with pytest.raises(ValueError):
        candidate_element(Q(1, 2))


def test_report_json():
    data = check_singular(candidates()[0]).to_json()
    assert data["singular"] is True
    assert data["level"] == "-5/3"
    assert set(data["residuals"]) == {"e10", "e01", "f32"}


def test_generator_weights():
    gens = build_generators()
    assert weight_of(gens["a"]) == (Root(2, 1), -1)
    assert weight_of(gens["b"]) == (Root(4, 2), -2)
    assert weight_of(gens["c"]) == (Root(6, 3), -3)
    assert weight_of(gens["w"]) == (Root(6, 3), -3)


@pytest.mark.parametrize("k", LEVELS)
def test_candidate_weight_is_shifted_reflection(k):
    # v_k sits at r_{delta - (2 alpha + beta)} . k Lambda0
    gamma = RealAffineRoot(Root(-2, -1), 1)
    predicted = shifted_reflection(gamma, level_weight(k))
    root, mode = weight_of(candidate_element(k))
    assert predicted.level == k
    assert predicted.finite == root.as_weight()
    assert predicted.delta_coeff == mode
    assert predicted.finite == FiniteWeight(3 * k + 7, 0)


def test_identity_registry():
    ids = appendix_identities()
    names = [i.id for i in ids]
    assert len(names) == len(set(names))
    assert sum(n.startswith(("raise.", "f32.", "lower.")) for n in names) >= 20


def test_all_identities_hold():
    results = verify_appendix_a()
    failed = [r.identity for r in results if not r.passed]
    assert not failed


def test_sign_deviation_is_recorded():
    results = {r.identity: r for r in verify_appendix_a()}
    r = results["lower.[F11(0),ab]"]
    assert r.passed
    dev = r.deviation
    alg = AffineAlgebra(build_structure_table())
    assert alg.parse(dev["printed"]) == -alg.parse(dev["engine"])
    assert r.to_json()["deviation"]["note"]


def test_cartan_deviation_is_recorded():
    results = {r.identity: r for r in verify_appendix_a()}
    r = results["vacuum.[F32(1),u](v-w).1@-2/3.regrouped"]
    assert r.passed
    assert r.deviation["printed"] != r.deviation["engine"]
    assert sum(1 for x in results.values() if x.deviation) == 2


def test_result_json_shape():
    data = verify_appendix_a()[0].to_json()
    assert data["status"] == "pass"
    assert set(data) >= {"identity", "status", "lhs", "rhs"}


@pytest.mark.parametrize("pair", [("E10", "E01"), ("H10", "E21"), ("E31", "F32"), ("E01", "E31")])
def test_flipped_sign_breaks_identities(pair):
    table = build_structure_table().with_flipped_sign(basis(pair[0]), basis(pair[1]))
    results = verify_appendix_a(AffineAlgebra(table))
    assert not all(r.passed for r in results)


def test_every_nonzero_flip_is_detected():
    table = build_structure_table()
    names = ["E10", "E01", "E11", "E21", "E31", "E32", "H10", "H01", "F10", "F01", "F11", "F21", "F31", "F32"]
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            if not table.bracket(basis(x), basis(y)):
                continue
            mutated = table.with_flipped_sign(basis(x), basis(y))
            assert mutated.check_jacobi(), (x, y)
