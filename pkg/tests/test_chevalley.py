from fractions import Fraction as Q
from itertools import product

import pytest

import oracle_g2
from g2voa.chevalley import BASIS, DIM, basis, build_structure_table, coroot
from g2voa.rootsys import COROOTS, POSITIVE_ROOTS


@pytest.fixture(scope="module")
def table():
    return build_structure_table()


def test_basis_size():
    assert DIM == 14 and len({b.name for b in BASIS}) == 14


def test_antisymmetry(table):
    assert table.check_antisymmetry() == []


def test_jacobi(table):
    assert table.check_jacobi() == []


def test_form_invariance(table):
    assert table.check_invariance() == []


def test_coroots_from_brackets(table):
    for r in POSITIVE_ROOTS:
        i, j = r.label
        h = table.bracket(basis(f"E{i}{j}"), basis(f"F{i}{j}"))
        c = COROOTS[(i, j)]
        assert h == {k: v for k, v in ((basis("H10"), Q(c.c10)), (basis("H01"), Q(c.c01))) if v}
        assert coroot((i, j)) == h


def test_highest_root_form_normalization(table):
    assert table.normalized_form(basis("E32"), basis("F32")) == 1
    assert table.normalized_form(basis("E10"), basis("F10")) == 3
    assert table.normalized_form(basis("H10"), basis("H10")) == 6
    assert table.normalized_form(basis("H10"), basis("H01")) == -3


def test_selected_constants(table):
    assert table.bracket(basis("E21"), basis("E11")) == {basis("E32"): 3}
    assert table.bracket(basis("E32"), basis("F01")) == {basis("E31"): 1}
    assert table.bracket(basis("E11"), basis("F01")) == {basis("E10"): 1}


def test_structure_constants_are_integers(table):
    assert all(c.denominator == 1 for row in table.brackets for entry in row for _, c in entry)


def test_oracle_serre_relations():
    assert oracle_g2.serre_defects() == []


def test_table_matches_live_oracle(table):
    sc = oracle_g2.structure_constants()
    for x, y in product(oracle_g2.NAMES, repeat=2):
        mine = {b.name: c for b, c in table.bracket(basis(x), basis(y)).items()}
        assert mine == {n: Q(str(c)) for n, c in sc[(x, y)].items()}, (x, y)


def test_table_matches_frozen_oracle(table, oracle_fixture):
    for x, y in product(oracle_g2.NAMES, repeat=2):
        mine = {b.name: str(c) for b, c in table.bracket(basis(x), basis(y)).items()}
        assert mine == oracle_fixture["brackets"].get(f"{x},{y}", {}), (x, y)
        assert str(table.normalized_form(basis(x), basis(y))) == oracle_fixture["form"].get(f"{x},{y}", "0")


def test_flipped_sign_breaks_jacobi(table):
    bad = table.with_flipped_sign(basis("E10"), basis("E01"))
    assert bad.bracket(basis("E01"), basis("E10")) == {basis("E11"): 1}
    assert bad.check_jacobi() != []


def test_json_dump(table):
    import json

    data = json.loads(table.to_json())
    assert data
