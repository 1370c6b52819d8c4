import random
from fractions import Fraction

import pytest

from grassmoduli.oracle import (
    MonomialPoly,
    OracleLimitError,
    lowest_weight_pairing,
    schur_poly,
    square_vars,
    to_schur_basis,
)
from grassmoduli.partitions import rectangle
from grassmoduli.schur import SchurExpansion


def test_schur_poly_single_box():
    assert schur_poly((1,), 2).terms == {(1, 0): 1, (0, 1): 1}


@pytest.mark.parametrize("lam, n", [((1, 1), 4), ((2, 2), 4), ((2, 1), 3), ((3, 1, 1), 3)])
def test_schur_poly_counts_tableaux(lam, n, ssyt_count):
    assert schur_poly(lam, n).at_ones() == ssyt_count(lam, n)


def test_schur_poly_too_many_rows_is_zero():
    assert schur_poly((1, 1, 1), 2).terms == {}


def test_schur_poly_is_symmetric_under_transpositions():
    rng = random.Random(7)
    for lam, n in [((2, 1), 3), ((3, 2, 1), 4), ((2, 2, 1), 5), ((4, 1), 5)]:
        f = schur_poly(lam, n)
        for _ in range(5):
            a, b = rng.sample(range(n), 2)
            perm = list(range(n))
            perm[a], perm[b] = b, a
            assert f.permute(perm) == f


def test_to_schur_basis_round_trip():
    assert to_schur_basis(schur_poly((2, 1), 3)) == SchurExpansion({(2, 1): 1})


def test_to_schur_basis_of_product():
    f = schur_poly((1, 1), 4)
    assert to_schur_basis(f * f) == SchurExpansion({(2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1})


def test_power_sum_identity():
    assert to_schur_basis(square_vars(schur_poly((1,), 3))) == SchurExpansion({(2,): 1, (1, 1): -1})


def test_square_vars():
    assert square_vars(schur_poly((1,), 2)).terms == {(2, 0): 1, (0, 2): 1}
    assert square_vars(MonomialPoly.one(3)) == MonomialPoly.one(3)
    assert to_schur_basis(square_vars(schur_poly((1, 1), 4))) == SchurExpansion(
        {(2, 2): 1, (2, 1, 1): -1, (1, 1, 1, 1): 1}
    )


def test_to_schur_basis_rejects_non_symmetric():
    with pytest.raises(ValueError):
        to_schur_basis(MonomialPoly(2, {(1, 0): 1}))


def test_evaluate():
    f = schur_poly((1, 1), 3)  # e_2
    assert f.evaluate([1, 2, 3]) == Fraction(11)


@pytest.mark.parametrize("p, q, k", [(2, 2, 1), (3, 2, 2), (4, 1, 3), (3, 3, 1)])
def test_pairing_of_doubled_rectangle(p, q, k):
    assert lowest_weight_pairing(rectangle(2 * k, q), p, q) == -2 * k


def test_pairing_spot_values():
    assert lowest_weight_pairing((2, 1, 1), 2, 2) == -1
    assert lowest_weight_pairing((1, 1, 1, 1), 2, 2) == 0


def test_monomial_cap(monkeypatch):
    monkeypatch.setenv("GRASSMODULI_MAX_CELLS", "10")
    f = schur_poly((1,), 4)
    with pytest.raises(OracleLimitError):
        f * f * f
