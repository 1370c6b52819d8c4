import itertools

import pytest
from hypothesis import given, strategies as st

from grassmoduli.partitions import (
    FundamentalCoeffs,
    Partition,
    dim_gl,
    dim_rect,
    format_partition,
    fund_to_partition,
    parse_partition,
    partition_to_fund,
    rectangle,
)
from grassmoduli.oracle import schur_poly
from grassmoduli.schur import partitions_of


def test_partition_trims_zeros_and_validates():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert len(Partition((3, 0))) == 1
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert Partition() == ()


def test_conjugate():
    assert Partition((3, 1)).conjugate() == (2, 1, 1)
    assert Partition().conjugate() == ()


@pytest.mark.parametrize(
    "n, coeffs, expected",
    [
        (4, (0, 1, 0), (1, 1)),
        (4, (1, 0, 1), (2, 1, 1)),
        (6, (0, 0, 5, 0, 0), (5, 5, 5)),
    ],
)
def test_fund_to_partition(n, coeffs, expected):
    assert fund_to_partition(FundamentalCoeffs(n, coeffs)) == expected


@pytest.mark.parametrize(
    "lam, n, expected",
    [((2, 2, 0, 0), 4, (0, 2, 0)), ((2, 1, 1, 0), 4, (1, 0, 1)), ((3, 3, 3, 3), 4, (0, 0, 0))],
)
def test_partition_to_fund(lam, n, expected):
    assert partition_to_fund(lam, n).coeffs == expected


def test_partition_to_fund_rejects_long_partitions():
    with pytest.raises(ValueError):
        partition_to_fund((1, 1, 1, 1, 1), 4)


def test_fundamental_coeffs_validation():
    with pytest.raises(ValueError):
        FundamentalCoeffs(4, (1, 0))
    with pytest.raises(ValueError):
        FundamentalCoeffs(3, (1, -1))


def test_round_trip_exhaustive():
    for n in range(1, 9):
        for coeffs in itertools.product(range(4), repeat=n - 1):
            c = FundamentalCoeffs(n, coeffs)
            assert partition_to_fund(fund_to_partition(c), n) == c


@pytest.mark.parametrize("lam, n", [((1, 1), 4), ((2, 2), 4), ((2, 1, 1), 4), ((3, 1), 3), ((), 5)])
def test_dim_gl_matches_brute_force(lam, n, ssyt_count):
    assert dim_gl(lam, n) == ssyt_count(lam, n)


def test_dim_gl_spot_values():
    # frozen from the brute-force SSYT count above
    assert dim_gl((1, 1), 4) == 6
    assert dim_gl((2, 2), 4) == 20
    assert dim_gl((2, 1, 1), 4) == 15
    assert dim_gl((), 7) == 1


def test_dim_gl_zero_when_too_many_rows():
    assert dim_gl((1, 1, 1, 1), 3) == 0


def test_dim_gl_equals_schur_count():
    for n in range(1, 7):
        for size in range(0, 13 if n <= 3 else 9):
            for lam in partitions_of(size, n):
                assert dim_gl(lam, n) == schur_poly(lam, n).at_ones(), (lam, n)


@given(st.lists(st.integers(0, 5), max_size=5), st.integers(0, 4), st.integers(5, 8))
def test_dim_gl_ignores_trailing_zeros(parts, zeros, n):
    lam = sorted(parts, reverse=True)
    assert dim_gl(lam, n) == dim_gl(lam + [0] * zeros, n)


def test_dim_rect_examples():
    for k in range(6):
        assert dim_rect(2, k, 1) == k + 1
    assert dim_rect(4, 1, 2) == 6
    assert dim_rect(4, 2, 2) == 20


def test_dim_rect_matches_hook_content():
    for a in range(1, 9):
        for b in range(0, 5):
            for c in range(1, a + 1):
                assert dim_rect(a, b, c) == dim_gl(rectangle(b, c), a)


def test_dim_rect_is_exact_beyond_64_bits():
    d = dim_rect(20, 20, 10)
    assert d > 2**64
    assert d == dim_gl(rectangle(20, 10), 20)


def test_dim_rect_rejects_bad_arguments():
    with pytest.raises(ValueError):
        dim_rect(2, 1, 3)


@pytest.mark.parametrize("text, lam", [("2,1,1", (2, 1, 1)), ("", ()), ("0", ()), ("3", (3,))])
def test_parse_partition(text, lam):
    assert parse_partition(text) == lam


def test_parse_partition_rejects_garbage():
    with pytest.raises(ValueError):
        parse_partition("2,x")
    with pytest.raises(ValueError):
        parse_partition("1,2")


def test_format_partition():
    assert format_partition((2, 1, 1)) == "2,1,1"
    assert parse_partition(format_partition(())) == ()
