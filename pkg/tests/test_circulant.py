import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circsing.circulant import (
    CirculantSpec,
    complement_row,
    exact_determinant,
    format_spec,
    gamma_strip,
    parse_row,
    parse_spec,
    representer,
    singularity,
    spectrum_numeric,
    two_value_determinant,
)
from circsing.cyclotomic import divisors
from circsing.oracle import bareiss_det
from circsing.polycore import IntPoly

P = IntPoly.of
spec = CirculantSpec.from_row


def fraction_det(matrix):
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k]), None)
        if p is None:
            return 0
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return int(det)


rows01 = st.integers(2, 24).flatmap(
    lambda n: st.lists(st.integers(0, 1), min_size=n - 1, max_size=n - 1).map(lambda t: (0, *t))
)
int_rows = st.lists(st.integers(-3, 3), min_size=1, max_size=14)


def symmetric_row(n, rng):
    row = [0] * n
    for i in range(1, n // 2 + 1):
        if rng.random() < 0.5:
            row[i] = row[n - i] = 1
    return row


def test_spec_validation():
    with pytest.raises(ValueError):
        CirculantSpec(3, (0, 1))
    with pytest.raises(ValueError):
        CirculantSpec(0, ())


def test_matrix_rows_shift_right():
    assert spec([1, 2, 3]).matrix() == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]


def test_text_forms():
    s = parse_spec("n=4;row=0,1,0,1")
    assert s == spec([0, 1, 0, 1])
    assert format_spec(s) == "n=4;row=0,1,0,1"
    assert parse_row("0,1,0,1", 4) == s
    for bad in ("n=4;row=0,1", "row=0,1;n=2", "n=x;row=0,1", "n=2;row=0,y"):
        with pytest.raises(ValueError):
            parse_spec(bad)
    with pytest.raises(ValueError):
        parse_row("0,1,0", 4)


@pytest.mark.parametrize(
    "row, expected",
    [([0, 1, 0, 1], P(0, 1, 0, 1)), ([0, 0, 0], P()), ([0, 1, 1, 1, 1], P(0, 1, 1, 1, 1))],
)
def test_representer(row, expected):
    assert representer(spec(row)) == expected


@pytest.mark.parametrize(
    "p, k, reduced",
    [(P(0, 1, 0, 1), 1, P(1, 0, 1)), (P(1, 1), 0, P(1, 1)), (P(0, 0, 0, 0, 0, 1), 5, P(1))],
)
def test_gamma_strip(p, k, reduced):
    assert gamma_strip(p) == (k, reduced)


def test_gamma_strip_rejects_zero():
    with pytest.raises(ValueError):
        gamma_strip(P())


def test_singularity_examples():
    r = singularity(spec([0, 1, 0, 1]))
    assert (r.singular, r.witness_divisors, r.zero_exponents) == (True, (4,), (1, 3))
    r = singularity(spec([0, 1, 0, 0, 1]))
    assert (r.singular, r.witness_divisors, r.zero_exponents) == (False, (), ())
    assert not singularity(spec([0, 1, 1, 1])).singular


def test_singularity_zero_row():
    r = singularity(spec([0, 0, 0, 0, 0, 0]))
    assert r.singular
    assert r.witness_divisors == (2, 3, 6)
    assert r.zero_exponents == tuple(range(6))
    assert singularity(spec([0])).zero_exponents == (0,)


@pytest.mark.parametrize(
    "row, det, factors",
    [
        ([0, 1, 1], 2, {1: 2, 3: 1}),
        ([0, 1, 1, 1], -3, None),
        ([0, 1, 0, 1], 0, None),
    ],
)
def test_exact_determinant_examples(row, det, factors):
    report = exact_determinant(spec(row))
    assert report.determinant == det == fraction_det(spec(row).matrix())
    if factors is not None:
        assert report.factors == factors
    if det == 0:
        assert report.factors[4] == 0


@settings(max_examples=200)
@given(int_rows)
def test_exact_determinant_matches_fraction_elimination(row):
    s = spec(row)
    report = exact_determinant(s)
    assert report.determinant == fraction_det(s.matrix())
    assert report.determinant == math.prod(report.factors.values())
    assert set(report.factors) == set(divisors(s.n))


@settings(max_examples=200)
@given(rows01)
def test_verdict_matches_determinant(row):
    s = spec(row)
    assert singularity(s).singular == (exact_determinant(s).determinant == 0)


@settings(max_examples=200)
@given(rows01)
def test_report_invariants(row):
    s = spec(row)
    r = singularity(s)
    n = s.n
    # nonnegative nonzero rows have positive row sum, so witnesses carry the verdict
    if any(row):
        assert r.singular == bool(r.witness_divisors) == bool(r.zero_exponents)
    hit = set(r.witness_divisors) | ({1} if sum(row) == 0 else set())
    assert set(r.zero_exponents) == {k for k in range(n) if n // math.gcd(n, k) in hit}
    assert (0 in r.zero_exponents) == (sum(row) == 0)


@settings(max_examples=100)
@given(int_rows, st.integers(0, 30))
def test_rotation_invariance(row, k):
    s = spec(row)
    assert singularity(s.rotated(k)).singular == singularity(s).singular


@settings(max_examples=200)
@given(rows01)
def test_zero_exponents_match_numeric_spectrum(row):
    s = spec(row)
    numeric = [k for k, v in enumerate(spectrum_numeric(s)) if abs(v) < 1e-8]
    assert list(singularity(s).zero_exponents) == numeric


def test_row_sum_zero_without_witness():
    # gamma(1) = 0 but no cyclotomic factor with d > 1
    r = singularity(spec([1, -1]))
    assert r.singular and r.witness_divisors == () and r.zero_exponents == (0,)
    assert exact_determinant(spec([1, -1])).determinant == 0


@pytest.mark.parametrize("n, a, s, b, expected", [(4, 0, 1, 1, -3), (6, 1, 2, 0, 0), (5, 1, 1, 1, 0), (1, 7, 1, 3, 7)])
def test_two_value_examples(n, a, s, b, expected):
    assert two_value_determinant(n, a, s, b) == expected


def test_two_value_range():
    with pytest.raises(ValueError):
        two_value_determinant(4, 1, 0, 0)
    with pytest.raises(ValueError):
        two_value_determinant(4, 1, 5, 0)


def test_two_value_agrees_with_exact():
    for n in range(1, 21):
        for s in range(1, n + 1):
            for a, b in ((0, 1), (1, 0)):
                row = [a] * s + [b] * (n - s)
                assert two_value_determinant(n, a, s, b) == exact_determinant(spec(row)).determinant


def test_spectrum_examples():
    assert spectrum_numeric(spec([0, 1, 0, 1])) == pytest.approx([2, 0, -2, 0], abs=1e-12)
    assert spectrum_numeric(spec([0, 1, 1])) == pytest.approx([2, -1, -1], abs=1e-12)
    assert spectrum_numeric(spec([0, 0, 0])) == [0, 0, 0]


def test_cycle_spectrum_is_cosine():
    for n in range(3, 30):
        row = [0] * n
        row[1] = row[-1] = 1
        values = spectrum_numeric(spec(row))
        for r, v in enumerate(values):
            assert v == pytest.approx(2 * math.cos(2 * math.pi * r / n), abs=1e-12)


@pytest.mark.parametrize(
    "row, expected",
    [([0, 1, 0, 1], [0, 0, 1, 0]), ([0, 1, 1, 1], [0, 0, 0, 0]), ([0, 1, 0, 0, 1], [0, 0, 1, 1, 0])],
)
def test_complement_row(row, expected):
    assert complement_row(spec(row)).row == tuple(expected)


@pytest.mark.parametrize("row", [[0, 2, 2], [1, 1, 1], [0, 1, 0, 0]])
def test_complement_rejects_non_graphs(row):
    with pytest.raises(ValueError):
        complement_row(spec(row))


def test_complement_involution():
    rng = random.Random(5)
    for n in range(1, 30):
        s = spec(symmetric_row(n, rng))
        assert complement_row(complement_row(s)) == s


def test_complement_spectrum_relation():
    # J - A - I: nontrivial eigenvalues become -1 - lambda
    rng = random.Random(9)
    for n in range(2, 20):
        s = spec(symmetric_row(n, rng))
        c = complement_row(s)
        for k, (v, w) in enumerate(zip(spectrum_numeric(s), spectrum_numeric(c))):
            if k:
                assert w == pytest.approx(-1 - v, abs=1e-9)


def test_prime_power_orders_nonsingular():
    rng = random.Random(2024)
    for q, p in ((4, 2), (8, 2), (9, 3), (16, 2), (25, 5), (27, 3)):
        found = 0
        while found < 50:
            row = symmetric_row(q, rng)
            if sum(row) % p == 0:
                continue
            found += 1
            assert not singularity(spec(row)).singular
            assert bareiss_det(spec(row)) != 0
