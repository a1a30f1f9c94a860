"""Transform planning and kernels against a pure-Python definitional oracle.

`dft_reference` below evaluates the defining sum with builtin pow and plain
ints; it shares no code with the numpy kernels or the plan's tables.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smoothntt.errors import (
    BadRadices,
    LengthMismatch,
    NotADivisor,
    OutOfRange,
    WrongOrder,
)
from smoothntt.field import FieldParams, fp_pow
from smoothntt.numtheory import element_order, factorize
from smoothntt.transform import (
    DigitPermutation,
    OpCounts,
    build_twiddle_table,
    cyclic_convolve_via_fft,
    dft_naive,
    digit_reverse,
    fft_recursive,
    fft_twiddle,
    idft_naive,
    ifft,
    plan_transform,
    predicted_counts,
)


def dft_reference(p: int, omega: int, v) -> list[int]:
    n = len(v)
    return [
        sum(pow(omega, i * j, p) * int(v[i]) for i in range(n)) % p
        for j in range(n)
    ]


def convolve_reference(p: int, u, v) -> list[int]:
    n = len(u)
    return [
        sum(int(u[a]) * int(v[(k - a) % n]) for a in range(n)) % p
        for k in range(n)
    ]


@pytest.fixture(scope="module")
def plan54():
    return plan_transform(FieldParams(5), 4, omega=2, radices=[2, 2])


@pytest.fixture(scope="module")
def plan9796():
    return plan_transform(FieldParams(97), 96)


# --- planning ---------------------------------------------------------------


def test_plan_twiddles_example(plan54):
    assert plan54.twiddles.tolist() == [1, 2, 4, 3]
    assert plan54.inv_n == 4


def test_plan_defaults_large_field():
    plan = plan_transform(FieldParams(147457), 147456)
    assert sorted(plan.radices) == [2] * 14 + [3] * 2
    assert plan.radices == tuple(sorted(plan.radices))  # nondecreasing
    params = FieldParams(147457)
    assert element_order(params, plan.omega, factorize(147456)) == 147456


def test_plan_not_a_divisor():
    with pytest.raises(NotADivisor):
        plan_transform(FieldParams(5), 3)


def test_plan_wrong_order():
    # 4 has order 2 mod 5, not 4
    with pytest.raises(WrongOrder):
        plan_transform(FieldParams(5), 4, omega=4)
    with pytest.raises(WrongOrder):
        plan_transform(FieldParams(5), 4, omega=0)


def test_plan_bad_radices():
    with pytest.raises(BadRadices):
        plan_transform(FieldParams(5), 4, radices=[2, 3])
    with pytest.raises(BadRadices):
        plan_transform(FieldParams(5), 4, radices=[1, 4])


def test_plan_length_one_is_identity():
    plan = plan_transform(FieldParams(17), 1)
    assert plan.radices == ()
    assert plan.omega == 1
    counts = OpCounts()
    assert fft_twiddle(plan, [7], counts).tolist() == [7]
    assert counts == OpCounts(0, 0)
    assert dft_naive(plan, [7]).tolist() == [7]
    assert ifft(plan, [7]).tolist() == [7]


def test_twiddle_table_matches_fp_pow():
    params = FieldParams(769)
    table = build_twiddle_table(params, 11, 768)
    for k in (0, 1, 2, 3, 100, 384, 767):
        assert table[k] == fp_pow(11, k, params)


def test_twiddle_table_group_law(plan9796):
    n, p = plan9796.n, plan9796.p
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b = rng.integers(0, n, 2)
        lhs = plan9796.twiddles[a] * plan9796.twiddles[b] % p
        assert lhs == plan9796.twiddles[(a + b) % n]


# --- naive oracle -----------------------------------------------------------


def test_dft_naive_zeros_and_delta(plan9796):
    n = plan9796.n
    assert dft_naive(plan9796, [0] * n).tolist() == [0] * n
    delta = [1] + [0] * (n - 1)
    assert dft_naive(plan9796, delta).tolist() == [1] * n


def test_dft_naive_hand_example(plan54):
    assert dft_naive(plan54, [1, 2, 3, 4]).tolist() == [0, 4, 3, 2]


def test_dft_naive_matches_reference(plan9796):
    rng = np.random.default_rng(1)
    for _ in range(5):
        v = rng.integers(0, 97, 96)
        assert dft_naive(plan9796, v).tolist() == dft_reference(97, plan9796.omega, v)


def test_dft_naive_blocked_path_matches_reference():
    # length above the cached-matrix limit exercises the row-blocked path
    plan = plan_transform(FieldParams(147457), 8192)
    rng = np.random.default_rng(2)
    v = rng.integers(0, 147457, 8192)
    got = dft_naive(plan, v)
    assert np.array_equal(got, fft_twiddle(plan, v))


def test_idft_naive_example(plan54):
    assert idft_naive(plan54, [0, 4, 3, 2]).tolist() == [1, 2, 3, 4]


def test_idft_naive_round_trip(plan9796):
    rng = np.random.default_rng(7)
    for _ in range(100):
        v = rng.integers(0, 97, 96)
        assert np.array_equal(idft_naive(plan9796, dft_naive(plan9796, v)), v)


# --- staged kernels ---------------------------------------------------------


def test_fft_delta_gives_ones(plan54):
    assert fft_recursive(plan54, [1, 0, 0, 0]).tolist() == [1, 1, 1, 1]
    assert fft_twiddle(plan54, [1, 0, 0, 0]).tolist() == [1, 1, 1, 1]


def test_fft_hand_example(plan54):
    assert fft_recursive(plan54, [1, 2, 3, 4]).tolist() == [0, 4, 3, 2]
    assert fft_twiddle(plan54, [1, 2, 3, 4]).tolist() == [0, 4, 3, 2]


def test_fft_matches_naive_twelve_points():
    plan = plan_transform(FieldParams(13), 12, omega=2, radices=[2, 2, 3])
    rng = np.random.default_rng(5)
    for _ in range(50):
        v = rng.integers(0, 13, 12)
        expected = dft_naive(plan, v)
        assert np.array_equal(fft_recursive(plan, v), expected)
        assert np.array_equal(fft_twiddle(plan, v), expected)


@pytest.mark.parametrize(
    "radices", [[2, 2, 3], [2, 3, 2], [3, 2, 2], [2, 6], [6, 2], [12], [4, 3], [3, 4]]
)
def test_schedule_invariance(radices):
    # same (p, n, omega): every valid schedule gives the identical vector
    plan = plan_transform(FieldParams(13), 12, omega=2, radices=radices)
    rng = np.random.default_rng(6)
    for _ in range(10):
        v = rng.integers(0, 13, 12)
        expected = dft_reference(13, 2, v)
        assert fft_recursive(plan, v).tolist() == expected
        assert fft_twiddle(plan, v).tolist() == expected


def test_fft_subgroup_length_matches_naive():
    # order-36864 root inside F_147457: heavyweight but definitive
    plan = plan_transform(FieldParams(147457), 36864)
    rng = np.random.default_rng(8)
    v = rng.integers(0, 147457, 36864)
    assert np.array_equal(fft_twiddle(plan, v), dft_naive(plan, v))


def test_raw_order_is_digit_reversed(plan9796):
    rng = np.random.default_rng(9)
    v = rng.integers(0, 97, 96)
    raw = fft_twiddle(plan9796, v, raw_order=True)
    natural = fft_twiddle(plan9796, v)
    assert np.array_equal(natural[plan9796.permutation.forward], raw)


def test_length_mismatch(plan54):
    with pytest.raises(LengthMismatch):
        fft_twiddle(plan54, [1, 2, 3])
    with pytest.raises(LengthMismatch):
        dft_naive(plan54, [1, 2, 3, 4, 5])
    with pytest.raises(LengthMismatch):
        ifft(plan54, [1])


def test_non_integer_vector_rejected(plan54):
    with pytest.raises(ValueError):
        fft_twiddle(plan54, np.array([1.0, 2.0, 3.0, 4.0]))


# --- inverse ----------------------------------------------------------------


def test_ifft_example(plan54):
    assert ifft(plan54, [0, 4, 3, 2]).tolist() == [1, 2, 3, 4]
    assert ifft(plan54, [0, 0, 0, 0]).tolist() == [0, 0, 0, 0]


def test_round_trip_both_variants(plan9796):
    rng = np.random.default_rng(10)
    for variant in ("recursive", "twiddle"):
        for _ in range(100):
            v = rng.integers(0, 97, 96)
            fwd = (fft_recursive if variant == "recursive" else fft_twiddle)(
                plan9796, v
            )
            assert np.array_equal(ifft(plan9796, fwd, variant), v)


def test_linearity(plan9796):
    p, n = plan9796.p, plan9796.n
    rng = np.random.default_rng(11)
    for _ in range(20):
        u = rng.integers(0, p, n)
        v = rng.integers(0, p, n)
        a, b = rng.integers(1, p, 2)
        combo = (a * u + b * v) % p
        lhs = fft_twiddle(plan9796, combo)
        rhs = (a * fft_twiddle(plan9796, u) + b * fft_twiddle(plan9796, v)) % p
        assert np.array_equal(lhs, rhs)


# --- digit reversal ---------------------------------------------------------


def test_digit_reverse_is_bit_reversal_for_twos():
    assert [digit_reverse([2, 2, 2], s) for s in range(8)] == [0, 4, 2, 6, 1, 5, 3, 7]
    assert digit_reverse([2, 2, 2], 1) == 4


def test_digit_reverse_mixed_radix_by_definition():
    # slot = d1*3 + d2 with d1 in [0,2), d2 in [0,3); index = d1*1 + d2*2
    radices = [2, 3]
    expected = []
    for d1 in range(2):
        for d2 in range(3):
            expected.append(d1 + 2 * d2)
    got = [digit_reverse(radices, s) for s in range(6)]
    assert got == expected
    assert sorted(got) == list(range(6))


def test_digit_reverse_single_stage_identity():
    assert [digit_reverse([6], s) for s in range(6)] == list(range(6))


def test_digit_reverse_out_of_range():
    with pytest.raises(OutOfRange):
        digit_reverse([2, 3], 6)
    with pytest.raises(OutOfRange):
        digit_reverse([2, 3], -1)


@given(st.lists(st.integers(2, 5), min_size=0, max_size=6))
@settings(max_examples=100)
def test_digit_permutation_bijective(radices):
    perm = DigitPermutation.from_radices(tuple(radices))
    forward = perm.forward.tolist()
    assert sorted(forward) == list(range(perm.n))
    assert forward == [digit_reverse(radices, s) for s in range(perm.n)]


# --- operation counts -------------------------------------------------------


def test_predicted_counts_examples():
    rec = predicted_counts(4, [2, 2], "recursive")
    assert (rec.multiplications, rec.additions) == (16, 8)
    twd = predicted_counts(147456, [2] * 14 + [3] * 2, "twiddle")
    assert twd.multiplications == 2_949_120
    assert twd.additions == 2_654_208
    with pytest.raises(BadRadices):
        predicted_counts(4, [2, 3], "twiddle")
    with pytest.raises(ValueError):
        predicted_counts(4, [2, 2], "fast")


def test_predicted_counts_general_radices():
    # only radix-2 stages get cheaper in the twiddle variant
    rec = predicted_counts(12, [4, 3], "recursive")
    twd = predicted_counts(12, [4, 3], "twiddle")
    assert rec.multiplications == twd.multiplications == 12 * 7
    mixed = predicted_counts(12, [2, 2, 3], "twiddle")
    assert mixed.multiplications == 12 * 7 - 2 * 12


@pytest.mark.parametrize(
    "p,n",
    [(5, 4), (13, 12), (97, 96), (193, 192), (257, 256), (769, 768)],
)
def test_measured_equals_predicted(p, n):
    plan = plan_transform(FieldParams(p), n)
    rng = np.random.default_rng(12)
    v = rng.integers(0, p, n)
    for variant, kernel in (("recursive", fft_recursive), ("twiddle", fft_twiddle)):
        counts = OpCounts()
        kernel(plan, v, counts)
        assert counts == predicted_counts(n, plan.radices, variant)


def test_lemma_negation_structure():
    # even order: the second half of the table is the negated first half
    for p, n in [(5, 4), (97, 96), (769, 768), (65537, 256)]:
        plan = plan_transform(FieldParams(p), n)
        assert plan.twiddles[n // 2] == p - 1
        t = np.arange(n // 2)
        assert np.array_equal(plan.twiddles[n // 2 + t], p - plan.twiddles[t])


# --- convolution ------------------------------------------------------------


def test_convolution_delta_identity():
    plan = plan_transform(FieldParams(97), 8)
    rng = np.random.default_rng(13)
    v = rng.integers(0, 97, 8)
    delta = np.array([1, 0, 0, 0, 0, 0, 0, 0])
    assert np.array_equal(cyclic_convolve_via_fft(plan, delta, v), v)
    zeros = np.zeros(8, dtype=np.int64)
    assert cyclic_convolve_via_fft(plan, zeros, zeros).tolist() == [0] * 8


def test_convolution_matches_direct():
    plan = plan_transform(FieldParams(97), 8)
    rng = np.random.default_rng(14)
    for _ in range(50):
        u = rng.integers(0, 97, 8)
        v = rng.integers(0, 97, 8)
        got = cyclic_convolve_via_fft(plan, u, v)
        assert got.tolist() == convolve_reference(97, u, v)
