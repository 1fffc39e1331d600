import math
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from almostbalanced.codec import (
    CoderParams,
    decode,
    dyadic_bias,
    encode,
    encode_digits,
    map_to_interval,
    remap_order,
)
from almostbalanced.errors import OutputTooLong
from almostbalanced.intervals import Interval, split_binary, split_qary


def seq(text):
    return tuple(int(c) for c in text)


def fraction_walk(x, params):
    """Independent oracle: the same walk through the Fraction interval API."""
    interval = Interval.unit()
    order = remap_order(params.remap_symbol) if params.remap_symbol else tuple(range(params.q))
    for s in x:
        interval = split_qary(interval, params.p, params.q)[order.index(s)]
    return interval


P_L8 = dyadic_bias(8, 1, 96)


def test_dyadic_bias_close_to_real_value():
    real = 0.5 + 1 / math.sqrt(8) + 1 / 8
    assert abs(float(P_L8) - real) < 1e-15
    assert 2**96 % P_L8.denominator == 0
    assert abs(P_L8 - (F(1, 2) + F(1, 8)) - F(math.isqrt(2**192 // 8), 2**96)) <= F(1, 2**96)


def test_dyadic_bias_half_scale():
    p = dyadic_bias(100, 6, 64, F(1, 2))
    assert abs(float(p) - (0.5 + math.sqrt(6) / 20 + 0.01)) < 1e-15


def test_map_example_one():
    params = CoderParams(5, 2, F(3, 4), 4)
    assert map_to_interval(seq("00010"), params) == Interval(F(81, 256), F(405, 1024))
    assert encode_digits(seq("00010"), params).digits == (0, 1, 1)


def test_map_all_zero_unbiased():
    params = CoderParams(5, 2, F(1, 2), 4)
    assert map_to_interval(seq("00000"), params) == Interval(F(0), F(1, 32))


def test_map_example_two():
    params = CoderParams(8, 2, P_L8, 6)
    interval = map_to_interval(seq("10000000"), params)
    p = 0.5 + 1 / math.sqrt(8) + 1 / 8
    assert float(interval.lo) == pytest.approx(0.97855, abs=5e-6)
    assert float(interval.hi) == pytest.approx(0.99698, abs=5e-6)
    assert float(interval.hi) == pytest.approx(p + (1 - p) * p**7, rel=1e-12)


def test_encode_example_two_outputs():
    assert encode(seq("10000000"), CoderParams(8, 2, P_L8, 6)) == seq("111111")
    assert encode(seq("11111111"), CoderParams(8, 2, 1 - P_L8, 6)) == seq("100000")


def test_decode_example_two_outputs():
    assert decode(seq("111111"), CoderParams(8, 2, P_L8, 6)) == seq("10000000")
    assert decode(seq("100000"), CoderParams(8, 2, 1 - P_L8, 6)) == seq("11111111")


@pytest.mark.parametrize("p", [F(3, 4), F(1, 8), P_L8])
def test_zero_digits_decode_to_leftmost(p):
    assert decode((0,) * 6, CoderParams(8, 2, p, 6)) == (0,) * 8
    assert decode((0,) * 5, CoderParams(6, 4, p, 5)) == (0,) * 6


def test_output_too_long():
    # all ones under a zero-heavy bias needs many bits
    with pytest.raises(OutputTooLong):
        encode(seq("11111111"), CoderParams(8, 2, P_L8, 6))


def test_remap_order():
    assert remap_order(1) == (0, 1, 2, 3)
    assert remap_order(2) == (0, 2, 1, 3)
    assert remap_order(3) == (0, 3, 1, 2)
    with pytest.raises(ValueError):
        remap_order(0)


def test_remapped_sub_interval_lengths():
    for i in (1, 2, 3):
        params = CoderParams(1, 4, F(3, 4), 0, remap_symbol=i)
        lengths = {s: map_to_interval((s,), params).length() for s in range(4)}
        assert lengths[0] == lengths[i] == F(3, 8)
        assert sorted(lengths[s] for s in range(1, 4) if s != i) == [F(1, 8), F(1, 8)]


def test_params_validation():
    with pytest.raises(ValueError):
        CoderParams(8, 2, F(1, 3), 6)  # not dyadic
    with pytest.raises(ValueError):
        CoderParams(8, 3, F(1, 2), 6)
    with pytest.raises(ValueError):
        CoderParams(8, 2, F(1, 2), 8)
    with pytest.raises(ValueError):
        CoderParams(8, 6, F(1, 2), 6, remap_symbol=1)


def test_exhaustive_roundtrip_binary_p_low():
    params = CoderParams(8, 2, P_L8, 7)
    seen = set()
    for x in product((0, 1), repeat=8):
        try:
            d = encode(x, params)
        except OutputTooLong:
            continue
        assert decode(d, params) == x
        seen.add(d)
    assert len(seen) > 0


dyadic = st.integers(1, 255).map(lambda k: F(k, 256))


@st.composite
def coder_case(draw):
    kind = draw(st.sampled_from(["binary", "polarity", "remap"]))
    n = draw(st.integers(1, 10))
    p = draw(dyadic)
    if kind == "binary":
        params = CoderParams(n, 2, p, n - 1)
    elif kind == "polarity":
        params = CoderParams(n, draw(st.sampled_from([4, 6])), p, n - 1)
    else:
        params = CoderParams(n, 4, p, n - 1, remap_symbol=draw(st.integers(1, 3)))
    x = tuple(draw(st.lists(st.integers(0, params.q - 1), min_size=n, max_size=n)))
    return params, x


@given(coder_case())
def test_integer_walk_matches_fraction_oracle(backend, case):
    params, x = case
    assert map_to_interval(x, params) == fraction_walk(x, params)


@given(coder_case())
def test_interval_length_formula(case):
    params, x = case
    h = params.q // 2
    favoured = {0, params.remap_symbol} if params.remap_symbol else set(range(h))
    s = sum(1 for v in x if v in favoured)
    expected = (params.p / h) ** s * ((1 - params.p) / h) ** (params.n - s)
    assert map_to_interval(x, params).length() == expected


@given(coder_case())
def test_roundtrip_when_it_fits(backend, case):
    params, x = case
    digits = encode_digits(x, params)
    assert decode(digits.digits, params) == x
    if len(digits) <= params.target_len:
        padded = encode(x, params)
        assert len(padded) == params.target_len
        assert decode(padded, params) == x
        # extra trailing zeros are harmless
        assert decode(padded + (0, 0, 0), params) == x


def test_injective_exhaustive_n12():
    params = CoderParams(12, 2, F(5, 8), 11)
    intervals = sorted(
        (map_to_interval(x, params).lo, map_to_interval(x, params).hi)
        for x in product((0, 1), repeat=12)
    )
    assert intervals[0][0] == 0 and intervals[-1][1] == 1
    assert all(a[1] == b[0] for a, b in zip(intervals, intervals[1:]))


def test_split_qary_shape_oracle_binary():
    # the binary coder and split_binary agree as well
    params = CoderParams(5, 2, F(3, 4), 4)
    interval = Interval.unit()
    for bit in seq("01101"):
        interval = split_binary(interval, F(3, 4))[bit]
    assert map_to_interval(seq("01101"), params) == interval


def test_rejects_wrong_length_or_symbol():
    params = CoderParams(5, 2, F(3, 4), 4)
    with pytest.raises(ValueError):
        encode(seq("0001"), params)
    with pytest.raises(ValueError):
        encode(seq("00012"), params)
    with pytest.raises(ValueError):
        decode(seq("0002"), params)
