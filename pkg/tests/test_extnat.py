"""Extended naturals: absorbing infinity with the 0 * INF = 0 convention."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperq.extnat import (
    INF,
    check_extnat,
    extnat_from_json,
    extnat_to_json,
    is_finite,
)

extnats = st.one_of(st.integers(min_value=0, max_value=10**6), st.just(INF))


def test_addition_absorbs():
    assert INF + 5 == INF
    assert 5 + INF == INF
    assert INF + 0 == INF
    assert INF + INF == INF


def test_zero_times_inf_is_zero():
    # empty sums contribute nothing, no matter the count
    assert 0 * INF == 0
    assert INF * 0 == 0


def test_positive_times_inf_is_inf():
    assert 1 * INF == INF
    assert INF * 1 == INF
    assert 7 * INF == INF
    assert INF * INF == INF


def test_ordering():
    assert 0 < INF
    assert 10**9 < INF
    assert not INF < INF
    assert INF <= INF
    assert INF >= 0
    assert INF > 10**9


def test_equality_and_hash():
    assert INF == INF
    assert INF != 3
    assert 3 != INF
    assert len({INF, INF, 2, 2}) == 2


def test_str_and_repr():
    assert str(INF) == "inf"
    assert repr(INF) == "INF"


def test_rejects_non_naturals():
    with pytest.raises(ValueError):
        check_extnat(-1)
    with pytest.raises(TypeError):
        check_extnat(1.5)
    with pytest.raises(TypeError):
        check_extnat(True)
    with pytest.raises(TypeError):
        INF + 0.5
    with pytest.raises(ValueError):
        INF * (-2)


def test_json_round_trip():
    assert extnat_to_json(INF) == "inf"
    assert extnat_to_json(4) == 4
    assert extnat_from_json("inf") is INF
    assert extnat_from_json(0) == 0
    with pytest.raises(ValueError):
        extnat_from_json(-1)
    with pytest.raises(ValueError):
        extnat_from_json(True)
    with pytest.raises(ValueError):
        extnat_from_json("infinity")


@given(a=extnats, b=extnats)
def test_commutativity(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(a=extnats, b=extnats, c=extnats)
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(a=extnats)
def test_json_round_trip_property(a):
    assert extnat_from_json(extnat_to_json(a)) == a
    assert is_finite(a) == (a is not INF)
