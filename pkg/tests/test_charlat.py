import pytest
from hypothesis import given, strategies as st

from indmod.charlat import (RationalCharacter, act, i_theta, is_antidominant, is_strongly_antidominant,
                            parse_theta, stabilizer)
from indmod.rootsys import datum_from_name
from indmod.weyl import subsets, weyl_group


def W_of(name):
    return weyl_group(datum_from_name(name))


def test_i_theta_examples():
    assert i_theta((0, 0)) == {1, 2}
    assert i_theta((0, -3)) == {1}
    assert i_theta((-1, -2)) == frozenset()


def test_antidominance_examples():
    assert is_antidominant((0, 0)) and not is_strongly_antidominant((0, 0))
    assert is_antidominant((-1, -2)) and is_strongly_antidominant((-1, -2))
    assert not is_antidominant((1, -2)) and not is_strongly_antidominant((1, -2))


def test_parse_theta():
    th = parse_theta("0, -3")
    assert isinstance(th, RationalCharacter)
    assert th.coords == (0, -3) and th.rank == 2


def test_stabilizer_trivial_character():
    W = W_of("B2")
    st_ = stabilizer(W, (0, 0))
    assert len(st_) == len(W) and st_.is_parabolic and st_.J_theta == {1, 2}


def test_stabilizer_a2_parabolic():
    W = W_of("A2")
    st_ = stabilizer(W, (0, -3))
    assert sorted(W.words[k] for k in st_.elements) == [(), (1,)]
    assert st_.is_parabolic and st_.J_theta == {1}


def test_stabilizer_a2_not_parabolic():
    W = W_of("A2")
    st_ = stabilizer(W, (3, -3))
    assert sorted(W.words[k] for k in st_.elements) == [(), (1, 2, 1)]
    assert not st_.is_parabolic
    assert st_.J_theta == {1, 2}
    assert st_.itheta == frozenset()


def test_stabilizer_rank_mismatch():
    with pytest.raises(ValueError):
        stabilizer(W_of("A2"), (0, 0, 0))


types = st.sampled_from(["A1", "A2", "A3", "B2", "G2", "B3", "C3"])


@given(types, st.data())
def test_stabilizer_properties(name, data):
    W = W_of(name)
    theta = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=W.rank, max_size=W.rank)))
    st_ = stabilizer(W, theta)
    # W_{I(theta)} lies in W_theta, and each i in I(theta) fixes theta
    assert set(W.parabolic(i_theta(theta))) <= st_.elements
    for i in i_theta(theta):
        assert act(W, W.index_from_word((i,)), theta).coords == theta
    # J(theta) is minimal with W_theta inside W_J
    assert st_.elements <= set(W.parabolic(st_.J_theta))
    for K in subsets(st_.J_theta):
        if len(K) == len(st_.J_theta) - 1:
            assert not st_.elements <= set(W.parabolic(K))
    # stabilizer is a subgroup
    for x in st_.elements:
        for y in st_.elements:
            assert W.mul(x, y) in st_.elements


@given(types, st.data())
def test_action_is_a_group_action(name, data):
    W = W_of(name)
    theta = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=W.rank, max_size=W.rank)))
    x, y = (data.draw(st.integers(0, len(W) - 1)) for _ in range(2))
    assert act(W, W.mul(x, y), theta) == act(W, x, act(W, y, theta))
