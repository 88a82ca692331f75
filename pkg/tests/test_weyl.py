import pytest
from hypothesis import given, strategies as st

from indmod.rootsys import KNOWN_TYPES, PRESETS, datum_from_name
from indmod.weyl import (format_word, hasse_dot, min_coset_reps, parse_word, partition_check,
                         poincare_polynomial, subsets, weyl_group, z_set)


def W_of(name):
    return weyl_group(datum_from_name(name))


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_order_and_longest_length(name):
    W = W_of(name)
    npos, order, _ = KNOWN_TYPES[name]
    assert len(W) == order
    assert W.lengths[W.longest()] == npos
    assert max(W.lengths) == npos


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_poincare_is_product_of_q_integers(name):
    _, _, degrees = KNOWN_TYPES[name]
    poly = [1]
    for d in degrees:
        poly = [sum(poly[k - j] for j in range(d) if 0 <= k - j < len(poly))
                for k in range(len(poly) + d - 1)]
    assert poincare_polynomial(W_of(name)) == poly


def test_a2_poincare():
    assert poincare_polynomial(W_of("A2")) == [1, 2, 2, 1]


def test_words_are_reduced_and_shortlex():
    W = W_of("B3")
    for k, word in enumerate(W.words):
        assert len(word) == W.lengths[k]
        assert W.index_from_word(word) == k
    assert W.words == sorted(W.words, key=lambda w: (len(w), w))


def test_parse_and_format_word():
    assert parse_word("s1s2s1") == (1, 2, 1)
    assert parse_word("1,2,1") == (1, 2, 1)
    assert parse_word("121") == (1, 2, 1)
    assert parse_word("e") == ()
    assert format_word((2, 1)) == "s2s1"
    assert format_word(()) == "e"


def test_braid_relations_a2_g2():
    A2 = W_of("A2")
    assert A2.index_from_word((1, 2, 1)) == A2.index_from_word((2, 1, 2))
    G2 = W_of("G2")
    assert G2.index_from_word((1, 2) * 3) == G2.index_from_word((2, 1) * 3)
    assert G2.index_from_word((1, 1)) == 0


def _reflections(W):
    out = set()
    for w in range(len(W)):
        for i in range(1, W.rank + 1):
            s = W.index_from_word((i,))
            out.add(W.mul(W.mul(w, s), W.inv[w]))
    return out


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_bruhat_matches_reflection_definition(name):
    # y < w iff a chain y -> y t -> ... raises length at each step
    W = W_of(name)
    refl = _reflections(W)
    below = {w: {w} for w in range(len(W))}
    for w in sorted(range(len(W)), key=lambda k: W.lengths[k]):
        for t in refl:
            y = W.mul(w, t)
            if W.lengths[y] < W.lengths[w]:
                below[w] |= below[y]
    for w in range(len(W)):
        assert set(W.bruhat_ideal(w)) == below[w]


def test_bruhat_covers_a2_dot():
    W = W_of("A2")
    assert len(W.bruhat_covers()) == 8
    dot = hasse_dot(W)
    assert dot.startswith("digraph") and dot.count("->") == 8


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_coset_reps_count(name):
    W = W_of(name)
    for J in subsets(W.simple_set):
        assert len(W.min_coset_reps(J)) * len(W.parabolic(J)) == len(W)


def test_min_coset_reps_wrapper_rejects_bad_J():
    with pytest.raises(ValueError):
        min_coset_reps(W_of("A2"), {3})


def test_z_set_a2_examples():
    W = W_of("A2")
    words = lambda ks: sorted(W.words[k] for k in ks)
    # I(theta) = I, J = empty: only x with R(x) empty, i.e. the identity
    assert words(W.z_set((), {1, 2})) == [()]
    # I(theta) empty: Z_empty = W
    assert len(W.z_set((), ())) == 6
    assert len(z_set(W, {1, 2}, {1, 2})) == 1
    with pytest.raises(ValueError):
        W.z_set({1}, {2})


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_partition_check_all_subsets(name):
    W = W_of(name)
    for it in subsets(W.simple_set):
        for J in subsets(it):
            ok, cert = partition_check(W, J, it)
            assert ok, cert
            assert sum(cert.sizes.values()) == cert.target_size == len(W.min_coset_reps(J))


small_types = st.sampled_from(["A1", "A2", "A3", "B2", "G2", "B3"])


@given(small_types, st.data())
def test_multiplication_is_associative_and_inverse(name, data):
    W = W_of(name)
    x, y, z = (data.draw(st.integers(0, len(W) - 1)) for _ in range(3))
    assert W.mul(W.mul(x, y), z) == W.mul(x, W.mul(y, z))
    assert W.mul(x, W.inv[x]) == 0
    assert W.lengths[W.inv[x]] == W.lengths[x]


@given(small_types, st.data())
def test_descents_match_length_drop(name, data):
    W = W_of(name)
    w = data.draw(st.integers(0, len(W) - 1))
    for i in range(1, W.rank + 1):
        assert (i in W.rdes[w]) == (W.lengths[W.rmul[w][i - 1]] < W.lengths[w])
        assert (i in W.ldes[w]) == (W.lengths[W.lmul[w][i - 1]] < W.lengths[w])


@given(small_types, st.data())
def test_longest_in_parabolic(name, data):
    W = W_of(name)
    J = frozenset(data.draw(st.sets(st.sampled_from(sorted(W.simple_set)))))
    wj = W.longest_in(J)
    assert W.in_parabolic(wj, J)
    assert W.lengths[wj] == max(W.lengths[k] for k in W.parabolic(J))
    assert J <= W.rdes[wj]
