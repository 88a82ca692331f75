import pytest

from indmod.caps import CapError, Caps, set_caps
from indmod.rootsys import (KNOWN_TYPES, PRESETS, CartanMatrix, NotFiniteTypeError, Weight,
                            build_root_system, datum_from_name, reflect_root, reflect_weight)
from indmod.weyl import weyl_group


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_preset_root_counts(name):
    datum = datum_from_name(name)
    npos, order, degrees = KNOWN_TYPES[name]
    assert datum.n_positive == npos
    assert len(datum.all_roots) == 2 * npos
    # |W| = product of degrees, |Phi+| = sum(d - 1)
    prod = 1
    for d in degrees:
        prod *= d
    assert prod == order
    assert sum(d - 1 for d in degrees) == npos


def test_b2_roots_and_heights():
    datum = datum_from_name("B2")
    heights = sorted(r.height for r in datum.all_roots if r.is_positive)
    assert heights == [1, 1, 2, 3]
    assert datum.max_height() == 3


def test_g2_highest_root():
    datum = datum_from_name("G2")
    top = max((r for r in datum.all_roots if r.is_positive), key=lambda r: r.height)
    assert top.height == 5


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_reflections_are_involutions_permuting_roots(name):
    datum = datum_from_name(name)
    roots = set(datum.all_roots)
    for i in datum.simple_indices:
        for alpha in datum.all_roots:
            beta = reflect_root(datum, i, alpha)
            assert beta in roots
            assert reflect_root(datum, i, beta) == alpha
        assert reflect_root(datum, i, datum.simple_root(i)) == -datum.simple_root(i)


def test_reflect_weight_uses_pairings():
    datum = datum_from_name("A2")
    # s_1(theta) = theta - <theta, a1^vee> a1 ; a1 has pairings (2, -1)
    assert reflect_weight(datum, 1, Weight((3, -3))).coords == (-3, 0)


@pytest.mark.parametrize("bad", [
    [[2, 1], [-1, 2]],
    [[3, -1], [-1, 2]],
    [[2, -1], [0, 2]],
    [[2, -1, 0], [-1, 2]],
])
def test_invalid_cartan_rejected(bad):
    with pytest.raises(ValueError):
        CartanMatrix(tuple(tuple(r) for r in bad))


def test_affine_matrix_rejected():
    with pytest.raises(NotFiniteTypeError):
        build_root_system([[2, -2], [-2, 2]])


def test_unknown_preset():
    with pytest.raises(ValueError):
        datum_from_name("E9")


def test_raw_matrix_matches_preset():
    raw = build_root_system(PRESETS["C3"])
    assert raw.n_positive == datum_from_name("C3").n_positive


def test_rank_cap():
    set_caps(Caps(rank=2))
    try:
        with pytest.raises(CapError):
            datum_from_name("A3")
    finally:
        set_caps(None)


def test_weyl_order_cap():
    set_caps(Caps(weyl_order=100))
    try:
        with pytest.raises(CapError):
            weyl_group(build_root_system(PRESETS["A4"]))
    finally:
        set_caps(None)
