import pytest
from hypothesis import given, strategies as st

from indmod.fforacle.field import ambient_field, is_irreducible, prime_factors

FIELDS = [(2, 1), (2, 4), (2, 6), (3, 2), (3, 4), (5, 2), (7, 1)]


@pytest.fixture(params=FIELDS, ids=lambda pn: f"F{pn[0]}^{pn[1]}")
def F(request):
    return ambient_field(*request.param)


def elems(F):
    return st.integers(min_value=0, max_value=F.order - 1)


def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(97) == [97]


def test_irreducibility():
    assert is_irreducible((1, 1, 1), 2)        # x^2 + x + 1
    assert not is_irreducible((1, 0, 1), 2)    # (x + 1)^2
    assert is_irreducible((1, 0, 1), 3)        # x^2 + 1 over F_3


def test_modulus_is_irreducible(F):
    assert is_irreducible(F.modulus, F.p)
    assert len(F.modulus) == F.N + 1


def test_order_and_cache(F):
    assert F.order == F.p ** F.N
    assert ambient_field(F.p, F.N) is F


@pytest.mark.parametrize("pn", FIELDS)
def test_field_axioms(pn):
    F = ambient_field(*pn)

    @given(elems(F), elems(F), elems(F))
    def check(a, b, c):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(F.add(a, b), b) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.div(F.mul(b, a), a) == b

    check()


@pytest.mark.parametrize("pn", FIELDS)
def test_frobenius_is_a_ring_map(pn):
    F = ambient_field(*pn)

    @given(elems(F), elems(F))
    def check(a, b):
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(a) == F.pow(a, F.p)

    check()


def test_multiplicative_group_is_cyclic(F):
    g = F.gen
    seen = {F.pow(g, k) for k in range(F.order - 1)}
    assert len(seen) == F.order - 1 and 0 not in seen


def test_pow_edge_cases(F):
    assert F.pow(0, 0) == 1
    assert F.pow(0, 3) == 0
    a = F.gen
    assert F.pow(a, F.order - 1) == 1
    assert F.mul(F.pow(a, -1), a) == 1


def test_sign(F):
    assert F.sign(0) == 1
    assert F.sign(1) == F.neg(1)
    assert F.sign(2) == 1


def test_subfields(F):
    assert F.subfield_degrees() == [d for d in range(1, F.N + 1) if F.N % d == 0]
    for d in F.subfield_degrees():
        sub = [int(x) for x in F.subfield_elements(d)]
        assert len(sub) == F.p ** d == len(set(sub))
        assert all(F.in_subfield(x, d) for x in sub)
        # closed under the field operations
        for x in sub[:6]:
            for y in sub[:6]:
                assert F.in_subfield(F.add(x, y), d) and F.in_subfield(F.mul(x, y), d)
        t = F.subfield_generator(d)
        assert len({F.pow(t, k) for k in range(F.p ** d - 1)}) == F.p ** d - 1
        assert len(F.subfield_basis(d)) == d


def test_non_subfield_degree_rejected():
    F = ambient_field(2, 4)
    with pytest.raises(ValueError):
        F.subfield_elements(3)


def test_sum_array_matches_sum(F):
    arr = F.subfield_elements(F.N)
    assert F.sum_array(arr) == F.sum(int(x) for x in arr) == (0 if F.order > 2 else 1)
    cubes = F.pow_array(arr, 3)
    assert [int(x) for x in cubes] == [F.pow(int(x), 3) for x in arr]
