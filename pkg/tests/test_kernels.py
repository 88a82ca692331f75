import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from indmod.fforacle import kernels
from indmod.fforacle.field import ambient_field
from indmod.fforacle.modules import SubspaceBasis, make_h0

BACKENDS = kernels.available_backends()
SMALL = [(2, 3, 6), (2, 4, 14), (3, 2, 8), (5, 1, 4)]


def test_python_backend_always_present():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_unknown_backend():
    with pytest.raises((KeyError, ValueError)):
        kernels.get_backend("fortran")


def _run(name, M, seeds):
    F = M.field
    mod = kernels.get_backend(name)
    seeds = np.array(seeds, dtype=np.int64).reshape(-1, M.dim)
    return SubspaceBasis.from_array(mod.spin(M.gen_stack(), seeds, F.exp, F.log, F.zech, F.p), M.dim)


vec = st.data()


@pytest.mark.parametrize("p,N,m", SMALL)
@settings(max_examples=25, deadline=None)
@given(data=vec)
def test_backends_agree(p, N, m, data):
    F = ambient_field(p, N)
    M = make_h0(m, F)
    seeds = data.draw(st.lists(st.lists(st.integers(0, F.order - 1), min_size=m + 1, max_size=m + 1),
                               min_size=1, max_size=3))
    results = {b: _run(b, M, seeds) for b in BACKENDS}
    assert len(set(results.values())) == 1


@pytest.mark.parametrize("p,N,m", SMALL)
@settings(max_examples=25, deadline=None)
@given(data=vec)
def test_spin_closure_properties(p, N, m, data):
    F = ambient_field(p, N)
    M = make_h0(m, F)
    draw_vec = st.lists(st.integers(0, F.order - 1), min_size=m + 1, max_size=m + 1)
    v, w = data.draw(draw_vec), data.draw(draw_vec)
    V = M.spin([v])
    VW = M.spin([v, w])
    # stable, contains the seed, idempotent, monotone, order independent
    assert M.is_stable(V)
    assert V.contains(F, v)
    assert M.spin(V.rows or [[0] * (m + 1)]) == V
    assert V.issubspace(F, VW)
    assert M.spin([w, v]) == VW


def test_spin_trivial_cases():
    F = ambient_field(2, 4)
    M = make_h0(6, F)
    assert M.spin([[0] * 7]).dim == 0
    assert M.spin([M.unit(j) for j in range(7)]).dim == 7


def test_rref_canonical():
    F = ambient_field(3, 2)
    r0 = [1, F.gen, 0]
    rows = [r0, [F.mul(F.gen, x) for x in r0], [0, 0, 5]]
    A = SubspaceBasis.span(F, rows, 3)
    B = SubspaceBasis.span(F, [rows[2], rows[0]], 3)
    assert A == B and A.dim == 2
    for r, piv in zip(A.rows, A.pivots):
        assert r[piv] == 1
        assert all(other[piv] == 0 for other in A.rows if other is not r)


@pytest.mark.parametrize("name", BACKENDS)
def test_rref_backends_agree(name):
    F = ambient_field(2, 3)
    rng = np.random.default_rng(3)
    rows = rng.integers(0, F.order, size=(6, 9))
    got = kernels.get_backend(name).rref(rows, F.exp, F.log, F.zech, F.p)
    ref = kernels.get_backend("python").rref(rows, F.exp, F.log, F.zech, F.p)
    assert np.array_equal(got, ref)
