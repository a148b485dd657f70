import os
import subprocess
import sys
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from curvemilnor import _echelon_py, linalg
from oracle import rank as oracle_rank

try:
    from curvemilnor import _echelon as compiled
except ImportError:
    compiled = None

BACKENDS = [_echelon_py] + ([compiled] if compiled is not None else [])
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")


def matrices(p):
    entry = st.integers(-6, 6) if p is None else st.integers(0, p - 1)
    return st.integers(1, 9).flatmap(
        lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=0, max_size=10).map(lambda m: (n, m)))


def run(backend, ncols, rows, p):
    ech = linalg.make_echelon(ncols, p, backend)
    flags = [ech.insert(r) for r in rows]
    return flags, ech.rank, ech.rref()


def normalized(rref, p):
    out = []
    for piv, row in rref:
        if p is None:
            out.append((piv, [Fraction(x, row[piv]) for x in row]))
        else:
            inv = pow(row[piv], -1, p)
            out.append((piv, [x * inv % p for x in row]))
    return out


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@given(data=matrices(None))
def test_integer_kernel_matches_sympy_rref(backend, data):
    n, rows = data
    _, rank, rref = run(backend, n, rows, None)
    if not rows:
        assert rank == 0
        return
    M, pivs = sympy.Matrix(rows).rref()
    assert rank == len(pivs)
    got = normalized(rref, None)
    assert [p for p, _ in got] == list(pivs)
    for k, (_, row) in enumerate(got):
        assert row == [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in M.row(k)]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
@pytest.mark.parametrize("p", [3, 7, 101, 32003])
@given(data=st.data())
def test_mod_kernel_rank_matches_oracle(backend, p, data):
    n, rows = data.draw(matrices(p))
    flags, rank, rref = run(backend, n, rows, p)
    assert rank == (oracle_rank(rows, p) if rows else 0)
    assert sum(flags) == rank
    for piv, row in rref:
        assert row[piv] == 1
        for piv2, row2 in rref:
            if piv2 != piv:
                assert row2[piv] == 0


@needs_compiled
@given(data=matrices(None))
def test_backends_agree_over_integers(data):
    n, rows = data
    assert run(_echelon_py, n, rows, None) == run(compiled, n, rows, None)


@needs_compiled
@pytest.mark.parametrize("p", [5, 101])
@given(data=st.data())
def test_backends_agree_mod_p(p, data):
    n, rows = data.draw(matrices(p))
    assert run(_echelon_py, n, rows, p) == run(compiled, n, rows, p)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_contains_and_reduce(backend):
    ech = linalg.make_echelon(3, None, backend)
    assert ech.insert([2, 4, 0])
    assert not ech.insert([1, 2, 0])
    assert ech.contains([3, 6, 0]) and not ech.contains([0, 0, 1])
    assert ech.rows[0] == [1, 2, 0]
    m = linalg.make_echelon(3, 7, backend)
    m.insert([3, 1, 0])
    assert list(m.rows[0]) == [1, 5, 0]


def test_large_prime_uses_python_kernel():
    big = (1 << 61) - 1
    ech = linalg.make_echelon(2, big)
    assert isinstance(ech, _echelon_py.ModEchelon)
    assert ech.insert([big - 1, 1]) and ech.rows[0] == [1, big - 1]


def test_integral_and_rank_helpers():
    assert linalg.integral([Fraction(1, 2), Fraction(1, 3), 0], None) == [3, 2, 0]
    assert linalg.integral([1, 2], 7) == [1, 2]
    assert linalg.rank_of([[1, 1], [2, 2], [0, 1]], 2, None) == 2


def test_pure_backend_selection():
    code = "from curvemilnor import BACKEND; print(BACKEND)"
    env = dict(os.environ, CURVEMILNOR_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_engine_identical_under_pure_backend():
    code = ("from curvemilnor import engine\nfrom curvemilnor.corpus import full_corpus\n"
            "from curvemilnor.series import FieldSpec\n"
            "for F in (None, FieldSpec(7)):\n"
            "    cs = full_corpus() if F is None else {k: v for k, v in full_corpus(F).items() if k[0] in 'AD'}\n"
            "    for n, c in cs.items():\n"
            "        print(n, engine.invariants(c).to_json_obj(), engine.value_semigroup(c).to_json())\n")
    outs = []
    for pure in ("1", "0"):
        env = dict(os.environ, CURVEMILNOR_PURE=pure)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                                   check=True).stdout)
    assert outs[0] == outs[1] and outs[0].count("\n") > 40
