import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from legendre_pairs import _backend, _pykernels

try:
    from legendre_pairs import _kernels
except ImportError:  # pragma: no cover
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


def test_backend_reports_choice():
    assert _backend.BACKEND in ("cython", "python")
    if _kernels is not None and os.environ.get("LEGENDRE_PAIRS_BACKEND") != "python":
        assert _backend.BACKEND == "cython"


def test_backend_override():
    code = "from legendre_pairs import BACKEND; print(BACKEND)"
    env = dict(os.environ, LEGENDRE_PAIRS_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


parts = st.integers(1, 20).flatmap(lambda n: st.tuples(
    *[st.lists(st.integers(-1, 1), min_size=n, max_size=n) for _ in range(4)]))


@needs_ext
@settings(max_examples=200, deadline=None)
@given(parts)
def test_correlation_parity(p):
    assert _kernels.correlation(*p) == _pykernels.correlation(*p)


@pytest.mark.parametrize("n, base", [(1, 4), (2, 4), (3, 4), (3, 2), (5, 2), (6, 2)])
@needs_ext
def test_brute_force_parity(n, base):
    total = base**n
    for start, stop in [(0, total), (1, total // 2 + 1)]:
        assert _kernels.brute_force_range(n, base, start, stop, None) == \
            _pykernels.brute_force_range(n, base, start, stop, None)


@needs_ext
def test_brute_force_cap_parity():
    assert _kernels.brute_force_range(3, 4, 0, 64, 3) == _pykernels.brute_force_range(3, 4, 0, 64, 3)


@needs_ext
@pytest.mark.parametrize("q", [5, 9, 27])
def test_chi_shift_sums_parity(q):
    from legendre_pairs.field import field_of_order
    F = field_of_order(q)
    assert list(_kernels.chi_shift_sums(F.chi_table, F.p, F.n)) == \
        list(_pykernels.chi_shift_sums(F.chi_table, F.p, F.n))


def test_python_correlation_by_hand():
    # (+, -) with itself: R(0) = 2, R(1) = -2
    assert _pykernels.correlation([1, -1], [0, 0], [1, -1], [0, 0]) == ([2, -2], [0, 0])
