import itertools
import random
import re

import pytest
from hypothesis import given, settings, strategies as st

from legendre_pairs.constructions import (
    ConstructionError,
    HadamardMatrix,
    Matrix2,
    compression_check,
    gamma_values,
    gs_matrices,
    gs_orbit,
    gs_pair,
    pairwise_nonproportional,
    theorem1_pair,
    theorem2_pair,
    turyn_double,
    v_power_closed_form,
    verify_hadamard,
    vw_power_closed_form,
    w1_pair,
    w2_sequence,
)
from legendre_pairs.field import make_field
from legendre_pairs.numtheory import is_prime_power
from legendre_pairs.sequences import (
    GaussianInt,
    Sequence,
    autocorrelation_spectrum,
    gray_combine,
    is_amicable_set,
    is_complementary,
    is_legendre_pair,
    is_symmetric,
    pair_sums,
    seq,
    summed_spectrum,
)

GF625 = make_field(5, 4, (2, 4, 4, 0, 1), (0, 1, 0, 0))

# GF(25^2) as GF(5)[t]/(t^4 - t^2 - t + 2) with g = t
GS_V = [["2t^3+2t^2+2t-2", "2t^3+2t^2+2t-2"], ["-t^3-t^2-t", "2t^3+2t^2+2t-2"]]
GS_W = [["0", "t^3+t^2+t-2"], ["1", "0"]]
GS_VX = [
    ("1", "0"), ("2t^3+2t^2+2t-2", "-t^3-t^2-t"), ("-t^3-t^2-t-2", "-t^3-t^2-t+2"),
    ("-t^3-t^2-t+2", "-2t^3-2t^2-2t-1"), ("-2t^3-2t^2-2t+1", "1"),
    ("-2t^3-2t^2-2t-2", "t^3+t^2+t+2"), ("2t^3+2t^2+2t+1", "-t^3-t^2-t-1"),
    ("-2t^3-2t^2-2t-1", "-t^3-t^2-t-1"), ("2t^3+2t^2+2t+2", "t^3+t^2+t+2"),
    ("2t^3+2t^2+2t-1", "1"), ("t^3+t^2+t-2", "-2t^3-2t^2-2t-1"),
    ("t^3+t^2+t+2", "-t^3-t^2-t+2"), ("-2t^3-2t^2-2t+2", "-t^3-t^2-t"),
]
GS_VWX = [
    ("0", "1"), ("2t^3+2t^2+2t-2", "2t^3+2t^2+2t-2"), ("-t^3-t^2-t-1", "-t^3-t^2-t-2"),
    ("-2t^3-2t^2-2t-2", "-t^3-t^2-t+2"), ("t^3+t^2+t-2", "-2t^3-2t^2-2t+1"),
    ("-2", "-2t^3-2t^2-2t-2"), ("t^3+t^2+t", "2t^3+2t^2+2t+1"),
    ("t^3+t^2+t", "-2t^3-2t^2-2t-1"), ("-2", "2t^3+2t^2+2t+2"),
    ("t^3+t^2+t-2", "2t^3+2t^2+2t-1"), ("-2t^3-2t^2-2t-2", "t^3+t^2+t-2"),
    ("-t^3-t^2-t-1", "t^3+t^2+t+2"), ("2t^3+2t^2+2t-2", "-2t^3-2t^2-2t+2"),
]
GS13_A = seq("(0---+-++-+---)")
GS13_B = seq("(++---+--+---+)")
W26 = seq("(++-++++----+-+-+----++++-+)")
X26 = seq("(+--+---+++-++-++-+++---+--)")
Y26 = seq("(++-++----++-+-+-++----++-+)")
G26 = seq("(+i-+iiijjj-+jij+-jjjiii+-i)")


def printed(text, p=5, n=4):
    """Coefficient tuple of a printed polynomial in t, reduced mod p."""
    coeffs = [0] * n
    for sign, c, t, e in re.findall(r"([+-]?)(\d*)(t?)(?:\^(\d+))?", text.replace(" ", "")):
        if not c and not t:
            continue
        deg = (int(e) if e else 1) if t else 0
        val = int(c) if c else 1
        coeffs[deg] += -val if sign == "-" else val
    return tuple(x % p for x in coeffs)


def test_printed_parser():
    assert printed("-t^3-t^2-t") == (0, 4, 4, 4)
    assert printed("2t^3+2t^2+2t-2") == (3, 2, 2, 2)
    assert printed("0") == (0, 0, 0, 0)


# -- theorem1_pair ----------------------------------------------------------------

def test_theorem1_q7():
    F = make_field(7, g=3)
    a, b = theorem1_pair(7, F)
    assert a == seq("++-") and b == seq("+-+")
    assert summed_spectrum(a, b)[1:] == [-2, -2]


def test_theorem1_q5():
    a, b = theorem1_pair(5, make_field(5, g=2))
    assert a == seq("i-") and b == seq("+-")


def test_theorem1_q73(char_pairs):
    a, b = theorem1_pair(73)
    assert len(a) == 36 and is_legendre_pair(a, b).ok
    ta, tb = next(p for p in char_pairs if len(p[0]) == 36)
    assert is_legendre_pair(ta, tb).ok


@pytest.mark.parametrize("q", [1, 3, 4, 6, 15, 21, 100])
def test_theorem1_rejects(q):
    with pytest.raises(ConstructionError):
        theorem1_pair(q)


def test_theorem1_rejects_wrong_field():
    with pytest.raises(ConstructionError):
        theorem1_pair(13, make_field(11))


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 49, 81, 121, 125])
def test_theorem1_verifies(q):
    a, b = theorem1_pair(q)
    assert len(a) == (q - 1) // 2 and is_legendre_pair(a, b).ok
    assert b.is_binary
    imag = [k for k, e in enumerate(a) if e.im]
    assert imag == ([0] if q % 4 == 1 else [])


def test_char_pairs_reproduced_with_fixture(char_pairs, pinned_fields):
    for ta, tb in char_pairs:
        q = 2 * len(ta) + 1
        a, b = theorem1_pair(q, pinned_fields(q))
        assert a == ta
        # the catalog lists b rotated one place to the right
        assert b.shift(-1) == tb


# -- Goethals-Seidel --------------------------------------------------------------

def test_gf625_matrices():
    V, W = gs_matrices(GF625, 25)
    got_v = [[e.coeffs for e in row] for row in V.rows]
    got_w = [[e.coeffs for e in row] for row in W.rows]
    assert got_v == [[printed(s) for s in row] for row in GS_V]
    assert got_w == [[printed(s) for s in row] for row in GS_W]


def test_gf625_orbit():
    V, W = gs_matrices(GF625, 25)
    vx, vwx = gs_orbit(V, W, 25)
    assert [tuple(e.coeffs for e in v) for v in vx] == [tuple(map(printed, v)) for v in GS_VX]
    assert [tuple(e.coeffs for e in v) for v in vwx] == [tuple(map(printed, v)) for v in GS_VWX]


def test_gf625_pair():
    a, b = gs_pair(25, GF625)
    assert a == GS13_A and b == GS13_B


def test_gs_q5():
    a, b = gs_pair(5)
    s = a[1]
    assert a == Sequence([0, s, s])
    assert b[0] * b[1] == -1 and b[1] == b[2]
    assert is_symmetric(a) and is_symmetric(b) and is_complementary(a, b)


@pytest.mark.parametrize("q", [3, 7, 11, 19, 27])
def test_gs_rejects_3_mod_4(q):
    with pytest.raises(ConstructionError, match="scalar"):
        gs_pair(q)


def test_gs_rejects_bad_field():
    with pytest.raises(ConstructionError):
        gs_pair(13, GF625)
    with pytest.raises(ConstructionError):
        gs_pair(15)


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29, 37, 41, 49])
def test_gs_internals(q):
    V, W = gs_matrices(None, q)
    F = V.spec
    assert (V @ W - W @ V).is_zero()
    assert V ** ((1 + q) // 2) == -Matrix2.identity(F)
    for k in range(1, (q + 1) // 2):
        assert v_power_closed_form(F, q, k) == V**k
        assert vw_power_closed_form(F, q, k) == V**k @ W
    vx, vwx = gs_orbit(V, W, q)
    assert len(vx) + len(vwx) == q + 1
    assert pairwise_nonproportional(vx + vwx)
    gammas = gamma_values(vx + vwx)
    assert len(gammas) == q
    assert {g.code for g in gammas} == {e.code for e in F.elements() if e**q == e}
    a, b = gs_pair(q, F)
    assert is_symmetric(a) and is_symmetric(b) and is_complementary(a, b)
    zeros = [(s, k) for s, z in (("a", a), ("b", b)) for k, e in enumerate(z) if e == 0]
    assert zeros == [("a", 0)]


def test_nonproportional_detects_collinear():
    F = make_field(5)
    assert not pairwise_nonproportional([(F(1), F(2)), (F(2), F(4))])
    assert not pairwise_nonproportional([(F(0), F(0))])
    assert pairwise_nonproportional([(F(1), F(0)), (F(0), F(1))])


def test_matrix2_inverse_and_power():
    F = make_field(7)
    M = Matrix2(F(1), F(2), F(3), F(4))
    assert M @ M.inverse() == Matrix2.identity(F)
    assert M ** -2 == (M.inverse()) ** 2
    assert M**0 == Matrix2.identity(F)


# -- lifts and theorem2_pair ---------------------------------------------------------

def test_w1_pinned_p13(pinned_fields):
    w, x = w1_pair(13, pinned_fields(625))
    assert w == W26 and x == X26


def test_w1_p3():
    w, x = w1_pair(3)
    a, b = gs_pair(5)
    s, b0, b1 = a[1].re, b[0].re, b[1].re
    assert w == Sequence([1, -s, s, 1, s, -s])
    assert x == Sequence([b0, -b1, b1, -b0, b1, -b1])
    assert summed_spectrum(w, x)[3] == -8


@pytest.mark.parametrize("p", [3, 5, 7, 13, 19, 31, 37])
def test_w1_spectrum(p):
    w, x = w1_pair(p)
    assert is_symmetric(w) and is_symmetric(x)
    spec = summed_spectrum(w, x)
    assert all(v == (4 - 4 * p if u == p else 0) for u, v in enumerate(spec) if u)


@pytest.mark.parametrize("p, text", [
    (3, "++--+-"),
    (5, "++--+-+--+"),
    (13, str(Y26)),
])
def test_w2_examples(p, text):
    assert w2_sequence(p) == seq(text)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 23, 29, 97, 101])
def test_w2_spectrum(p):
    r = autocorrelation_spectrum(w2_sequence(p))
    assert all(v == (2 * p - 4 if u == p else -2) for u, v in enumerate(r) if u)


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_w2_rejects(p):
    with pytest.raises(ConstructionError):
        w2_sequence(p)


@pytest.mark.parametrize("p", [2, 4, 11, 17, 23])
def test_theorem2_rejects(p):
    # 2 is not odd; 21, 33, 45 are not prime powers
    with pytest.raises(ConstructionError):
        theorem2_pair(p)


def test_theorem2_pinned_p13(pinned_fields):
    a, b = theorem2_pair(13, pinned_fields(625))
    assert a == G26 and b == Y26
    assert a == gray_combine(W26, X26)
    assert is_legendre_pair(a, b).ok


def test_theorem2_p3():
    a, b = theorem2_pair(3)
    assert b == seq("++--+-") and is_legendre_pair(a, b).ok


def test_theorem2_p19(lift_pairs):
    _, b = theorem2_pair(19)
    assert b == lift_pairs[-1][1]


def test_lift_pairs_reproduced_with_fixture(lift_pairs, pinned_fields):
    for ta, tb in lift_pairs:
        p = len(ta) // 2
        a, b = theorem2_pair(p, pinned_fields((2 * p - 1) ** 2))
        assert (a, b) == (ta, tb)


@pytest.mark.parametrize("p", [3, 5, 7, 13, 19])
def test_theorem2_structure(p):
    a, b = theorem2_pair(p)
    assert is_legendre_pair(a, b).ok and b.is_binary
    assert compression_check(a, p)
    assert pair_sums(a, b) == (GaussianInt(1, 1), 0)
    w, x = w1_pair(p)
    y = w2_sequence(p)
    assert is_amicable_set(w, x, y, y)
    assert all(v == -4 for v in summed_spectrum(w, x, y, y)[1:])


def test_compression_check_examples(lift_pairs):
    assert compression_check(seq("++-i-+"), 3)
    assert compression_check(lift_pairs[0][0], 3)
    assert not compression_check(seq("++++++"), 3)
    assert not compression_check(seq("i+-i-+"), 3)
    with pytest.raises(ValueError):
        compression_check(seq("++++"), 3)


# -- Gray gate: quadruple condition iff the combined pair is Legendre ---------------

def _gate(w, x, y, z):
    amicable = is_amicable_set(w, x, y, z)
    total = all(v == -4 for v in summed_spectrum(w, x, y, z)[1:])
    return amicable and total


@pytest.mark.parametrize("n", [2, 3])
def test_gray_gate_exhaustive(n):
    seqs = [Sequence(v) for v in itertools.product([1, -1], repeat=n)]
    hits = 0
    for w, x, y, z in itertools.product(seqs, repeat=4):
        lp = is_legendre_pair(gray_combine(w, x), gray_combine(y, z)).ok
        assert lp == _gate(w, x, y, z)
        hits += lp
    assert hits > 0


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 10), st.randoms(use_true_random=False))
def test_gray_gate_random(n, rnd):
    w, x, y, z = (Sequence([rnd.choice([1, -1]) for _ in range(n)]) for _ in range(4))
    assert is_legendre_pair(gray_combine(w, x), gray_combine(y, z)).ok == _gate(w, x, y, z)


def test_gray_gate_on_known_pairs(char_pairs, lift_pairs):
    from legendre_pairs.sequences import gray_split
    for a, b in char_pairs + lift_pairs:
        if a.is_unimodular and b.is_unimodular:
            assert _gate(*gray_split(a), *gray_split(b))


# -- Hadamard -----------------------------------------------------------------------

def test_turyn_from_order_one():
    H1 = HadamardMatrix([[1]])
    H2 = turyn_double(H1)
    assert H2 == HadamardMatrix([[1, 1], [1, -1]])
    H4 = turyn_double(H2)
    assert H4.order == 4 and verify_hadamard(H4)
    assert verify_hadamard(turyn_double(H4))


def test_verify_hadamard_cases():
    assert verify_hadamard(HadamardMatrix([[1, 1], [1, -1]]))
    assert not verify_hadamard(HadamardMatrix([[1, 1], [1, 1]]))
    i = GaussianInt(0, 1)
    assert verify_hadamard(HadamardMatrix([[1, i], [i, 1]]))


def test_quaternary_order4_doubles():
    i = GaussianInt(0, 1)
    Q = HadamardMatrix([[1, i], [i, 1]])
    H4 = turyn_double(Q)
    assert verify_hadamard(H4) and verify_hadamard(turyn_double(H4))
    assert H4.render().splitlines()[0] == "+i+i"


def test_hadamard_rejects():
    with pytest.raises(ValueError):
        HadamardMatrix([[1, 0], [1, 1]])
    with pytest.raises(ValueError):
        HadamardMatrix([[1, 1]])
    with pytest.raises(ConstructionError):
        turyn_double(HadamardMatrix([[1, 1], [1, 1]]))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_order2_quaternary_hadamard_doubles(exps):
    units = [GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1)]
    H = HadamardMatrix([[units[exps[0]], units[exps[1]]], [units[exps[2]], units[exps[3]]]])
    if verify_hadamard(H):
        assert verify_hadamard(turyn_double(H))
    else:
        with pytest.raises(ConstructionError):
            turyn_double(H)
