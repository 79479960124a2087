"""Constructions of quaternary Legendre pairs of even length.

* :func:`theorem1_pair` -- length (q-1)/2 from the quadratic character of GF(q).
* :func:`gs_pair` -- Goethals-Seidel symmetric complementary ternary pair of
  length (1+q)/2, from orbits of two commuting maps V, W on GF(q^2).
* :func:`w1_pair`, :func:`w2_sequence` -- binary length-2p lifts.
* :func:`theorem2_pair` -- (G(w, x), y), length 2p whenever 2p-1 is a prime power.

Every function taking ``field`` accepts an explicit realization so that
outputs can be pinned; otherwise the canonical field of the right order
is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .field import FieldElement, FieldSpec, chi, field_of_order, in_subfield, make_field, subfield_chi
from .numtheory import is_prime, is_prime_power
from .sequences import (
    BINARY,
    QUATERNARY,
    TERNARY,
    GaussianInt,
    Sequence,
    gray_combine,
)


class ConstructionError(ValueError):
    """Parameters outside the range where a construction applies."""


# -- 2x2 matrices over a field -----------------------------------------------

@dataclass(frozen=True)
class Matrix2:
    """[[a, b], [c, d]] over a single field."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def __post_init__(self):
        spec = self.a.spec
        if any(e.spec != spec for e in (self.b, self.c, self.d)):
            raise ValueError("matrix entries from different fields")

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @classmethod
    def identity(cls, spec: FieldSpec) -> Matrix2:
        return cls(spec.one, spec.zero, spec.zero, spec.one)

    @property
    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        if isinstance(other, Matrix2):
            return Matrix2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        x0, x1 = other
        return (self.a * x0 + self.b * x1, self.c * x0 + self.d * x1)

    def scale(self, s) -> Matrix2:
        return Matrix2(self.a * s, self.b * s, self.c * s, self.d * s)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: Matrix2) -> Matrix2:
        return Matrix2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def det(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> Matrix2:
        dinv = self.det().inverse()
        return Matrix2(self.d * dinv, -self.b * dinv, -self.c * dinv, self.a * dinv)

    def __pow__(self, k: int) -> Matrix2:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Matrix2.identity(self.spec)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any((self.a, self.b, self.c, self.d))


def det2(u, v) -> FieldElement:
    """Determinant of the matrix with columns u and v."""
    return u[0] * v[1] - v[0] * u[1]


# -- pairs from the quadratic character ------------------------------------------

def _check_field(field: FieldSpec | None, order: int) -> FieldSpec:
    if field is None:
        return field_of_order(order)
    if field.q != order:
        raise ConstructionError(f"field has order {field.q}, expected {order}")
    return field


def theorem1_pair(q: int, field: FieldSpec | None = None) -> tuple[Sequence, Sequence]:
    """Legendre pair of length (q-1)/2 from the quadratic character of GF(q).

    a_0 is 1 when q = 3 (mod 4) and i when q = 1 (mod 4);
    a_k = chi(g^(2k) - 1) and b_k = chi(g^(2k+1) - 1) otherwise.
    """
    if q % 2 == 0 or is_prime_power(q) is None:
        raise ConstructionError(f"q={q} is not an odd prime power")
    if q < 5:
        raise ConstructionError(f"q={q} gives a sequence of length {(q - 1) // 2}; need q >= 5")
    F = _check_field(field, q)
    g = F.g
    half = (q - 1) // 2
    a = [GaussianInt(0, 1) if q % 4 == 1 else GaussianInt(1, 0)]
    b = []
    x = F.one  # g^(2k)
    for k in range(half):
        if k:
            a.append(GaussianInt(chi(F, x - 1)))
        b.append(GaussianInt(chi(F, x * g - 1)))
        x = x * g * g
    return Sequence(a, QUATERNARY if q % 4 == 1 else BINARY), Sequence(b, BINARY)


# -- Goethals-Seidel ---------------------------------------------------------

def extension_field(q: int) -> FieldSpec:
    """Canonical GF(q^2) for an odd prime power q."""
    pk = is_prime_power(q)
    if pk is None or q % 2 == 0:
        raise ConstructionError(f"q={q} is not an odd prime power")
    p, m = pk
    return make_field(p, 2 * m)


def check_gs_order(q: int) -> None:
    """Raise unless q is a prime power congruent to 1 mod 4."""
    if q % 2 == 0 or is_prime_power(q) is None:
        raise ConstructionError(f"q={q} is not an odd prime power")
    if q % 4 != 1:
        raise ConstructionError(
            f"q={q} is 3 mod 4: V^((1+q)/4) W is then a scalar matrix, so two orbit "
            "vectors are proportional and the construction fails"
        )


def _gs_field(q: int, field: FieldSpec | None) -> FieldSpec:
    check_gs_order(q)
    if field is None:
        return extension_field(q)
    if field.q != q * q:
        raise ConstructionError(f"field has order {field.q}, expected {q}^2")
    return field


def gs_matrices(field: FieldSpec | None, q: int) -> tuple[Matrix2, Matrix2]:
    """The commuting maps V and W on GF(q^2) in the basis {1, g}."""
    F = _gs_field(q, field)
    g = F.g
    s = g ** (q - 1) + g ** (1 - q)
    d = g ** (q - 1) - g ** (1 - q)
    h = g ** ((1 + q) // 2)
    half = F(2).inverse()
    V = Matrix2(s * half, h * d * half, h.inverse() * d * half, s * half)
    W = Matrix2(F.zero, g ** (1 + q), F.one, F.zero)
    for e in (V.a, V.b, V.c, V.d, W.b):
        if not in_subfield(F, e, q):
            raise ConstructionError(f"matrix entry {e.pretty()} not in GF({q}); bad field realization")
    if not (V @ W - W @ V).is_zero():
        raise ConstructionError("V and W do not commute")  # pragma: no cover
    if V ** ((1 + q) // 2) != -Matrix2.identity(F):
        raise ConstructionError("V^((1+q)/2) != -I")  # pragma: no cover
    return V, W


def v_power_closed_form(field: FieldSpec, q: int, k: int) -> Matrix2:
    """V^k written directly in terms of g."""
    g = field.g
    s = g ** (k * (q - 1)) + g ** (k * (1 - q))
    d = g ** (k * (q - 1)) - g ** (k * (1 - q))
    h = g ** ((1 + q) // 2)
    half = field(2).inverse()
    return Matrix2(s * half, h * d * half, h.inverse() * d * half, s * half)


def vw_power_closed_form(field: FieldSpec, q: int, k: int) -> Matrix2:
    """V^k W written directly in terms of g."""
    g = field.g
    s = g ** (k * (q - 1)) + g ** (k * (1 - q))
    d = g ** (k * (q - 1)) - g ** (k * (1 - q))
    h = g ** ((1 + q) // 2)
    half = field(2).inverse()
    return Matrix2(h * d * half, g ** (1 + q) * s * half, s * half, h * d * half)


def gs_orbit(V: Matrix2, W: Matrix2, q: int) -> tuple[list, list]:
    """([V^k x], [V^k W x]) for k = 0..(q-1)/2, with x = (1, 0)."""
    F = V.spec
    x = (F.one, F.zero)
    vx, vwx = [x], [W @ x]
    for _ in range((q - 1) // 2):
        vx.append(V @ vx[-1])
        vwx.append(V @ vwx[-1])
    return vx, vwx


def pairwise_nonproportional(vectors: Iterable) -> bool:
    """True iff every vector is nonzero and no two are scalar multiples."""
    vs = list(vectors)
    if any(not (u[0] or u[1]) for u in vs):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if not det2(vs[i], vs[j]):
                return False
    return True


def gamma_values(vectors: Iterable) -> list[FieldElement]:
    """alpha/beta for every vector (alpha, beta) with beta != 0."""
    return [u[0] / u[1] for u in vectors if u[1]]


def gs_pair(q: int, field: FieldSpec | None = None) -> tuple[Sequence, Sequence]:
    """Symmetric complementary ternary pair of length (1+q)/2, zero only at a_0.

    a_k = chi(det(x, V^k x)) and b_k = chi(det(x, V^k W x)), chi being the
    quadratic character of the base field GF(q).
    """
    F = _gs_field(q, field)
    V, W = gs_matrices(F, q)
    vx, vwx = gs_orbit(V, W, q)
    x = vx[0]
    a = [subfield_chi(F, det2(x, v), q) for v in vx]
    b = [subfield_chi(F, det2(x, v), q) for v in vwx]
    return Sequence(a, TERNARY), Sequence(b, TERNARY)


# -- binary lifts and the Gray assembly ------------------------------------------

def check_partner(p: int) -> int:
    """Return q = 2p - 1 after checking p is an odd prime and q a prime power."""
    if not is_prime(p) or p == 2:
        raise ConstructionError(f"p={p} is not an odd prime")
    q = 2 * p - 1
    if is_prime_power(q) is None:
        raise ConstructionError(f"2p-1={q} is not a prime power")
    return q


def w1_pair(p: int, field: FieldSpec | None = None) -> tuple[Sequence, Sequence]:
    """Symmetric binary (w, x) of length 2p with R_w + R_x = 4-4p at p, 0 elsewhere.

    ``field`` realizes GF((2p-1)^2) for the underlying Goethals-Seidel pair.
    """
    q = check_partner(p)
    a, b = gs_pair(q, field)
    w = [1 if k in (0, p) else (-1) ** k * a.re[k % p] for k in range(2 * p)]
    x = [(-1) ** k * b.re[k % p] for k in range(2 * p)]
    return Sequence(w, BINARY), Sequence(x, BINARY)


def w2_sequence(p: int) -> Sequence:
    """Binary y of length 2p with R_y = 2p-4 at p and -2 elsewhere."""
    if not is_prime(p) or p == 2:
        raise ConstructionError(f"p={p} is not an odd prime")
    c = [0] + [1 if pow(k, (p - 1) // 2, p) == 1 else -1 for k in range(1, p)]
    y = [1 if k == 0 else -1 if k == p else c[k % p] for k in range(2 * p)]
    return Sequence(y, BINARY)


def theorem2_pair(p: int, field: FieldSpec | None = None) -> tuple[Sequence, Sequence]:
    """Quaternary Legendre pair (G(w, x), y) of length 2p with y binary."""
    w, x = w1_pair(p, field)
    return gray_combine(w, x), w2_sequence(p)


def compression_check(a: Sequence, p: int) -> bool:
    """a_0 + a_p = 1+i and a_k + a_{k+p} = 0 for 0 < k < p."""
    if len(a) != 2 * p:
        raise ValueError(f"sequence length {len(a)} is not 2p = {2 * p}")
    if a[0] + a[p] != GaussianInt(1, 1):
        return False
    return all(a[k] + a[k + p] == 0 for k in range(1, p))


# -- Hadamard matrices ------------------------------------------------------------

_UNITS = {GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1)}


@dataclass(frozen=True, init=False)
class HadamardMatrix:
    """Square matrix over {1, i, -1, -i}; not necessarily Hadamard until verified."""

    rows: tuple[tuple[GaussianInt, ...], ...]

    def __init__(self, rows):
        rs = tuple(tuple(GaussianInt.of(e) for e in row) for row in rows)
        m = len(rs)
        if m == 0 or any(len(r) != m for r in rs):
            raise ValueError("matrix must be square and nonempty")
        if any(e not in _UNITS for r in rs for e in r):
            raise ValueError("entries must lie in {1, i, -1, -i}")
        object.__setattr__(self, "rows", rs)

    @property
    def order(self) -> int:
        return len(self.rows)

    def render(self) -> str:
        glyph = {GaussianInt(1, 0): "+", GaussianInt(-1, 0): "-", GaussianInt(0, 1): "i", GaussianInt(0, -1): "j"}
        return "\n".join("".join(glyph[e] for e in r) for r in self.rows)


def verify_hadamard(H: HadamardMatrix) -> bool:
    """H H* = M I exactly."""
    m = H.order
    for r in range(m):
        for s in range(r, m):
            acc = GaussianInt(0, 0)
            for k in range(m):
                acc = acc + H.rows[r][k] * H.rows[s][k].conj()
            if acc != (m if r == s else 0):
                return False
    return True


def turyn_double(H: HadamardMatrix) -> HadamardMatrix:
    """[[H, H], [H, -H]] of order 2M."""
    if not verify_hadamard(H):
        raise ConstructionError("input is not a Hadamard matrix")
    top = [r + r for r in H.rows]
    bottom = [r + tuple(-e for e in r) for r in H.rows]
    return HadamardMatrix(top + bottom)
