"""Arithmetic in GF(p^n) for odd primes p, realized as Z_p[t]/(f(t)).

Elements are stored as coefficient tuples in the power basis of the
modulus, constant term first.  A field is described by an immutable
:class:`FieldSpec` carrying the modulus and a designated primitive
element ``g``.

Polynomials cross the text boundary as comma separated coefficient
lists, constant term first: t^4 - t^2 - t + 2 over GF(5) is "2,4,4,0,1".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .numtheory import factorize, is_prime

MAX_ORDER = 2**31


class FieldError(ValueError):
    """Raised for invalid field parameters or illegal field operations."""


# -- polynomials over Z_p (coefficient lists, constant term first) ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _trim([c % p for c in r])


def _poly_divmod(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def _poly_gcd(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _poly_powmod(base, e, mod, p):
    result = [1]
    base = _poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over Z_p.

    f of degree n is irreducible iff t^(p^n) = t mod f and
    gcd(t^(p^(n/r)) - t, f) = 1 for each prime r dividing n.
    """
    f = _trim([c % p for c in poly])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False
    # cheap root test first; settles n <= 3 on its own
    for x in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    if n <= 3:
        return True
    t = [0, 1]
    if _poly_powmod(t, p**n, f, p) != t:
        return False
    for r in factorize(n):
        h = _poly_powmod(t, p ** (n // r), f, p)
        diff = _trim([(x - y) % p for x, y in itertools.zip_longest(h, t, fillvalue=0)])
        if len(_poly_gcd(f, diff, p)) != 1:
            return False
    return True


def parse_poly(text: str) -> tuple[int, ...]:
    """Parse "c0,c1,...,cn" into a coefficient tuple."""
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError as exc:
        raise FieldError(f"bad polynomial literal {text!r}") from exc


def format_poly(coeffs: Iterable[int]) -> str:
    return ",".join(str(c) for c in coeffs)


# -- fields ------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) as Z_p[t]/(modulus) with designated primitive element.

    ``modulus`` holds n + 1 coefficients (monic, constant term first);
    ``g_coeffs`` holds the n coordinates of the primitive element.
    """

    p: int
    n: int
    modulus: tuple[int, ...]
    g_coeffs: tuple[int, ...] = dc_field(compare=True)

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def g(self) -> FieldElement:
        return FieldElement(self, self.g_coeffs)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def element(self, value) -> FieldElement:
        """Coerce an int (embedded from Z_p) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.n:
            coeffs = _poly_divmod(coeffs, list(self.modulus), self.p)[1]
        coeffs = list(coeffs) + [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_code(self, code: int) -> FieldElement:
        """Inverse of :meth:`FieldElement.code` (base-p digits, c0 lowest)."""
        coeffs = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in code order."""
        for code in range(self.q):
            yield self.from_code(code)

    @cached_property
    def _order_factors(self) -> list[int]:
        return factorize(self.q - 1)

    @cached_property
    def chi_table(self) -> list[int]:
        """chi of every element, indexed by code.  Built by squaring."""
        table = [-1] * self.q
        table[0] = 0
        for x in self.elements():
            if x.code:
                table[(x * x).code] = 1
        return table

    def describe(self) -> str:
        return f"GF({self.p}^{self.n}) mod [{format_poly(self.modulus)}] g=[{format_poly(self.g_coeffs)}]"


@dataclass(frozen=True, eq=False)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    # -- comparisons / hashing
    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.spec.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.modulus, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    @property
    def code(self) -> int:
        c = 0
        for coeff in reversed(self.coeffs):
            c = c * self.spec.p + coeff
        return c

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*t^{i}" if i > 1 else f"{c}*t")
        return f"<GF({self.spec.q}) {' + '.join(terms) or '0'}>"

    def pretty(self) -> str:
        """Render with balanced residues, highest degree first (2t^3 - t + 1)."""
        p = self.spec.p
        parts = []
        for i in range(self.spec.n - 1, -1, -1):
            c = self.coeffs[i]
            if c > p // 2:
                c -= p
            if c == 0:
                continue
            mono = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            mag = abs(c)
            body = str(mag) if i == 0 else (mono if mag == 1 else f"{mag}{mono}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts) or "0"

    # -- arithmetic
    def _coerce(self, other) -> FieldElement:
        return self.spec.element(other)

    def __add__(self, other):
        return add(self.spec, self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self.spec, self, self._coerce(other))

    def __rsub__(self, other):
        return sub(self.spec, self._coerce(other), self)

    def __neg__(self):
        return neg(self.spec, self)

    def __mul__(self, other):
        return mul(self.spec, self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return mul(self.spec, self, inv(self.spec, self._coerce(other)))

    def __rtruediv__(self, other):
        return mul(self.spec, self._coerce(other), inv(self.spec, self))

    def __pow__(self, e: int):
        return power(self.spec, self, e)

    def inverse(self) -> FieldElement:
        return inv(self.spec, self)


# -- module-level operations -------------------------------------------------

def add(spec: FieldSpec, x: FieldElement, y: FieldElement) -> FieldElement:
    p = spec.p
    return FieldElement(spec, tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)))


def sub(spec: FieldSpec, x: FieldElement, y: FieldElement) -> FieldElement:
    p = spec.p
    return FieldElement(spec, tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)))


def neg(spec: FieldSpec, x: FieldElement) -> FieldElement:
    p = spec.p
    return FieldElement(spec, tuple(-a % p for a in x.coeffs))


def mul(spec: FieldSpec, x: FieldElement, y: FieldElement) -> FieldElement:
    p, n, f = spec.p, spec.n, spec.modulus
    if n == 1:
        return FieldElement(spec, (x.coeffs[0] * y.coeffs[0] % p,))
    r = [0] * (2 * n - 1)
    for i, a in enumerate(x.coeffs):
        if a:
            for j, b in enumerate(y.coeffs):
                r[i + j] += a * b
    # reduce using t^n = -(f_0 + ... + f_{n-1} t^{n-1})
    for d in range(2 * n - 2, n - 1, -1):
        c = r[d] % p
        if c:
            base = d - n
            for i in range(n):
                r[base + i] -= c * f[i]
    return FieldElement(spec, tuple(c % p for c in r[:n]))


def inv(spec: FieldSpec, x: FieldElement) -> FieldElement:
    if not x:
        raise ZeroDivisionError("inverse of zero in GF(%d)" % spec.q)
    return power(spec, x, spec.q - 2)


def power(spec: FieldSpec, x: FieldElement, e: int) -> FieldElement:
    if e < 0:
        x, e = inv(spec, x), -e
    elif x:
        e %= spec.q - 1
    result = spec.one
    while e:
        if e & 1:
            result = mul(spec, result, x)
        x = mul(spec, x, x)
        e >>= 1
    return result


def element_order(spec: FieldSpec, x: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    if not x:
        raise FieldError("zero has no multiplicative order")
    order = spec.q - 1
    for r in set(spec._order_factors):
        while order % r == 0 and power(spec, x, order // r) == spec.one:
            order //= r
    return order


def is_primitive(spec: FieldSpec, x: FieldElement) -> bool:
    if not x:
        return False
    one = spec.one
    return all(power(spec, x, (spec.q - 1) // r) != one for r in set(spec._order_factors))


def chi(spec: FieldSpec, x: FieldElement) -> int:
    """Extended quadratic character: 0 at zero, +1 on squares, -1 otherwise."""
    if not x:
        return 0
    return 1 if power(spec, x, (spec.q - 1) // 2) == spec.one else -1


def subfield_chi(spec: FieldSpec, x: FieldElement, q: int) -> int:
    """Quadratic character of GF(q) applied to an element of the subfield GF(q).

    ``spec`` realizes an extension of GF(q); x must satisfy x^q = x.
    """
    if not x:
        return 0
    r = power(spec, x, (q - 1) // 2)
    if r == spec.one:
        return 1
    if r == -spec.one:
        return -1
    raise FieldError(f"element {x!r} is not in the subfield GF({q})")


def in_subfield(spec: FieldSpec, x: FieldElement, q: int) -> bool:
    return power(spec, x, q) == x if x else True


# -- construction ------------------------------------------------------------

def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree n, low coefficients first."""
    if n == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=n):
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {n} over GF({p})")  # pragma: no cover


def _least_primitive(spec: FieldSpec) -> tuple[int, ...]:
    for coords in itertools.product(range(spec.p), repeat=spec.n):
        x = FieldElement(spec, coords)
        if is_primitive(spec, x):
            return coords
    raise FieldError("no primitive element found")  # pragma: no cover


def make_field(p: int, n: int = 1, modulus: Sequence[int] | None = None,
               g: Sequence[int] | int | None = None) -> FieldSpec:
    """Build GF(p^n), verifying any supplied modulus and generator."""
    if not is_prime(p) or p == 2:
        raise FieldError(f"p={p} is not an odd prime")
    if n < 1:
        raise FieldError(f"degree n={n} must be at least 1")
    if p**n > MAX_ORDER:
        raise FieldError(f"field order {p}^{n} exceeds {MAX_ORDER}")
    if modulus is None:
        mod = canonical_modulus(p, n)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != n + 1 or mod[-1] != 1:
            raise FieldError(f"modulus {format_poly(mod)} is not monic of degree {n}")
        if not is_irreducible(mod, p):
            raise FieldError(f"modulus {format_poly(mod)} is reducible over GF({p})")
    spec = FieldSpec(p, n, mod, (0,) * n)
    if g is None:
        g_coeffs = _least_primitive(spec)
    else:
        g_el = spec.element(g)
        if not g_el:
            raise FieldError("generator must be nonzero")
        if not is_primitive(spec, g_el):
            raise FieldError(f"g={format_poly(g_el.coeffs)} is not primitive in GF({p**n})")
        g_coeffs = g_el.coeffs
    return FieldSpec(p, n, mod, g_coeffs)


def field_of_order(q: int) -> FieldSpec:
    """Canonical field of odd prime-power order q."""
    from .numtheory import is_prime_power

    pk = is_prime_power(q)
    if pk is None or q % 2 == 0:
        raise FieldError(f"q={q} is not an odd prime power")
    return make_field(*pk)
