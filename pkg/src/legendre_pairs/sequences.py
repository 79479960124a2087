"""Sequences over {+-1}, {0, +-1}, {+-1, +-i} and their periodic correlations.

All arithmetic is over the Gaussian integers; nothing is ever rounded.
Text form uses one glyph per entry: ``+`` 1, ``-`` -1, ``i`` i, ``j`` -i,
``0`` zero, optionally wrapped in parentheses as in published tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import _backend

BINARY = "binary"
TERNARY = "ternary"
QUATERNARY = "quaternary"

_ALPHABETS = {
    BINARY: {(1, 0), (-1, 0)},
    TERNARY: {(1, 0), (0, 0), (-1, 0)},
    QUATERNARY: {(1, 0), (0, 1), (-1, 0), (0, -1)},
}

GLYPHS = {"+": (1, 0), "-": (-1, 0), "i": (0, 1), "j": (0, -1), "0": (0, 0)}
_GLYPH_OF = {v: k for k, v in GLYPHS.items()}


class GaussianInt(NamedTuple):
    """Exact complex integer re + im*i."""

    re: int
    im: int = 0

    @classmethod
    def of(cls, value) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, complex):
            re, im = int(value.real), int(value.imag)
            if re != value.real or im != value.imag:
                raise ValueError(f"{value!r} is not a Gaussian integer")
            return cls(re, im)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(int(value[0]), int(value[1]))
        return cls(int(value), 0)

    def __add__(self, other):
        o = GaussianInt.of(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianInt.of(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInt.of(other) - self

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussianInt.of(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def __eq__(self, other):
        try:
            o = GaussianInt.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"

    __repr__ = __str__


I = GaussianInt(0, 1)


class AlphabetError(ValueError):
    pass


def _infer_alphabet(pairs: Iterable[tuple[int, int]]) -> str:
    vals = set(pairs)
    for name in (BINARY, TERNARY, QUATERNARY):
        if vals <= _ALPHABETS[name]:
            return name
    raise AlphabetError(f"entries {sorted(vals)} fit no supported alphabet")


@dataclass(frozen=True, init=False)
class Sequence:
    """An immutable finite sequence with entries stored as exact (re, im) parts.

    The alphabet is inferred as the smallest of binary, ternary, quaternary
    containing every entry unless given explicitly.  Binary sequences are
    also valid wherever ternary or quaternary input is accepted.
    """

    re: tuple[int, ...]
    im: tuple[int, ...]
    alphabet: str

    def __init__(self, entries, alphabet: str | None = None):
        pts = [tuple(GaussianInt.of(e)) for e in entries]
        if not pts:
            raise ValueError("sequence must have length at least 1")
        inferred = _infer_alphabet(pts)
        if alphabet is None:
            alphabet = inferred
        elif alphabet not in _ALPHABETS:
            raise AlphabetError(f"unknown alphabet {alphabet!r}")
        elif not set(pts) <= _ALPHABETS[alphabet]:
            raise AlphabetError(f"entries do not lie in the {alphabet} alphabet")
        object.__setattr__(self, "re", tuple(r for r, _ in pts))
        object.__setattr__(self, "im", tuple(i for _, i in pts))
        object.__setattr__(self, "alphabet", alphabet)

    # equality ignores the declared alphabet: entries decide
    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __len__(self):
        return len(self.re)

    def __getitem__(self, k) -> GaussianInt:
        return GaussianInt(self.re[k], self.im[k])

    def __iter__(self):
        return (GaussianInt(r, i) for r, i in zip(self.re, self.im))

    @property
    def entries(self) -> tuple[GaussianInt, ...]:
        return tuple(self)

    @property
    def exponents(self) -> tuple[int, ...]:
        """Exponents e with entry = i**e; only for unimodular sequences."""
        table = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}
        try:
            return tuple(table[p] for p in zip(self.re, self.im))
        except KeyError:
            raise AlphabetError("sequence has zero entries") from None

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> Sequence:
        return cls([I_POWERS[e % 4] for e in exps])

    @property
    def is_binary(self) -> bool:
        return all(i == 0 for i in self.im) and all(r != 0 for r in self.re)

    @property
    def is_unimodular(self) -> bool:
        return all((r != 0) != (i != 0) for r, i in zip(self.re, self.im))

    def shift(self, s: int) -> Sequence:
        n = len(self)
        s %= n
        return Sequence(list(self)[s:] + list(self)[:s])

    def __str__(self):
        return "(" + to_text(self) + ")"

    def __repr__(self):
        return f"Sequence({self})"


I_POWERS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


def seq(text_or_entries, alphabet: str | None = None) -> Sequence:
    """Build a sequence from glyph text like "(i-+j)" or from entries."""
    if isinstance(text_or_entries, str):
        return from_text(text_or_entries, alphabet)
    return Sequence(text_or_entries, alphabet)


# -- text / JSON ---------------------------------------------------------------

def to_text(a: Sequence) -> str:
    return "".join(_GLYPH_OF[p] for p in zip(a.re, a.im))


def from_text(text: str, alphabet: str | None = None) -> Sequence:
    body = "".join(text.split())
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    entries = []
    for pos, ch in enumerate(body):
        if ch not in GLYPHS:
            raise AlphabetError(f"unknown glyph {ch!r} at position {pos}")
        entries.append(GLYPHS[ch])
    return Sequence(entries, alphabet)


def to_json(a: Sequence) -> dict:
    return {"alphabet": a.alphabet, "entries": [[r, i] for r, i in zip(a.re, a.im)]}


def from_json(obj) -> Sequence:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Sequence([tuple(e) for e in obj["entries"]], obj.get("alphabet"))


# -- correlations --------------------------------------------------------------

def _check_lengths(*seqs: Sequence) -> int:
    n = len(seqs[0])
    if any(len(s) != n for s in seqs[1:]):
        raise ValueError("sequences must have equal length, got " + ", ".join(str(len(s)) for s in seqs))
    return n


def cross_spectrum(a: Sequence, b: Sequence) -> list[GaussianInt]:
    """R_{a,b}(u) = sum_k a_k conj(b_{k+u}) for u = 0..N-1."""
    _check_lengths(a, b)
    re, im = _backend.correlation(a.re, a.im, b.re, b.im)
    return [GaussianInt(r, i) for r, i in zip(re, im)]


def cross_correlation(a: Sequence, b: Sequence, u: int) -> GaussianInt:
    n = _check_lengths(a, b)
    if not 0 <= u < n:
        raise ValueError(f"shift {u} outside [0, {n})")
    sr = si = 0
    for k in range(n):
        m = (k + u) % n
        sr += a.re[k] * b.re[m] + a.im[k] * b.im[m]
        si += a.im[k] * b.re[m] - a.re[k] * b.im[m]
    return GaussianInt(sr, si)


def autocorrelation_spectrum(a: Sequence) -> list[GaussianInt]:
    return cross_spectrum(a, a)


def is_symmetric(a: Sequence) -> bool:
    n = len(a)
    return all(a[k] == a[n - k] for k in range(1, n))


def summed_spectrum(*seqs: Sequence) -> list[GaussianInt]:
    _check_lengths(*seqs)
    total = [GaussianInt(0, 0)] * len(seqs[0])
    for s in seqs:
        total = [x + y for x, y in zip(total, autocorrelation_spectrum(s))]
    return total


def is_complementary(a: Sequence, b: Sequence) -> bool:
    return all(v == 0 for v in summed_spectrum(a, b)[1:])


@dataclass(frozen=True)
class PairReport:
    ok: bool
    violations: tuple[tuple[int, GaussianInt], ...]
    spectrum: tuple[GaussianInt, ...]

    def __bool__(self):
        return self.ok


def is_legendre_pair(a: Sequence, b: Sequence) -> PairReport:
    """Check R_a(u) + R_b(u) = -2 at every nonzero shift."""
    _check_lengths(a, b)
    for s in (a, b):
        if not s.is_unimodular:
            raise AlphabetError("Legendre pairs need quaternary-compatible sequences")
    spec = summed_spectrum(a, b)
    target = GaussianInt(-2, 0)
    bad = tuple((u, v) for u, v in enumerate(spec) if u and v != target)
    return PairReport(not bad, bad, tuple(spec))


def is_amicable_set(w: Sequence, x: Sequence, y: Sequence, z: Sequence) -> bool:
    """R_{w,x} + R_{y,z} = R_{x,w} + R_{z,y} at every nonzero shift."""
    _check_lengths(w, x, y, z)
    lhs = [p + q for p, q in zip(cross_spectrum(w, x), cross_spectrum(y, z))]
    rhs = [p + q for p, q in zip(cross_spectrum(x, w), cross_spectrum(z, y))]
    return lhs[1:] == rhs[1:]


def pair_sums(a: Sequence, b: Sequence) -> tuple[GaussianInt, GaussianInt]:
    _check_lengths(a, b)
    return GaussianInt(sum(a.re), sum(a.im)), GaussianInt(sum(b.re), sum(b.im))


# -- Gray map --------------------------------------------------------------------

def gray_combine(w: Sequence, x: Sequence) -> Sequence:
    """Entrywise (1+i)/2 * w_k + (1-i)/2 * x_k, a quaternary sequence."""
    _check_lengths(w, x)
    if not (w.is_binary and x.is_binary):
        raise AlphabetError("gray_combine needs two binary sequences")
    # (1+i)w/2 + (1-i)x/2 = (w+x)/2 + i(w-x)/2; w, x odd so both halves are integral
    return Sequence([((wk + xk) // 2, (wk - xk) // 2) for wk, xk in zip(w.re, x.re)], QUATERNARY)


def gray_split(a: Sequence) -> tuple[Sequence, Sequence]:
    """Inverse of :func:`gray_combine`: w_k = re + im, x_k = re - im."""
    if not a.is_unimodular:
        raise AlphabetError("gray_split needs a quaternary sequence")
    w = [r + i for r, i in zip(a.re, a.im)]
    x = [r - i for r, i in zip(a.re, a.im)]
    return Sequence(w, BINARY), Sequence(x, BINARY)
