"""Independent checks: exhaustive search, prime census, coverage of even lengths.

The exhaustive search computes correlations straight from the definition
inside its own kernel and never calls :func:`sequences.is_legendre_pair`,
so the two can be compared against each other.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from . import _backend
from .field import FieldSpec
from .numtheory import is_prime, is_prime_power, partner_primes
from .sequences import BINARY, QUATERNARY, Sequence

__all__ = [
    "BruteForceResult",
    "CoverageReport",
    "LITERATURE_LENGTHS",
    "brute_force_legendre",
    "character_laws",
    "count_partner_primes",
    "coverage_report",
    "is_prime_power",
]

# largest enumerable lengths: 4^(2N) resp. 2^(2N) candidate pairs
MAX_LENGTH = {QUATERNARY: 6, BINARY: 12}

LITERATURE_LENGTHS = (16, 22, 28, 32, 34)
LITERATURE_CITATION = "Kotsireas-Winterhof 2024; Kotsireas-Koutschan-Winterhof 2024"


@dataclass(frozen=True)
class BruteForceResult:
    length: int
    alphabet: str
    count: int
    candidates: int
    exemplar_indices: tuple[tuple[int, int], ...]

    @property
    def exemplars(self) -> list[tuple[Sequence, Sequence]]:
        return [(decode(ia, self.length, self.alphabet), decode(ib, self.length, self.alphabet))
                for ia, ib in self.exemplar_indices]


def decode(index: int, n: int, alphabet: str) -> Sequence:
    """Candidate index -> sequence; entry 0 is the most significant digit."""
    base = 4 if alphabet == QUATERNARY else 2
    digits = []
    for _ in range(n):
        index, d = divmod(index, base)
        digits.append(d)
    digits.reverse()
    if base == 4:
        return Sequence.from_exponents(digits)
    return Sequence([1 - 2 * d for d in digits], BINARY)


def encode(a: Sequence, alphabet: str) -> int:
    if alphabet == QUATERNARY:
        digits = a.exponents
        base = 4
    else:
        if not a.is_binary:
            raise ValueError("not a binary sequence")
        digits = [(1 - r) // 2 for r in a.re]
        base = 2
    idx = 0
    for d in digits:
        idx = idx * base + d
    return idx


def _chunk(args):
    n, base, start, stop, cap = args
    return _backend.brute_force_range(n, base, start, stop, cap)


def brute_force_legendre(n: int, alphabet: str = QUATERNARY, workers: int | None = None,
                         max_exemplars: int | None = None) -> BruteForceResult:
    """Count every ordered Legendre pair of length n over the alphabet.

    Work is split by ranges of the first sequence's index; with more than
    one worker the ranges run in separate processes.  Results are merged
    in index order so the output never depends on scheduling.
    """
    if alphabet not in MAX_LENGTH:
        raise ValueError(f"alphabet must be binary or quaternary, got {alphabet!r}")
    if not 1 <= n <= MAX_LENGTH[alphabet]:
        raise ValueError(f"length {n} is not enumerable for {alphabet} (max {MAX_LENGTH[alphabet]})")
    base = 4 if alphabet == QUATERNARY else 2
    total = base**n
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, min(workers, total))
    bounds = [total * i // workers for i in range(workers + 1)]
    jobs = [(n, base, lo, hi, max_exemplars) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    if len(jobs) == 1:
        results = [_chunk(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            results = list(pool.map(_chunk, jobs))
    count = sum(c for c, _ in results)
    exemplars = sorted(e for _, ex in results for e in ex)
    if max_exemplars is not None:
        exemplars = exemplars[:max_exemplars]
    return BruteForceResult(n, alphabet, count, total * total, tuple(exemplars))


def count_partner_primes(limit: int) -> int:
    """Number of primes p <= limit with 2p - 1 a prime power."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    return len(partner_primes(limit))


# -- coverage ----------------------------------------------------------------

@dataclass(frozen=True)
class Status:
    kind: str  # thm1 | thm2 | literature | open
    param: int | str | None = None

    def __str__(self):
        if self.kind == "thm1":
            return f"thm1(q={self.param})"
        if self.kind == "thm2":
            return f"thm2(p={self.param})"
        if self.kind == "literature":
            return "literature"
        return "open"


@dataclass(frozen=True)
class CoverageReport:
    limit: int
    statuses: dict[int, tuple[Status, ...]] = field(default_factory=dict)

    def lengths(self, kind: str) -> list[int]:
        return [n for n, ss in sorted(self.statuses.items()) if any(s.kind == kind for s in ss)]

    @property
    def open(self) -> list[int]:
        return self.lengths("open")

    def to_json(self) -> dict:
        return {
            "limit": self.limit,
            "lengths": [
                {"length": n, "status": [{"kind": s.kind, "param": s.param} for s in ss]}
                for n, ss in sorted(self.statuses.items())
            ],
            "open": self.open,
        }

    def render(self) -> str:
        lines = [f"{'length':>6}  {'status':<11} parameter"]
        for n, ss in sorted(self.statuses.items()):
            for s in ss:
                param = "" if s.param is None else (f"q={s.param}" if s.kind == "thm1" else
                                                    f"p={s.param}" if s.kind == "thm2" else s.param)
                lines.append(f"{n:>6}  {s.kind:<11} {param}".rstrip())
        lines.append("open: " + ", ".join(map(str, self.open)))
        return "\n".join(lines)


def coverage_report(limit: int) -> CoverageReport:
    """Which construction (if any) yields a pair of each even length <= limit."""
    if limit < 2 or limit % 2:
        raise ValueError(f"limit must be an even integer >= 2, got {limit}")
    statuses = {}
    for n in range(2, limit + 1, 2):
        ss = []
        q = 2 * n + 1
        if is_prime_power(q):  # n even forces q = 1 mod 4
            ss.append(Status("thm1", q))
        p = n // 2
        # p = 2 is listed too (length 4), matching the published catalog and census
        if is_prime(p) and is_prime_power(2 * p - 1):
            ss.append(Status("thm2", p))
        if n in LITERATURE_LENGTHS:
            ss.append(Status("literature", LITERATURE_CITATION))
        statuses[n] = tuple(ss) or (Status("open"),)
    return CoverageReport(limit, statuses)


# -- character laws ------------------------------------------------------------

def character_laws(spec: FieldSpec) -> dict[str, bool]:
    """Exhaustively test the three standard identities of chi on one field.

    total: sum of chi over the field is 0.
    shift: sum_h chi(h) chi(h + d) = -1 for every nonzero d.
    minus_one: chi(-1) = (-1)^((q-1)/2).
    """
    table = spec.chi_table
    sums = _backend.chi_shift_sums(table, spec.p, spec.n)
    minus_one = table[(-spec.one).code]
    return {
        "total": sum(table) == 0,
        "shift": all(s == -1 for s in sums[1:]),
        "minus_one": minus_one == (-1) ** ((spec.q - 1) // 2),
    }


def iter_odd_prime_powers(lo: int, hi: int) -> Iterable[int]:
    for q in range(lo | 1, hi + 1, 2):
        if is_prime_power(q):
            yield q
