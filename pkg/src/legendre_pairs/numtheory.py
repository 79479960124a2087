"""Small integer helpers: primality, factoring, prime-power detection."""

from __future__ import annotations

from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> list[int]:
    """Prime factors of n with multiplicity, ascending."""
    out = []
    while n % 2 == 0 and n > 1:
        out.append(2)
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            out.append(f)
            n //= f
        f += 2
    if n > 1:
        out.append(n)
    return out


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) computed exactly."""
    if k == 1 or n < 2:
        return n
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p^k and p prime, or None."""
    if n < 2:
        return None
    for k in range(n.bit_length(), 0, -1):
        r = integer_root(n, k)
        if r >= 2 and r**k == n and is_prime(r):
            return r, k
    return None


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


def partner_primes(limit: int) -> list[int]:
    """Primes p <= limit for which 2p - 1 is a prime power."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (2 * limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(2 * limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, 2 * limit + 1, i)))

    def prime_power(m):
        if sieve[m]:
            return True
        for k in range(2, m.bit_length() + 1):
            r = integer_root(m, k)
            if r < 2:
                break
            if r**k == m and sieve[r]:
                return True
        return False

    return [p for p in range(2, limit + 1) if sieve[p] and prime_power(2 * p - 1)]
