"""Exact integer arithmetic helpers: primality, factorization, square tests.

Everything here is deterministic.  Factorization is trial division by a
precomputed prime table followed by Brent's variant of Pollard rho with
Miller-Rabin on the cofactors; discriminants of desk-scale coefficient boxes
stay far below sizes where this struggles.
"""

from __future__ import annotations

import math
from functools import lru_cache

_TRIAL_BOUND = 10_000

# Miller-Rabin with these bases is deterministic below 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


_SMALL_PRIMES = primes_up_to(_TRIAL_BOUND)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_BOUND:
        # fixed extra witnesses; the quantities handled here never get this big
        bases = _MR_BASES + tuple(range(41, 140, 2))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle finding)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = math.gcd(q, n)
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"pollard rho failed on {n}")


@lru_cache(maxsize=100_000)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| as sorted ((p, e), ...); n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return tuple(sorted(out.items()))


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_squarefull(n: int) -> bool:
    """True iff every prime dividing |n| does so with exponent >= 2 (|n| >= 1)."""
    return all(e >= 2 for _, e in factorize(n))


def radical(n: int) -> int:
    """Product of the distinct primes dividing |n|."""
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def omega(n: int) -> int:
    """Number of distinct prime divisors of |n|."""
    return len(factorize(n))


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
