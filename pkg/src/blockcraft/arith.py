"""Exact integer arithmetic helpers: valuations, primes, orders, Moebius.

Everything works on plain Python ints (arbitrary precision) and is sized for
desk-scale inputs; no probabilistic methods, no floating point.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt


def nu(n: int, p: int) -> int:
    """p-adic valuation of the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    if p < 2:
        raise ValueError("p must be at least 2")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def nu_factorial(n: int, p: int) -> int:
    """nu_p(n!) by Legendre's formula, without forming the factorial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = 0
    q = p
    while q <= n:
        v += n // q
        q *= p
    return v


def p_part(n: int, p: int) -> int:
    return p ** nu(n, p)


def p_prime_part(n: int, p: int) -> int:
    return n // p_part(n, p)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) with p increasing."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, increasing."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return tuple(sorted(out))


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def multiplicative_order(a: int, m: int) -> int:
    """Order of a modulo m; requires gcd(a, m) = 1."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    a %= m
    x = a
    order = 1
    while x != 1:
        x = x * a % m
        order += 1
        if order > m:
            raise ValueError(f"{a} is not invertible modulo {m}")
    return order


def primitive_root(p: int) -> int:
    """Smallest generator of the cyclic group (Z/pZ)^x for a prime p."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    if p == 2:
        return 1
    prime_factors = [q for q, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def prime_power_radical(q: int) -> int:
    """The prime p with q = p^f, or raise if q is not a prime power."""
    if q < 2:
        raise ValueError("q must be at least 2")
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            if q != 1:
                raise ValueError("q is not a prime power")
            return p
    return q  # q itself is prime
