"""Integer predicates and sequences: primality, factorization, divisor sums,
primitive roots, Fermat/Pierpont-style primes, smooth and double-smooth sets.

A smallest-prime-factor sieve up to 2^20 is built lazily once and then read
only; everything else is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, log

import numpy as np

SIEVE_LIMIT = 1 << 20

_spf: np.ndarray | None = None
_sieve_primes: np.ndarray | None = None


def _sieve() -> np.ndarray:
    global _spf, _sieve_primes
    if _spf is None:
        spf = np.zeros(SIEVE_LIMIT, dtype=np.int32)
        for p in range(2, isqrt(SIEVE_LIMIT - 1) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        spf[0] = spf[1] = -1
        mask = spf == 0
        mask[0] = mask[1] = False
        _sieve_primes = np.nonzero(mask)[0].astype(np.int64)
        _spf = spf
    return _spf


def sieve_primes() -> np.ndarray:
    """All primes below 2^20, ascending (read-only view)."""
    _sieve()
    return _sieve_primes


def primes_up_to(limit: int) -> np.ndarray:
    """Ascending array of primes <= limit (plain Boolean sieve)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def first_primes(k: int) -> np.ndarray:
    """The first k primes."""
    if k < 1:
        return np.empty(0, dtype=np.int64)
    if k < 6:
        return np.array([2, 3, 5, 7, 11][:k], dtype=np.int64)
    # p_k < k (ln k + ln ln k) for k >= 6
    bound = int(k * (log(k) + log(log(k)))) + 10
    ps = primes_up_to(bound)
    while len(ps) < k:
        bound *= 2
        ps = primes_up_to(bound)
    return ps[:k]


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n: int) -> bool:
    # deterministic for n < 3.3e24 with this witness set
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test; n=1 is not prime."""
    if n < 1:
        raise ValueError("is_prime expects a positive integer")
    if n < SIEVE_LIMIT:
        return bool(_sieve()[n] == 0) and n >= 2
    if n % 2 == 0:
        return False
    return _miller_rabin(n)


def _rho_split(n: int) -> int:
    # Brent's cycle variant; n odd composite, no factor below the sieve
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


@dataclass(frozen=True)
class PrimeFactorization:
    """n together with its sorted (prime, exponent) pairs; n=1 has no factors."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factorize(n: int) -> PrimeFactorization:
    """Full prime factorization; sieve walk below 2^20, trial division and a
    rho fallback above."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    orig = n
    counts: dict[int, int] = {}

    def add(p: int, e: int = 1) -> None:
        counts[p] = counts.get(p, 0) + e

    spf = _sieve()
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < SIEVE_LIMIT:
            while m > 1:
                p = int(spf[m])
                if p <= 0:
                    p = m
                while m % p == 0:
                    m //= p
                    add(p)
            continue
        divided = False
        for p in _sieve_primes:
            p = int(p)
            if p * p > m:
                break
            if m % p == 0:
                while m % p == 0:
                    m //= p
                    add(p)
                divided = True
        if m == 1:
            continue
        if divided:
            stack.append(m)
        elif m < SIEVE_LIMIT * SIEVE_LIMIT or _miller_rabin(m):
            # no factor below 2^20, so below 2^40 it must be prime
            add(m)
        else:
            d = _rho_split(m)
            stack.append(d)
            stack.append(m // d)
    return PrimeFactorization(orig, tuple(sorted(counts.items())))


@lru_cache(maxsize=4096)
def _distinct_prime_factors(n: int) -> tuple[int, ...]:
    return factorize(n).primes()


def euler_phi(n: int) -> int:
    """Euler totient via the product formula."""
    out = n
    for p in _distinct_prime_factors(n):
        out -= out // p
    return out


def proper_divisor_sum(x: int) -> int:
    """Sum of divisors d of x with 1 <= d < x; 0 for x in {0, 1}."""
    if x < 0:
        raise ValueError("proper_divisor_sum expects a nonnegative integer")
    if x <= 1:
        return 0
    total = 1
    for p, e in factorize(x).factors:
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total - x


def proper_divisor_sums_upto(limit: int) -> np.ndarray:
    """Table s[x] = proper_divisor_sum(x) for 0 <= x < limit."""
    s = np.zeros(limit, dtype=np.int64)
    for d in range(1, limit // 2 + 1):
        s[2 * d :: d] += d
    return s


def is_primitive_root(a: int, p: int) -> bool:
    """True iff a generates the multiplicative group mod prime p.

    Uses order-divisibility checks against the prime factors of p-1 instead
    of computing the full order.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a %= p
    if a == 0:
        raise ValueError("a must be nonzero mod p")
    m = p - 1
    for q in _distinct_prime_factors(m) if m > 1 else ():
        if pow(a, m // q, p) == 1:
            return False
    return True


def is_fermat_prime(n: int) -> bool:
    """True iff n is prime and n-1 = 2^(2^k) for some k >= 0."""
    if n < 1:
        raise ValueError("is_fermat_prime expects a positive integer")
    m = n - 1
    if m < 2 or m & (m - 1):
        return False
    e = m.bit_length() - 1  # m = 2^e
    if e & (e - 1):
        return False
    return is_prime(n)


def is_smooth(n: int, primes: frozenset[int] | set[int]) -> bool:
    """True iff every prime factor of n lies in the given set (1 is smooth)."""
    if n < 1:
        raise ValueError("is_smooth expects a positive integer")
    for p in _distinct_prime_factors(n):
        if p not in primes:
            return False
    return True


def is_one_plus_smooth_prime(n: int, primes: frozenset[int] | set[int]) -> bool:
    """True iff n is prime and n-1 is smooth over the given prime set."""
    if not primes:
        raise ValueError("prime set must be nonempty")
    return is_prime(n) and is_smooth(n - 1, primes)


@dataclass(frozen=True)
class SmoothSet:
    """Sorted members <= limit whose prime factors all lie in base_primes."""

    base_primes: frozenset[int]
    limit: int
    members: tuple[int, ...]

    def __contains__(self, n: int) -> bool:
        return n in set(self.members)


def smooth_set(primes: set[int] | frozenset[int], limit: int) -> SmoothSet:
    """All products of powers of the given primes up to limit, including 1."""
    if not primes:
        raise ValueError("prime set must be nonempty")
    if limit < 1:
        raise ValueError("limit must be positive")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for p in primes:
            w = v * p
            if w <= limit and w not in seen:
                seen.add(w)
                stack.append(w)
    return SmoothSet(frozenset(primes), limit, tuple(sorted(seen)))


def double_smooth_set(primes: set[int] | frozenset[int], limit: int) -> SmoothSet:
    """The smooth members and their doubles, truncated at limit."""
    base = smooth_set(primes, limit)
    out = set(base.members)
    for v in base.members:
        if 2 * v <= limit:
            out.add(2 * v)
    return SmoothSet(base.base_primes, limit, tuple(sorted(out)))
