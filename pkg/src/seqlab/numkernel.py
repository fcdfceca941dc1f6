"""Arbitrary-precision arithmetic primitives: primes, factorization, digits.

Everything here is pure and deterministic; values are plain Python ints
(unbounded), digit vectors are tuples ordered most-significant first.
"""

from __future__ import annotations

import random
from math import gcd, isqrt
from typing import Iterator, Sequence

__all__ = [
    "DETERMINISTIC_PRIMALITY_BOUND",
    "is_prime",
    "is_probable_only",
    "next_prime",
    "primes_up_to",
    "iter_primes",
    "factorize",
    "euler_totient",
    "reduced_residues",
    "to_digits",
    "from_digits",
    "digit_count",
    "render_digits",
    "factorial",
    "double_factorial",
    "kempner",
    "int_nthroot",
    "is_perfect_power",
    "is_perfect_power_any",
    "is_triangular",
    "distinct_permutations",
]

# Strong-pseudoprime witness sets (Sorenson & Webster): testing against the
# first 13 primes is a proof of primality for every n below this bound.
DETERMINISTIC_PRIMALITY_BOUND = 3317044064679887385961981
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_PROBABLE_ROUNDS = 64  # error probability < 4**-64 past the bound


def _miller_rabin(n: int, base: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test, exact below DETERMINISTIC_PRIMALITY_BOUND.

    Above the bound the answer is a strong probable-prime verdict with
    error probability below 4**-64; use is_probable_only() to see whether
    a given argument falls in that regime.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < DETERMINISTIC_PRIMALITY_BOUND:
        return all(_miller_rabin(n, a) for a in _DETERMINISTIC_WITNESSES)
    rng = random.Random(n)  # derived seed keeps the verdict reproducible
    return all(
        _miller_rabin(n, rng.randrange(2, n - 1)) for _ in range(_PROBABLE_ROUNDS)
    )


def is_probable_only(n: int) -> bool:
    """True when is_prime(n) is a probabilistic verdict rather than a proof."""
    return n >= DETERMINISTIC_PRIMALITY_BOUND


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    if k > 2 and k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 1 if k == 2 else 2
    return k


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, increasing (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i in range(2, limit + 1) if flags[i]]


def iter_primes() -> Iterator[int]:
    """Unbounded increasing prime stream."""
    yield 2
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def _pollard_brent(n: int, rng: random.Random) -> int:
    # Brent's cycle variant; n must be odd composite and not a prime power.
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
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


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, primes increasing.

    Empty list for n = 1; rejects n = 0.
    """
    if n <= 0:
        raise ValueError("factorize requires n >= 1")
    counts: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        rng = random.Random(n)
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                counts[m] = counts.get(m, 0) + 1
                continue
            root, exact = int_nthroot(m, 2)
            if exact:
                stack.extend((root, root))
                continue
            if m < 1 << 40:  # cheap trial division floor for small leftovers
                d = 49
                while d * d <= m:
                    if m % d == 0:
                        stack.extend((d, m // d))
                        break
                    d += 2
                else:
                    counts[m] = counts.get(m, 0) + 1
                continue
            d = _pollard_brent(m, rng)
            stack.extend((d, m // d))
    return sorted(counts.items())


def euler_totient(m: int) -> int:
    """Count of integers in [1, m] coprime to m."""
    if m <= 0:
        raise ValueError("euler_totient requires m >= 1")
    result = m
    for p, _ in factorize(m):
        result -= result // p
    return result


def reduced_residues(m: int) -> list[int]:
    """Increasing reduced residue system mod m: all 1 <= c <= m coprime to m."""
    if m < 2:
        raise ValueError("reduced_residues requires m >= 2")
    return [c for c in range(1, m + 1) if gcd(c, m) == 1]


def to_digits(n: int, base: int = 10) -> tuple[int, ...]:
    """Canonical base-`base` digits of n, most-significant first."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (0,)
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    return tuple(reversed(digits))


def from_digits(digits: Sequence[int], base: int = 10) -> int:
    """Value of a digit vector; leading zeros are accepted and ignored."""
    if base < 2:
        raise ValueError("base must be >= 2")
    value = 0
    for d in digits:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        value = value * base + d
    return value


def digit_count(n: int, base: int, digit: int) -> int:
    """Occurrences of `digit` in the canonical base-`base` form of n."""
    if not 0 <= digit < base:
        raise ValueError("digit out of range for base")
    return to_digits(n, base).count(digit)


def render_digits(digits: Sequence[int]) -> str:
    """Digit vector as text: joined when every digit is a single character,
    comma-separated otherwise."""
    if all(0 <= d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result


def double_factorial(n: int) -> int:
    """Product of positive integers <= n with the parity of n; 0!! = 1."""
    if n < 0:
        raise ValueError("double_factorial requires n >= 0")
    result = 1
    for k in range(n, 1, -2):
        result *= k
    return result


def kempner(n: int) -> int:
    """Smallest k >= 1 such that n divides k!."""
    if n <= 0:
        raise ValueError("kempner requires n >= 1")
    if n == 1:
        return 1
    residue = 1 % n
    k = 1
    while residue != 0:
        k += 1
        residue = residue * k % n
    return k


def int_nthroot(n: int, m: int) -> tuple[int, bool]:
    """(floor(n ** (1/m)), exactness flag) for n >= 0, m >= 1."""
    if n < 0 or m < 1:
        raise ValueError("int_nthroot requires n >= 0 and m >= 1")
    if n in (0, 1) or m == 1:
        return n, True
    if m == 2:
        r = isqrt(n)
        return r, r * r == n
    if m >= n.bit_length():  # 2**m > n, so the root is 1
        return 1, False
    x = 1 << (n.bit_length() + m - 1) // m  # upper start for Newton descent
    while True:
        y = ((m - 1) * x + n // x ** (m - 1)) // m
        if y >= x:
            break
        x = y
    return x, x ** m == n


def is_perfect_power(n: int, m: int) -> bool:
    """True when n = j**m for some integer j >= 0."""
    if m < 2:
        raise ValueError("is_perfect_power requires m >= 2")
    if n < 0:
        return False
    return int_nthroot(n, m)[1]


def is_perfect_power_any(n: int) -> bool:
    """True when n = j**k for some j >= 1, k >= 2 (1 counts: 1 = 1**2)."""
    if n < 1:
        return False
    if n == 1:
        return True
    return any(int_nthroot(n, m)[1] for m in range(2, n.bit_length() + 1))


def is_triangular(n: int) -> bool:
    """True when n = k(k+1)/2 for some k >= 0."""
    if n < 0:
        return False
    _, exact = int_nthroot(8 * n + 1, 2)
    return exact


def distinct_permutations(digits: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every distinct rearrangement of a digit multiset, each exactly once.

    Leading zeros are allowed in the output; the count is the multinomial
    coefficient len! / prod(multiplicity!).
    """
    pool = sorted(digits)
    n = len(pool)
    if n == 0:
        return
    counts: dict[int, int] = {}
    for d in pool:
        counts[d] = counts.get(d, 0) + 1
    keys = sorted(counts)
    current: list[int] = []

    def emit() -> Iterator[tuple[int, ...]]:
        if len(current) == n:
            yield tuple(current)
            return
        for d in keys:
            if counts[d]:
                counts[d] -= 1
                current.append(d)
                yield from emit()
                current.pop()
                counts[d] += 1

    yield from emit()
