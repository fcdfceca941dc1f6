"""Pointwise arithmetic functions: complements, quotients, residues,
exponents, primitive numbers, prime parts and the residual product."""

from __future__ import annotations

from .numkernel import (
    factorize,
    is_prime,
    kempner,
    reduced_residues,
)

__all__ = [
    "mpower_complement",
    "factorial_quotient",
    "double_factorial_complement",
    "prime_complement",
    "double_factorial_number",
    "prime_part",
    "primitive_of_power",
    "mpower_residue",
    "exponent_of_power",
    "residual_function",
    "residual_sequence",
]


def mpower_complement(n: int, m: int) -> int:
    """Smallest k >= 1 with n*k a perfect m-th power; k is m-power free."""
    if n < 1:
        raise ValueError("mpower_complement requires n >= 1")
    if m < 2:
        raise ValueError("mpower_complement requires m >= 2")
    k = 1
    for p, e in factorize(n):
        k *= p ** ((m - e % m) % m)
    return k


def factorial_quotient(n: int) -> int:
    """Smallest k with n*k = j! for some j >= 1."""
    if n < 1:
        raise ValueError("factorial_quotient requires n >= 1")
    j = kempner(n)
    f = 1
    for i in range(2, j + 1):
        f *= i
    return f // n


def _smallest_double_factorial_index(n: int) -> int:
    # Smallest j with n | j!!, tracking both parity chains modulo n.
    residues = [1 % n, 1 % n]  # indexed by j % 2
    j = 0
    while True:
        j += 1
        residues[j % 2] = residues[j % 2] * j % n
        if residues[j % 2] == 0:
            return j


def double_factorial_complement(n: int) -> int:
    """Smallest k >= 1 with n*k equal to some double factorial j!!."""
    if n < 1:
        raise ValueError("double_factorial_complement requires n >= 1")
    j = _smallest_double_factorial_index(n)
    value = 1
    for i in range(j, 1, -2):
        value *= i
    return value // n


def prime_complement(n: int) -> int:
    """Smallest k >= 0 with n + k prime."""
    if n < 1:
        raise ValueError("prime_complement requires n >= 1")
    k = 0
    while not is_prime(n + k):
        k += 1
    return k


def double_factorial_number(n: int) -> int:
    """Smallest k >= 1 with n dividing k!! (either parity)."""
    if n < 1:
        raise ValueError("double_factorial_number requires n >= 1")
    return _smallest_double_factorial_index(n)


def prime_part(n: int, mode: str) -> int:
    """Nearest prime at-or-below ('inferior') or at-or-above ('superior') n."""
    if mode == "inferior":
        if n < 2:
            raise ValueError("no prime lies at or below n < 2")
        k = n
        while not is_prime(k):
            k -= 1
        return k
    if mode == "superior":
        if n < 0:
            raise ValueError("prime_part requires n >= 0")
        k = max(n, 2)
        while not is_prime(k):
            k += 1
        return k
    raise ValueError("mode must be 'inferior' or 'superior'")


def _prime_valuation_of_factorial(k: int, p: int) -> int:
    # Legendre: v_p(k!) = sum_i floor(k / p^i)
    total = 0
    q = p
    while q <= k:
        total += k // q
        q *= p
    return total


def primitive_of_power(p: int, n: int) -> int:
    """Smallest k with p**n dividing k!, for prime p; always a multiple of p."""
    if not is_prime(p):
        raise ValueError("primitive_of_power requires a prime p")
    if n < 1:
        raise ValueError("primitive_of_power requires n >= 1")
    lo, hi = 1, p * n
    while lo < hi:
        mid = (lo + hi) // 2
        if _prime_valuation_of_factorial(mid, p) >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def mpower_residue(n: int, m: int) -> int:
    """Largest m-power-free divisor of n: exponents clipped to m - 1."""
    if n < 1:
        raise ValueError("mpower_residue requires n >= 1")
    if m < 2:
        raise ValueError("mpower_residue requires m >= 2")
    result = 1
    for p, e in factorize(n):
        result *= p ** min(m - 1, e)
    return result


def exponent_of_power(n: int, p: int) -> int:
    """Largest k with p**k dividing n; p may be any integer >= 2."""
    if n < 1:
        raise ValueError("exponent_of_power requires n >= 1")
    if p < 2:
        raise ValueError("exponent_of_power requires p >= 2")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def residual_function(x: int, m: int) -> int:
    """Product of (x + c) over the reduced residue system c of m."""
    if m < 2:
        raise ValueError("residual_function requires m >= 2")
    product = 1
    for c in reduced_residues(m):
        product *= x + c
    return product


def residual_sequence(m: int) -> int:
    """Product of the reduced residues of m (the x = 0 case)."""
    return residual_function(0, m)
