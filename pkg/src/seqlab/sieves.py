"""Deletion sieves: power-free, perfect-power, odd, n-ary and staged sieves."""

from __future__ import annotations

from typing import Callable, Iterable

from .numkernel import primes_up_to

__all__ = [
    "mpower_free",
    "irrational_root_sieve",
    "odd_sieve",
    "nary_sieve",
    "consecutive_sieve",
    "general_sequence_sieve",
]


def mpower_free(m: int, limit: int) -> list[int]:
    """All n in [2, limit] not divisible by p**m for any prime p.

    m = 2 gives the squarefree numbers, m = 3 the cubefree numbers.
    """
    if m < 2:
        raise ValueError("mpower_free requires m >= 2")
    if limit < 2:
        return []
    removed = bytearray(limit + 1)
    for p in primes_up_to(_int_root(limit, m)):
        step = p**m
        for k in range(step, limit + 1, step):
            removed[k] = 1
    return [n for n in range(2, limit + 1) if not removed[n]]


def _int_root(n: int, m: int) -> int:
    r = round(n ** (1.0 / m))
    while r**m > n:
        r -= 1
    while (r + 1) ** m <= n:
        r += 1
    return r


def irrational_root_sieve(limit: int) -> list[int]:
    """All n in [2, limit] that are not perfect powers j**k with k >= 2,
    i.e. those whose every m-th root (m >= 2) is irrational."""
    if limit < 2:
        return []
    removed = bytearray(limit + 1)
    for j in range(2, _int_root(limit, 2) + 1):
        v = j * j
        while v <= limit:
            removed[v] = 1
            v *= j
    return [n for n in range(2, limit + 1) if not removed[n]]


def odd_sieve(limit: int) -> list[int]:
    """Odd numbers <= limit that are not a prime minus 2.

    Built by the subtraction procedure: drop 2 from every prime, then keep
    the odd numbers missing from that set (equivalently, odd n with n + 2
    composite).
    """
    if limit < 1:
        return []
    lowered = set()
    for p in primes_up_to(limit + 2):
        lowered.add(p - 2)
    return [n for n in range(1, limit + 1, 2) if n not in lowered]


def nary_sieve(n: int, limit: int) -> list[int]:
    """Survivors of the iterated deletion sieve with ratio n.

    Step k removes every (n**k)-th element of the current remaining list,
    counting from position 1 at every step; steps stop once n**k exceeds
    the remaining count.
    """
    if n < 2:
        raise ValueError("nary_sieve requires n >= 2")
    remaining = list(range(1, limit + 1))
    step = n
    while step <= len(remaining):
        remaining = [v for i, v in enumerate(remaining, start=1) if i % step != 0]
        step *= n
    return remaining


def consecutive_sieve(
    limit: int, delete_position: Callable[[int], int] | None = None
) -> list[int]:
    """Survivors of the staged sieve with stage periods 2, 3, 4, ...

    At stage k the first k - 1 survivors are already fixed; the remaining
    tail is cut into consecutive k-blocks and one element of each block is
    deleted.  The default deletes position k - 1 (1-indexed) of every
    block, the convention that reproduces the listing this sieve is
    defined by.  `delete_position(k)` may pick a different position (the
    kept element of each block is otherwise the first remaining one).
    """
    return general_sequence_sieve(
        _count_from(2), limit, delete_position=delete_position
    )


def _count_from(start: int) -> Iterable[int]:
    k = start
    while True:
        yield k
        k += 1


def general_sequence_sieve(
    periods: Iterable[int],
    limit: int,
    *,
    count_from_head: bool = False,
    delete_position: Callable[[int], int] | None = None,
) -> list[int]:
    """Staged sieve driven by a strictly increasing period sequence u_i > 1.

    Stage i fixes the first i survivors and deletes one element from each
    consecutive u_i-block of the unfixed tail (position u_i - 1 of each
    block by default).  With u_i = i + 1 this is consecutive_sieve.

    With count_from_head=True the deletion count restarts at the head of
    the whole remaining list each stage (the convention of the n-ary
    sieves): stage i removes every u_i-th remaining element.  With
    u_i = n**i this reproduces nary_sieve(n).
    """
    remaining = list(range(1, limit + 1))
    prev = 1
    for stage, period in enumerate(periods, start=1):
        if period <= prev:
            raise ValueError("periods must be strictly increasing and > 1")
        prev = period
        if count_from_head:
            if period > len(remaining):
                break
            remaining = [
                v for i, v in enumerate(remaining, start=1) if i % period != 0
            ]
            continue
        fixed = stage
        tail = remaining[fixed:]
        cut = period - 1 if delete_position is None else delete_position(period)
        if not 1 <= cut <= period:
            raise ValueError("deleted position must lie inside the block")
        if len(tail) < cut:
            break
        remaining = remaining[:fixed] + [
            v for i, v in enumerate(tail) if i % period != cut - 1
        ]
    return remaining
