"""Partition helpers: canonical form, enumeration, strips."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple


def canonical(parts: Sequence[int]) -> Partition:
    """Strip trailing zeros; raise ValueError unless weakly decreasing and nonnegative."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    try:
        canonical(parts)
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> tuple:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in partitions_of(n - first, first, rest_len):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int, max_length: int | None = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k, None, max_length)


def conjugate(la: Sequence[int]) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def contains(la: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the diagram of mu fits inside the diagram of la."""
    if len(mu) > len(la):
        return False
    return all(m <= l for m, l in zip(mu, la))


def multiplicities(la: Sequence[int]) -> Counter:
    return Counter(p for p in la if p > 0)


def is_horizontal_strip(la: Sequence[int], mu: Sequence[int]) -> bool:
    """la/mu is a horizontal strip iff la_1 >= mu_1 >= la_2 >= mu_2 >= ..."""
    if not contains(la, mu):
        return False
    for i in range(1, len(la)):
        if la[i] > (mu[i - 1] if i - 1 < len(mu) else 0):
            return False
    return True


def horizontal_strips(mu: Sequence[int], r: int) -> Iterator[Partition]:
    """Partitions la with la/mu a horizontal r-strip (interlacing enumeration)."""
    mu = tuple(mu)
    ext = mu + (0,)

    def rec(i: int, remaining: int, prefix: tuple):
        if i == len(ext):
            if remaining == 0:
                yield canonical(prefix)
            return
        upper = remaining if i == 0 else ext[i - 1] - ext[i]
        for add in range(min(upper, remaining), -1, -1):
            yield from rec(i + 1, remaining - add, prefix + (ext[i] + add,))

    yield from rec(0, r, ())
