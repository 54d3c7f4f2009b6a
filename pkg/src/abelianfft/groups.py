"""Finite abelian groups as products of cyclic factors.

A group is a tuple of moduli (k_1, ..., k_u); elements are coordinate tuples
ordered lexicographically, so the element (x_1, ..., x_u) sits at flat index
((x_1 k_2 + x_2) k_3 + ...) k_u + x_u. Any factor tuple with entries >= 2 is
accepted — the cyclic group Z_12 is (12,) and the out-of-order product
Z_3 x Z_2 is (3, 2) — while `canonicalize` produces the sorted prime-power
normal form together with the CRT index permutation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


def prime_power_factors(m: int) -> list[int]:
    """Prime-power parts of m by trial division, e.g. 12 -> [4, 3]."""
    if m < 1:
        raise ValueError(f"modulus {m} must be >= 1")
    parts = []
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            q = 1
            while rest % p == 0:
                q *= p
                rest //= p
            parts.append(q)
        p += 1 if p == 2 else 2
    if rest > 1:
        parts.append(rest)
    return parts


def is_prime_power(m: int) -> bool:
    return m >= 2 and prime_power_factors(m) == [m]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{k_1} x ... x Z_{k_u} with lexicographically ordered elements.

    Elements are plain coordinate tuples; the group object supplies the
    arithmetic. The empty factor tuple is the trivial group of order 1.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        fs = tuple(int(k) for k in self.factors)
        for k in fs:
            if k < 2:
                raise ValueError(f"factor {k} is not a modulus >= 2")
        object.__setattr__(self, "factors", fs)

    @cached_property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def num_factors(self) -> int:
        return len(self.factors)

    @cached_property
    def is_canonical(self) -> bool:
        """True when factors are prime powers in non-decreasing order."""
        return all(is_prime_power(k) for k in self.factors) and all(
            a <= b for a, b in zip(self.factors, self.factors[1:])
        )

    @cached_property
    def _suffix_products(self) -> tuple[int, ...]:
        # _suffix_products[i] = k_{i+1} * ... * k_u
        out = [1]
        for k in reversed(self.factors[1:]):
            out.append(out[-1] * k)
        return tuple(reversed(out))

    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    def check_element(self, x) -> tuple[int, ...]:
        """Validate coordinates; a bare int is accepted for single-factor groups."""
        if isinstance(x, (int, np.integer)) and len(self.factors) == 1:
            x = (int(x),)
        coords = tuple(int(c) for c in x)
        if len(coords) != len(self.factors):
            raise ValueError(
                f"element {coords} has {len(coords)} coordinates, group {self} has {len(self.factors)}"
            )
        for c, k in zip(coords, self.factors):
            if not 0 <= c < k:
                raise ValueError(f"coordinate {c} out of range for Z_{k}")
        return coords

    def index_of(self, x) -> int:
        coords = self.check_element(x)
        idx = 0
        for c, k in zip(coords, self.factors):
            idx = idx * k + c
        return idx

    def element_at(self, index: int) -> tuple[int, ...]:
        i = int(index)
        if not 0 <= i < self.order:
            raise ValueError(f"index {i} out of range for a group of order {self.order}")
        coords = []
        for suffix, k in zip(self._suffix_products, self.factors):
            coords.append((i // suffix) % k)
        return tuple(coords)

    def elements(self) -> list[tuple[int, ...]]:
        """All elements in lexicographic (index) order."""
        return [tuple(row) for row in self.coordinates]

    def add(self, x, y) -> tuple[int, ...]:
        a, b = self.check_element(x), self.check_element(y)
        return tuple((i + j) % k for i, j, k in zip(a, b, self.factors))

    def neg(self, x) -> tuple[int, ...]:
        a = self.check_element(x)
        return tuple((-i) % k for i, k in zip(a, self.factors))

    def sub(self, x, y) -> tuple[int, ...]:
        a, b = self.check_element(x), self.check_element(y)
        return tuple((i - j) % k for i, j, k in zip(a, b, self.factors))

    @cached_property
    def coordinates(self) -> np.ndarray:
        """(order, num_factors) int64 array whose row j is element_at(j)."""
        idx = np.arange(self.order, dtype=np.int64)
        cols = np.empty((self.order, len(self.factors)), dtype=np.int64)
        for i, (suffix, k) in enumerate(zip(self._suffix_products, self.factors)):
            cols[:, i] = (idx // suffix) % k
        cols.setflags(write=False)
        return cols

    def subtraction_table(self) -> np.ndarray:
        """indices[i, j] = index_of(element_at(i) - element_at(j)).

        O(order^2) memory; meant for dense-oracle scale.
        """
        c = self.coordinates
        idx = np.zeros((self.order, self.order), dtype=np.int64)
        for i, k in enumerate(self.factors):
            idx *= k
            idx += (c[:, None, i] - c[None, :, i]) % k
        return idx

    def addition_table(self) -> np.ndarray:
        """indices[i, j] = index_of(element_at(i) + element_at(j))."""
        c = self.coordinates
        idx = np.zeros((self.order, self.order), dtype=np.int64)
        for i, k in enumerate(self.factors):
            idx *= k
            idx += (c[:, None, i] + c[None, :, i]) % k
        return idx

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{k}" for k in self.factors)


def trivial_group() -> FiniteAbelianGroup:
    return FiniteAbelianGroup(())


def cyclic(n: int) -> FiniteAbelianGroup:
    """The cyclic group Z_n (trivial for n = 1)."""
    n = int(n)
    if n < 1:
        raise ValueError(f"Z_{n} is not a group")
    return FiniteAbelianGroup(()) if n == 1 else FiniteAbelianGroup((n,))


def canonicalize(moduli: Iterable[int]) -> tuple[FiniteAbelianGroup, np.ndarray]:
    """Split Z_{m_1} x ... x Z_{m_t} into sorted prime-power factors.

    Returns (group, perm) where perm is the CRT isomorphism as an index
    permutation: data v indexed by the input product maps to w on the
    canonical group via w[perm[i]] = v[i]. Moduli equal to 1 are dropped;
    modulus 0 (or negative) is rejected.
    """
    ms = []
    for m in moduli:
        m = int(m)
        if m < 1:
            raise ValueError(f"modulus {m} must be >= 1")
        if m > 1:
            ms.append(m)
    pieces = []  # (prime power, position in ms)
    for pos, m in enumerate(ms):
        for q in prime_power_factors(m):
            pieces.append((q, pos))
    pieces.sort(key=lambda piece: piece[0])  # stable: ties keep source order
    group = FiniteAbelianGroup(tuple(q for q, _ in pieces))

    source = FiniteAbelianGroup(tuple(ms))
    coords = source.coordinates
    perm = np.zeros(source.order, dtype=np.int64)
    for q, pos in pieces:
        perm *= q
        perm += coords[:, pos] % q
    return group, perm


_PART = re.compile(r"^Z?(\d+)(?:\^(\d+))?$")


def parse_group(text: str) -> FiniteAbelianGroup:
    """Parse specs like 'Z4', 'Z3xZ2', 'Z2^3', or a bare integer 'n' (= Z_n)."""
    spec = text.strip()
    if not spec:
        raise ValueError("empty group spec")
    factors: list[int] = []
    for part in spec.split("x"):
        m = _PART.match(part.strip())
        if m is None:
            raise ValueError(f"bad group spec {part.strip()!r} (expected e.g. 'Z4', 'Z2^3', '12')")
        base = int(m.group(1))
        power = int(m.group(2)) if m.group(2) else 1
        if base < 1:
            raise ValueError(f"Z_{base} is not a group")
        if base > 1:
            factors.extend([base] * power)
    return FiniteAbelianGroup(tuple(factors))


def as_group(spec) -> FiniteAbelianGroup:
    """Coerce a group, an int n (meaning Z_n), a spec string, or a factor list."""
    if isinstance(spec, FiniteAbelianGroup):
        return spec
    if isinstance(spec, (int, np.integer)):
        return cyclic(int(spec))
    if isinstance(spec, str):
        return parse_group(spec)
    if isinstance(spec, Sequence):
        return FiniteAbelianGroup(tuple(int(k) for k in spec))
    raise ValueError(f"cannot interpret {spec!r} as a finite abelian group")
