"""Partitions, dominance order, and the SL(d+1) weight lattice.

Weights are stored in fundamental-weight coordinates, where the pairing of a
weight with the coroot of alpha_{j,k} = alpha_j + ... + alpha_k is the plain
coordinate sum over positions j..k.  Dominant weights are identified with
partitions (their minimal nonnegative GL(d+1) lift) via suffix sums.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class LiftError(ValueError):
    """A weight whose suffix sums go negative has no nonnegative GL lift."""


class Partition:
    """Weakly decreasing positive integer parts; trailing zeros are stripped."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = list(parts)
        while ps and ps[-1] == 0:
            ps.pop()
        if not all(isinstance(a, int) for a in ps):
            raise TypeError(f"parts must be integers: {ps}")
        for a, b in zip(ps, ps[1:]):
            if b > a:
                raise ValueError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 1:
            raise ValueError(f"parts must be positive: {ps}")
        self.parts = tuple(ps)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.parts) + "]"


class Weight:
    """An SL(rank+1) weight in fundamental-weight coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[int]):
        cs = tuple(coords)
        if len(cs) < 2:
            raise ValueError(f"rank must be at least 2, got coords {cs}")
        if not all(isinstance(c, int) for c in cs):
            raise TypeError(f"coordinates must be integers: {cs}")
        self.coords = cs

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def _same_rank(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._same_rank(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._same_rank(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __mul__(self, k: int) -> "Weight":
        if not isinstance(k, int):
            return NotImplemented
        return Weight(k * c for c in self.coords)

    __rmul__ = __mul__

    def __neg__(self) -> "Weight":
        return Weight(-c for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Weight{self.coords}"

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


class Root:
    """The positive root alpha_{lo,hi} = alpha_lo + ... + alpha_hi of type A."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: int, hi: int):
        if not (isinstance(lo, int) and isinstance(hi, int)):
            raise TypeError(f"root indices must be integers: ({lo}, {hi})")
        if not 1 <= lo <= hi:
            raise ValueError(f"need 1 <= lo <= hi, got ({lo}, {hi})")
        self.lo = lo
        self.hi = hi

    def simple_indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_weight(self, d: int) -> Weight:
        """The root as a weight of SL(d+1), in fundamental coordinates.

        In epsilon coordinates the root is +1 at position lo and -1 at
        position hi+1; fundamental coordinates are successive differences.
        """
        if self.hi > d:
            raise ValueError(f"root {self} does not fit rank {d}")
        delta = [0] * (d + 2)
        delta[self.lo] = 1
        delta[self.hi + 1] = -1
        return Weight(delta[i] - delta[i + 1] for i in range(1, d + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Root) and (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Root({self.lo},{self.hi})"

    def __str__(self) -> str:
        return f"a[{self.lo},{self.hi}]"


def pairing(w: Weight, r: Root) -> int:
    """Pairing of w with the coroot of alpha_{lo,hi}: sum of coords lo..hi."""
    if r.hi > w.rank:
        raise ValueError(f"root {r} out of range for rank {w.rank}")
    return sum(w.coords[r.lo - 1 : r.hi])


def positive_roots(d: int) -> Iterator[Root]:
    """All positive roots alpha_{j,k}, 1 <= j <= k <= d, in (j, k) order."""
    for j in range(1, d + 1):
        for k in range(j, d + 1):
            yield Root(j, k)


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff a <= b in the dominance order (prefix sums; equal sizes only)."""
    if a.size != b.size:
        raise ValueError(f"dominance needs equal sizes: |{a}| != |{b}|")
    sa = 0
    sb = 0
    for t in range(a.length):
        sa += a.parts[t]
        sb += b.parts[t] if t < b.length else 0
        if sa > sb:
            return False
    return True


def partitions_below(b: Partition) -> list[Partition]:
    """All partitions of |b| that are <= b in dominance order.

    Generated by bounded-part recursion with prefix-sum pruning (never by
    filtering all partitions of |b|), largest-first, so the output is in
    reverse-lexicographic order and starts with b itself.
    """
    n = b.size
    if n == 0:
        return [Partition()]
    prefix = []
    acc = 0
    for part in b.parts:
        acc += part
        prefix.append(acc)

    out: list[Partition] = []
    stack: list[int] = []

    def extend(total: int, max_part: int, idx: int) -> None:
        if total == n:
            out.append(Partition(stack))
            return
        bound = prefix[idx] if idx < len(prefix) else n
        for a in range(min(max_part, bound - total, n - total), 0, -1):
            stack.append(a)
            extend(total + a, a, idx + 1)
            stack.pop()

    extend(0, n, 0)
    return out


def weight_to_partition(w: Weight) -> Partition:
    """Minimal nonnegative GL(d+1) lift of a dominant weight, as a partition.

    The i-th entry is the suffix sum coords[i] + ... + coords[d]; the implied
    (d+1)-th entry is 0 and trailing zeros are stripped.
    """
    suffix = []
    acc = 0
    for c in reversed(w.coords):
        acc += c
        suffix.append(acc)
    suffix.reverse()
    if any(s < 0 for s in suffix):
        raise LiftError(f"{w} has no nonnegative lift (suffix sums {suffix})")
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    return Partition(suffix)


def partition_to_weight(a: Partition, d: int) -> Weight:
    """The SL(d+1) weight whose minimal lift is a; needs at most d+1 parts."""
    if a.length > d + 1:
        raise ValueError(f"{a} has more than {d + 1} parts")
    padded = a.parts + (0,) * (d + 1 - a.length)
    return Weight(padded[i] - padded[i + 1] for i in range(d))


def fundamental_weight(i: int, d: int) -> Weight:
    """omega_i for SL(d+1), with the convention omega_{d+1} = 0."""
    if not 1 <= i <= d + 1:
        raise ValueError(f"omega_{i} undefined for rank {d}")
    return Weight(1 if j == i else 0 for j in range(1, d + 1))


def rho(d: int) -> Weight:
    """Half-sum of positive roots: the all-ones weight."""
    return Weight((1,) * d)


def zero_weight(d: int) -> Weight:
    return Weight((0,) * d)


def mu_weight(d: int, m: int, n: int) -> Weight:
    """The weight m*omega_1 - (n+d)*omega_d, for m, n >= 0."""
    if m < 0 or n < 0:
        raise ValueError(f"need m, n >= 0, got ({m}, {n})")
    return m * fundamental_weight(1, d) - (n + d) * fundamental_weight(d, d)


def pi_weight(d: int, m: int, n: int) -> Weight:
    """The weight (m-n-1)*omega_1 + n*omega_2, for m, n >= 0."""
    if m < 0 or n < 0:
        raise ValueError(f"need m, n >= 0, got ({m}, {n})")
    return (m - n - 1) * fundamental_weight(1, d) + n * fundamental_weight(2, d)


def lambda_f_weight(p: int, d: int, f: int) -> Weight:
    """f*omega_1 + (p-2-f)*omega_2 + (f+1)*omega_3 for f <= p-2, and the
    boundary weight (p-1)*omega_1 + (p-2)*omega_3 + omega_4 for f = p-1
    (omega_4 = 0 when d = 3)."""
    _check_pd(p, d)
    if not 0 <= f <= p - 1:
        raise ValueError(f"need 0 <= f <= p-1 = {p - 1}, got f = {f}")
    if f <= p - 2:
        return (
            f * fundamental_weight(1, d)
            + (p - 2 - f) * fundamental_weight(2, d)
            + (f + 1) * fundamental_weight(3, d)
        )
    return (
        (p - 1) * fundamental_weight(1, d)
        + (p - 2) * fundamental_weight(3, d)
        + fundamental_weight(4, d)
    )


def lambda_i_weight(p: int, d: int, i: int) -> Weight:
    """i*omega_1 + (p-2-i)*omega_2 + omega_{3+i}, with omega_{d+1} = 0.

    Defined for 0 <= i <= r-2 where r = min(d, p); these are the weights
    whose Jantzen sums telescope into each other.
    """
    _check_pd(p, d)
    r = min(d, p)
    if not 0 <= i <= r - 2:
        raise ValueError(f"need 0 <= i <= r-2 = {r - 2}, got i = {i}")
    return (
        i * fundamental_weight(1, d)
        + (p - 2 - i) * fundamental_weight(2, d)
        + fundamental_weight(3 + i, d)
    )


def _check_pd(p: int, d: int) -> None:
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    if d < 3:
        raise ValueError(f"need d >= 3, got {d}")
