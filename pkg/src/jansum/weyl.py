"""Weyl-group dot action for SL(d+1) and its standard Levi subgroups.

Everything runs through epsilon coordinates: a weight plus rho becomes a
vector of d+1 integers (suffix sums, last entry 0), on which the Weyl group
acts by permutation and a Levi subgroup by permutations within blocks.
The dot action w . mu = w(mu + rho) - rho is realized by shifting, acting,
and unshifting; only coordinate differences matter, so all operations are
invariant under adding a constant to every epsilon entry.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .lattice import Root, Weight, pairing, rho


class LeviDatum:
    """A standard Levi subgroup of SL(rank+1), given by a set of simple roots.

    The chosen simple roots glue the epsilon positions 1..rank+1 into maximal
    consecutive blocks (simple root i joins positions i and i+1); the Levi's
    Weyl group permutes positions within each block.  Choosing all simple
    roots recovers the full Weyl group.
    """

    __slots__ = ("rank", "simples", "blocks")

    def __init__(self, rank: int, simples: Iterable[int]):
        if rank < 2:
            raise ValueError(f"rank must be at least 2, got {rank}")
        ss = frozenset(simples)
        if not all(isinstance(s, int) and 1 <= s <= rank for s in ss):
            raise ValueError(f"simple roots must lie in 1..{rank}: {sorted(ss)}")
        self.rank = rank
        self.simples = ss
        blocks: list[tuple[int, ...]] = []
        current = [1]
        for i in range(1, rank + 1):
            if i in ss:
                current.append(i + 1)
            else:
                blocks.append(tuple(current))
                current = [i + 1]
        blocks.append(tuple(current))
        self.blocks = tuple(blocks)

    @classmethod
    def full(cls, rank: int) -> "LeviDatum":
        return cls(rank, range(1, rank + 1))

    @property
    def is_full(self) -> bool:
        return len(self.simples) == self.rank

    def positive_roots(self) -> Iterator[Root]:
        """All alpha_{j,k} whose simple constituents j..k lie in the Levi."""
        for block in self.blocks:
            a, b = block[0], block[-1]
            for j in range(a, b):
                for k in range(j, b):
                    yield Root(j, k)

    def contains_root(self, r: Root) -> bool:
        return all(j in self.simples for j in r.simple_indices())

    def is_dominant(self, w: Weight) -> bool:
        if w.rank != self.rank:
            raise ValueError(f"rank mismatch: weight {w.rank}, Levi {self.rank}")
        return all(w.coords[s - 1] >= 0 for s in self.simples)

    def describe(self) -> str:
        if self.is_full:
            return "full"
        return "levi{" + ",".join(str(s) for s in sorted(self.simples)) + "}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LeviDatum)
            and self.rank == other.rank
            and self.simples == other.simples
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.simples))

    def __repr__(self) -> str:
        return f"LeviDatum({self.rank}, {sorted(self.simples)})"


class SignedDominant:
    """Dot-normalization outcome: singular, or a sign and a dominant weight.

    Sign 0 encodes the singular case (the weight plus rho sits on a
    reflection wall); otherwise sign is +1/-1 and dominant is the unique
    dominant representative of the dot orbit.
    """

    __slots__ = ("sign", "dominant")

    def __init__(self, sign: int, dominant: Weight | None = None):
        if sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {sign}")
        if (sign == 0) != (dominant is None):
            raise ValueError("singular outcomes carry no weight, regular ones must")
        self.sign = sign
        self.dominant = dominant

    @classmethod
    def singular(cls) -> "SignedDominant":
        return cls(0)

    @property
    def is_singular(self) -> bool:
        return self.sign == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedDominant)
            and self.sign == other.sign
            and self.dominant == other.dominant
        )

    def __hash__(self) -> int:
        return hash((self.sign, self.dominant))

    def __repr__(self) -> str:
        if self.is_singular:
            return "SignedDominant.singular()"
        return f"SignedDominant({self.sign:+d}, {self.dominant!r})"


def to_epsilon(w: Weight) -> tuple[int, ...]:
    """Epsilon coordinates (e_1, ..., e_{d+1}): e_i - e_{i+1} = coords[i], e_{d+1} = 0."""
    eps = [0]
    for c in reversed(w.coords):
        eps.append(eps[-1] + c)
    eps.reverse()
    return tuple(eps)


def from_epsilon(eps: Sequence[int]) -> Weight:
    """Weight recovered from epsilon differences; the all-ones shift is irrelevant."""
    return Weight(eps[i] - eps[i + 1] for i in range(len(eps) - 1))


def affine_dot_reflect(lam: Weight, r: Root, level: int) -> Weight:
    """Dot-action image of lam under the affine reflection (root, level).

    Shift by rho, reflect across the hyperplane where the pairing with the
    coroot equals level, unshift: the result is lam - t*alpha with
    t = (lam + rho, alpha^vee) - level.
    """
    d = lam.rank
    t = pairing(lam + rho(d), r) - level
    return lam - t * r.to_weight(d)


def dot_normalize(mu: Weight, levi: LeviDatum) -> SignedDominant:
    """Normalize mu to the dominant chamber of the Levi under the dot action.

    Works on the epsilon coordinates of mu + rho: a repeated entry inside a
    block means mu is singular for the Levi; otherwise each block is sorted
    strictly decreasing, the sign is the parity of inversions removed, and
    rho is subtracted back off.  Uses the full rho even for a proper Levi
    (the difference from the Levi's own rho is invariant under its Weyl
    group, so the normalized pair is unchanged).
    """
    if mu.rank != levi.rank:
        raise ValueError(f"rank mismatch: weight {mu.rank}, Levi {levi.rank}")
    eps = list(to_epsilon(mu + rho(mu.rank)))
    inversions = 0
    for block in levi.blocks:
        vals = [eps[pos - 1] for pos in block]
        if len(set(vals)) < len(vals):
            return SignedDominant.singular()
        sorted_vals, inv = _sort_desc_counting(vals)
        inversions += inv
        for pos, v in zip(block, sorted_vals):
            eps[pos - 1] = v
    sign = -1 if inversions % 2 else 1
    return SignedDominant(sign, from_epsilon(eps) - rho(mu.rank))


def _sort_desc_counting(vals: list[int]) -> tuple[list[int], int]:
    """Merge sort into descending order, counting pairs i < j with v[i] < v[j]."""
    n = len(vals)
    if n <= 1:
        return list(vals), 0
    mid = n // 2
    left, inv_l = _sort_desc_counting(vals[:mid])
    right, inv_r = _sort_desc_counting(vals[mid:])
    merged: list[int] = []
    inv = inv_l + inv_r
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] >= right[j]:
            merged.append(left[i])
            i += 1
        else:
            # right[j] jumps over every remaining left entry
            merged.append(right[j])
            j += 1
            inv += len(left) - i
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, inv


def dot_orbit_oracle(mu: Weight) -> SignedDominant:
    """Brute-force dot normalization over the full Weyl group; test-only.

    Walks all (d+1)! permutations of the epsilon coordinates of mu + rho
    looking for a strictly decreasing arrangement.  None exists exactly when
    some entry repeats, i.e. when mu is singular.  Deliberately independent
    of the block-sorting code path in dot_normalize.
    """
    if mu.rank > 6:
        raise ValueError(f"orbit search refused for rank {mu.rank} > 6")
    eps = to_epsilon(mu + rho(mu.rank))
    idx = range(len(eps))
    for perm in permutations(idx):
        arranged = tuple(eps[p] for p in perm)
        if all(a > b for a, b in zip(arranged, arranged[1:])):
            inv = sum(
                1 for i in idx for j in idx if i < j and perm[i] > perm[j]
            )
            sign = -1 if inv % 2 else 1
            return SignedDominant(sign, from_epsilon(arranged) - rho(mu.rank))
    return SignedDominant.singular()
