"""The formal character ring: sparse integer sums of basis symbols.

Two bases are supported.  The Weyl basis is keyed by Levi-dominant weights
(one symbol per Weyl module of the Levi); the monomial basis is keyed by
partitions (one symbol per orbit sum of monomial symmetric functions, i.e.
the GL picture with unboundedly many variables).  Conversion from the full
Weyl basis to the monomial basis goes through Kostka numbers:
S_lambda = sum over mu of K(lambda, mu) * m_mu.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .lattice import LiftError, Partition, Weight, partitions_below, weight_to_partition
from .weyl import LeviDatum, dot_normalize

BASIS_WEYL = "weyl"
BASIS_MONOMIAL = "monomial"


class FormalCharacter:
    """Immutable sparse integer combination of basis symbols.

    Zero coefficients are never stored.  Arithmetic and equality insist on a
    matching basis and Levi context; equality is exact and independent of
    term insertion order.
    """

    __slots__ = ("basis", "levi", "terms")

    def __init__(self, basis: str, levi: LeviDatum | None, terms: Mapping):
        if basis == BASIS_WEYL:
            if levi is None:
                raise ValueError("Weyl-basis characters need a Levi context")
        elif basis == BASIS_MONOMIAL:
            if levi is not None:
                raise ValueError("monomial-basis characters carry no Levi context")
        else:
            raise ValueError(f"unknown basis {basis!r}")
        kept = {}
        for key, coeff in terms.items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient for {key} is not an integer: {coeff!r}")
            if coeff == 0:
                continue
            if basis == BASIS_WEYL:
                if not isinstance(key, Weight) or not levi.is_dominant(key):
                    raise ValueError(f"{key!r} is not a dominant weight for {levi!r}")
            elif not isinstance(key, Partition):
                raise ValueError(f"{key!r} is not a partition")
            kept[key] = coeff
        self.basis = basis
        self.levi = levi
        self.terms = kept

    @classmethod
    def zero(cls, basis: str, levi: LeviDatum | None = None) -> "FormalCharacter":
        return cls(basis, levi, {})

    @classmethod
    def weyl_term(cls, w: Weight, levi: LeviDatum, coeff: int = 1) -> "FormalCharacter":
        return cls(BASIS_WEYL, levi, {w: coeff})

    @classmethod
    def monomial_term(cls, p: Partition, coeff: int = 1) -> "FormalCharacter":
        return cls(BASIS_MONOMIAL, None, {p: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _same_context(self, other: "FormalCharacter") -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.levi != other.levi:
            raise ValueError(f"Levi mismatch: {self.levi!r} vs {other.levi!r}")

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        self._same_context(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return FormalCharacter(self.basis, self.levi, merged)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter(
            self.basis, self.levi, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> "FormalCharacter":
        if not isinstance(k, int):
            raise TypeError(f"scale factor must be an integer: {k!r}")
        return FormalCharacter(
            self.basis, self.levi, {key: k * c for key, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        self._same_context(other)
        return self.terms == other.terms

    def items_sorted(self) -> list:
        """Terms in reverse-lexicographic key order (deterministic output)."""
        def sort_key(item):
            key = item[0]
            return key.parts if isinstance(key, Partition) else key.coords

        return sorted(self.terms.items(), key=sort_key, reverse=True)

    def __repr__(self) -> str:
        return f"FormalCharacter({self.basis}, {len(self.terms)} terms)"


# Process-wide Kostka memo.  All writers compute identical values, so plain
# dict assignment (atomic under CPython) is enough for concurrent use.
_KOSTKA_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def kostka(shape: Partition, content: Partition) -> int:
    """The Kostka number: semistandard tableaux of this shape and content.

    The count is invariant under permuting the content, so the content is
    kept sorted and its largest entry peeled first: relabel values so the
    most frequent one is largest, then its cells form a horizontal strip at
    the rim, and each way of removing such a strip recurses on the rest.
    Vanishes unless content <= shape in dominance order, which prunes the
    recursion hard.  Results are memoized process-wide.
    """
    if shape.size != content.size:
        raise ValueError(f"size mismatch: |{shape}| != |{content}|")
    return _kostka(shape.parts, content.parts)


def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    if not _dominated(content, shape):
        return 0
    key = (shape, content)
    value = _KOSTKA_MEMO.get(key)
    if value is None:
        rest = content[1:]
        value = sum(
            _kostka(inner, rest) for inner in _horizontal_strips(shape, content[0])
        )
        _KOSTKA_MEMO[key] = value
    return value


def _dominated(content: tuple[int, ...], shape: tuple[int, ...]) -> int:
    # prefix-sum comparison; both tuples sorted decreasing with equal totals
    sc = 0
    ss = 0
    nshape = len(shape)
    for t, c in enumerate(content):
        sc += c
        if t < nshape:
            ss += shape[t]
        if sc > ss:
            return False
    return True


def _horizontal_strips(shape: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    """Inner shapes nu with shape/nu a horizontal strip of the given size."""
    n = len(shape)
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def peel(i: int, remaining: int) -> None:
        if remaining == 0:
            inner = tuple(prefix) + shape[i:]
            while inner and inner[-1] == 0:
                inner = inner[:-1]
            found.append(inner)
            return
        # rows i.. can shed at most shape[i] cells in total (telescoping)
        if i == n or remaining > shape[i]:
            return
        floor = shape[i + 1] if i + 1 < n else 0
        for r in range(min(remaining, shape[i] - floor), -1, -1):
            prefix.append(shape[i] - r)
            peel(i + 1, remaining - r)
            prefix.pop()

    peel(0, size)
    return found


def kostka_memo_export() -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Snapshot of the memo as sorted (shape, content, value) triples."""
    return sorted((s, c, v) for (s, c), v in _KOSTKA_MEMO.items())


def kostka_memo_import(entries: Iterable) -> int:
    """Seed the memo from (shape, content, value) triples; returns count kept.

    Entries are advisory and re-derivable; anything structurally off is
    dropped silently.
    """
    kept = 0
    for entry in entries:
        try:
            shape, content, value = entry
            shape = tuple(shape)
            content = tuple(content)
            if not all(isinstance(a, int) for a in shape + content):
                continue
            if not isinstance(value, int) or value < 0:
                continue
            if any(a < b for a, b in zip(shape, shape[1:])) or (shape and shape[-1] < 1):
                continue
            if any(a < b for a, b in zip(content, content[1:])) or (content and content[-1] < 1):
                continue
            if sum(shape) != sum(content):
                continue
        except (TypeError, ValueError):
            continue
        _KOSTKA_MEMO[(shape, content)] = value
        kept += 1
    return kept


def kostka_memo_clear() -> None:
    _KOSTKA_MEMO.clear()


def kostka_memo_size() -> int:
    return len(_KOSTKA_MEMO)


def schur_to_monomial(lam: Partition) -> FormalCharacter:
    """Expand the Schur function of lam in the monomial basis via Kostka numbers."""
    terms = {}
    for mu in partitions_below(lam):
        k = kostka(lam, mu)
        if k:
            terms[mu] = k
    return FormalCharacter(BASIS_MONOMIAL, None, terms)


def weyl_chi(mu: Weight, levi: LeviDatum) -> FormalCharacter:
    """The Weyl character of mu: zero if singular, else sign times the
    dominant normalization, as a one-term character."""
    outcome = dot_normalize(mu, levi)
    if outcome.is_singular:
        return FormalCharacter.zero(BASIS_WEYL, levi)
    return FormalCharacter(BASIS_WEYL, levi, {outcome.dominant: outcome.sign})


def convert_weyl_to_monomial(x: FormalCharacter) -> FormalCharacter:
    """Rewrite a full-Levi Weyl-basis character in the monomial basis.

    Each key is lifted to its partition and expanded through Kostka numbers;
    coefficients are combined exactly.
    """
    if x.basis != BASIS_WEYL:
        raise ValueError(f"expected a Weyl-basis character, got {x.basis}")
    if not x.levi.is_full:
        raise ValueError("only full-Levi characters convert to the monomial basis")
    total: dict[Partition, int] = {}
    for key, coeff in x.terms.items():
        try:
            lam = weight_to_partition(key)
        except LiftError as exc:
            raise LiftError(f"key {key} has no nonnegative lift") from exc
        for mu, k in schur_to_monomial(lam).terms.items():
            total[mu] = total.get(mu, 0) + coeff * k
    return FormalCharacter(BASIS_MONOMIAL, None, total)
