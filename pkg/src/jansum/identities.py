"""Verification of two families of alternating Schur-function identities.

For an integer n >= 2, the first identity says that the sum of the monomial
symmetric functions m_lambda, over all partitions lambda of 2n-1 below
(n-1, n-1, 1) in dominance order, equals the alternating sum of the Schur
functions of shapes (n-1, n-1-i, 1^(i+1)) for i = 0..n-2.  The second says
the same with (n-1, 1) and the hooks (n-1-i, 1^(i+1)).  Both are theorems
for prime n and conjectural (first proved, second open) for composite n;
the sweep therefore reports rather than asserts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charring import (
    BASIS_MONOMIAL,
    FormalCharacter,
    convert_weyl_to_monomial,
    schur_to_monomial,
)
from .jantzen import derived_simple_chars, is_prime
from .lattice import Partition, partitions_below

FIRST = "first"
SECOND = "second"


@dataclass
class IdentityReport:
    n: int
    which: str
    lhs: FormalCharacter
    rhs: FormalCharacter
    equal: bool
    diff: FormalCharacter
    prime: bool

    @property
    def label(self) -> str:
        return "theorem" if self.prime else "conjecture instance"


def _monomial_ideal_sum(top: Partition) -> FormalCharacter:
    return FormalCharacter(
        BASIS_MONOMIAL, None, {mu: 1 for mu in partitions_below(top)}
    )


def _alternating_schur_sum(shapes: list[Partition]) -> FormalCharacter:
    total: dict[Partition, int] = {}
    for i, shape in enumerate(shapes):
        sign = 1 if i % 2 == 0 else -1
        for mu, k in schur_to_monomial(shape).terms.items():
            total[mu] = total.get(mu, 0) + sign * k
    return FormalCharacter(BASIS_MONOMIAL, None, total)


def _report(n: int, which: str, lhs: FormalCharacter, rhs: FormalCharacter) -> IdentityReport:
    diff = lhs - rhs
    return IdentityReport(
        n=n,
        which=which,
        lhs=lhs,
        rhs=rhs,
        equal=diff.is_zero,
        diff=diff,
        prime=is_prime(n),
    )


def first_identity_shapes(n: int) -> list[Partition]:
    """Shapes (n-1, n-1-i, 1^(i+1)) for i = 0..n-2."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return [Partition([n - 1, n - 1 - i] + [1] * (i + 1)) for i in range(n - 1)]


def second_identity_shapes(n: int) -> list[Partition]:
    """Hook shapes (n-1-i, 1^(i+1)) for i = 0..n-2."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return [Partition([n - 1 - i] + [1] * (i + 1)) for i in range(n - 1)]


def verify_first_identity(n: int) -> IdentityReport:
    """Compare both sides of the degree-(2n-1) identity below (n-1, n-1, 1)."""
    shapes = first_identity_shapes(n)
    lhs = _monomial_ideal_sum(Partition((n - 1, n - 1, 1)))
    return _report(n, FIRST, lhs, _alternating_schur_sum(shapes))


def verify_second_identity(n: int) -> IdentityReport:
    """Compare both sides of the degree-n identity below (n-1, 1)."""
    shapes = second_identity_shapes(n)
    lhs = _monomial_ideal_sum(Partition((n - 1, 1)))
    return _report(n, SECOND, lhs, _alternating_schur_sum(shapes))


def conjecture_sweep(n_min: int, n_max: int, which: str) -> list[IdentityReport]:
    """Run one identity over a range of n; reports only, never asserts."""
    if not 2 <= n_min <= n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got ({n_min}, {n_max})")
    check = {FIRST: verify_first_identity, SECOND: verify_second_identity}.get(which)
    if check is None:
        raise ValueError(f"which must be {FIRST!r} or {SECOND!r}, got {which!r}")
    return [check(n) for n in range(n_min, n_max + 1)]


@dataclass
class SupportCheck:
    """Support and multiplicity comparison of one character against a
    dominance ideal: every partition below the target must appear with
    coefficient exactly 1, and nothing else may appear."""

    target: Partition
    character: FormalCharacter
    missing: list[Partition]
    unexpected: list[Partition]
    wrong_multiplicity: list[tuple[Partition, int]]

    @property
    def passed(self) -> bool:
        return not (self.missing or self.unexpected or self.wrong_multiplicity)


@dataclass
class MultiplicityOneReport:
    p: int
    d: int
    families: list[SupportCheck]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)


def _support_check(char: FormalCharacter, target: Partition) -> SupportCheck:
    expected = partitions_below(target)
    expected_set = set(expected)
    missing = [mu for mu in expected if mu not in char.terms]
    unexpected = sorted(
        (mu for mu in char.terms if mu not in expected_set),
        key=lambda m: m.parts,
        reverse=True,
    )
    wrong = [
        (mu, c) for mu, c in char.items_sorted() if mu in expected_set and c != 1
    ]
    return SupportCheck(
        target=target,
        character=char,
        missing=missing,
        unexpected=unexpected,
        wrong_multiplicity=wrong,
    )


def multiplicity_one_report(p: int, d: int) -> MultiplicityOneReport:
    """Check that both derived simple characters are multiplicity-free
    dominance ideals in the monomial basis.

    The head character of the lambda sequence must expand to exactly the
    partitions below (p-1, p-1, 1), all with coefficient 1; the alternating
    hook sum must do the same below (p-1, 1).  Needs d >= 2p-2 so that the
    longest partition in the first ideal still fits in d+1 rows.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d < 3:
        raise ValueError(f"need d >= 3, got {d}")
    if d < 2 * p - 2:
        raise ValueError(
            f"need d >= 2p-2 = {2 * p - 2}: partitions of {2 * p - 1} below "
            f"{Partition((p - 1, p - 1, 1))} can have up to {2 * p - 1} parts"
        )
    head = convert_weyl_to_monomial(derived_simple_chars(p, d)[0])
    first = _support_check(head, Partition((p - 1, p - 1, 1)))
    hook_sum = _alternating_schur_sum(second_identity_shapes(p))
    second = _support_check(hook_sum, Partition((p - 1, 1)))
    return MultiplicityOneReport(p=p, d=d, families=[first, second])
