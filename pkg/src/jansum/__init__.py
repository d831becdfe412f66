"""Exact character combinatorics for SL(d+1).

Partitions and dominance order, the weight lattice in fundamental
coordinates, the Weyl-group dot action (full group and standard Levi
subgroups), the Jantzen sum formula with full term traces, Kostka numbers
and Schur-to-monomial expansion, and machine verification of a family of
alternating Schur-function identities over dominance ideals.
"""

from .charring import (
    BASIS_MONOMIAL,
    BASIS_WEYL,
    FormalCharacter,
    convert_weyl_to_monomial,
    kostka,
    schur_to_monomial,
    weyl_chi,
)
from .identities import (
    IdentityReport,
    MultiplicityOneReport,
    conjecture_sweep,
    multiplicity_one_report,
    verify_first_identity,
    verify_second_identity,
)
from .jantzen import (
    JantzenTerm,
    PropCharReport,
    SumReport,
    derived_simple_chars,
    expected_sum,
    jantzen_sum,
    lambda_sequence,
    verify_prop_char,
)
from .lattice import (
    LiftError,
    Partition,
    Root,
    Weight,
    dominance_leq,
    fundamental_weight,
    pairing,
    partition_to_weight,
    partitions_below,
    rho,
    weight_to_partition,
)
from .weyl import (
    LeviDatum,
    SignedDominant,
    affine_dot_reflect,
    dot_normalize,
    dot_orbit_oracle,
    from_epsilon,
    to_epsilon,
)

__version__ = "0.1.0"
