"""Decomposition of finite commutative Moufang groupoids into Archimedean components."""

__version__ = "0.1.0"

from .decomp import (
    Decomposition,
    Ideal,
    Partition,
    decompose,
    is_archimedean,
    is_semilattice,
    natural_order,
    principal_ideal,
    quotient,
    rho,
    sigma_partition,
    verify_congruence,
)
from .enumerator import EnumerationTask, canonical_form, enumerate_magmas, naive_enumerate, search
from .generators import chain_semilattice, cyclic_group, jordan_left_zero, zn_multiplicative
from .magma import (
    IdentityKind,
    Magma,
    apply_translation_word,
    bracketings_agree,
    check_identity,
    corollary4_check,
    direct_product,
    lemma3_check,
    lemma5_check,
    make_magma,
    mul,
    power_orbit,
    submagma,
)
