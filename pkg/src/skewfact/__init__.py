"""Permutation groups and checks of dihedral factorizations of simple groups."""

from __future__ import annotations

__version__ = "0.1.0"

from .perm import Permutation, compose, conjugate, cycles, format_cycles, from_cycles, inverse, order, parity, parse_cycles, power
from .group import GroupHandle, OverThreshold, RandomSource, StabilizerChain, discover_classes, enumerate_elements
from .witness import DihedralWitness, WitnessError
from .constructors import FixtureIntegrityError, SpecError, make
from .subgroups import centralizer_of_element, core_small, intersection_small, is_normal, is_simple, normal_closure, normalizer_of_cyclic
from .actions import analyze_action, coset_action, is_2transitive, is_primitive, is_quasiprimitive, is_regular, is_transitive
from .factorization import (
    FactorizationCertificate,
    find_dihedral,
    find_regular_dihedral,
    is_product,
    match_table1,
    no_d46_by_normalizer,
    recognize_dihedral,
    verify_dihedral_skew,
    verify_skew_instance,
)

__all__ = [
    "__version__",
    "DihedralWitness",
    "FactorizationCertificate",
    "FixtureIntegrityError",
    "GroupHandle",
    "OverThreshold",
    "Permutation",
    "RandomSource",
    "SpecError",
    "StabilizerChain",
    "WitnessError",
    "analyze_action",
    "centralizer_of_element",
    "compose",
    "conjugate",
    "core_small",
    "coset_action",
    "cycles",
    "discover_classes",
    "enumerate_elements",
    "find_dihedral",
    "find_regular_dihedral",
    "format_cycles",
    "from_cycles",
    "intersection_small",
    "inverse",
    "is_2transitive",
    "is_normal",
    "is_primitive",
    "is_product",
    "is_quasiprimitive",
    "is_regular",
    "is_simple",
    "is_transitive",
    "make",
    "match_table1",
    "no_d46_by_normalizer",
    "normal_closure",
    "normalizer_of_cyclic",
    "order",
    "parity",
    "parse_cycles",
    "power",
    "recognize_dihedral",
    "verify_dihedral_skew",
    "verify_skew_instance",
]
