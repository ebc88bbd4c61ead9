"""Exact combinatorics of simplicial affine semigroup rings."""
from .apery import AperyClass, MonomialIdeal, apery_set, class_count, ideal_height, partition_classes
from .closure import (
    check_minimality,
    cm_closure,
    is_subsemigroup,
    probe_minimality,
    same_semigroup,
    saturate,
    verify_saturation,
)
from .decomposition import CmReport, Decomposition, decompose, is_cohen_macaulay, verify_decomposition
from .errors import SemigroupError
from .semigroup import AffineSemigroup, MembershipCertificate, build_semigroup, cone_member, group_member, member

__version__ = "0.1.0"
