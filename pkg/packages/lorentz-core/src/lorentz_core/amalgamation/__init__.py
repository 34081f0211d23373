"""
Lorentz 粘合构造

不相交并、粘合映射性质、商空间 (d̃, ≪̃, ≤̃, τ̃) 的精确计算，以及链、短形式与因果菱形。

@author Ysf
@date 2026-10-16
"""

from .chains import chain_length, normalize_chain, timelike_chain_witness
from .diamonds import DiamondCase, DiamondReport, causal_diamond
from .errors import (
    AmalgamationError,
    HypothesesNotMet,
    InvalidChain,
    NotABijection,
    NotChronological,
    TooLarge,
    UnboundedSeparation,
)
from .half_planes import GluedHalfPlanes
from .oracle import (
    MAX_POINTS,
    BruteForceResult,
    brute_force_quotient_distance,
    brute_force_quotient_tau,
)
from .properties import PROPERTY_NAMES, MapPropertyReport, PropertyCheck, check_map_properties
from .quotient import CompiledChains, QuotientCompiler, Relation, build_quotient
from .short_form import ShortFormResult, short_form_tau
from .types import (
    Chain,
    ClassLabel,
    CycleCertificate,
    DeclaredProperties,
    GluingSpec,
    NodeId,
    QuotientSpace,
    TimelikeChainWitness,
    Witness,
)
from .union import GluingIndex, check_bijection, disjoint_union, node_id

__all__ = [
    # 类型
    "GluingSpec",
    "DeclaredProperties",
    "QuotientSpace",
    "Chain",
    "CycleCertificate",
    "TimelikeChainWitness",
    "Witness",
    "NodeId",
    "ClassLabel",
    "GluingIndex",
    # 构造
    "disjoint_union",
    "node_id",
    "check_bijection",
    "check_map_properties",
    "MapPropertyReport",
    "PropertyCheck",
    "PROPERTY_NAMES",
    "QuotientCompiler",
    "CompiledChains",
    "Relation",
    "build_quotient",
    # 预言机
    "brute_force_quotient_tau",
    "brute_force_quotient_distance",
    "BruteForceResult",
    "MAX_POINTS",
    # 链与结构引理
    "normalize_chain",
    "chain_length",
    "timelike_chain_witness",
    "short_form_tau",
    "ShortFormResult",
    "causal_diamond",
    "DiamondReport",
    "DiamondCase",
    "GluedHalfPlanes",
    # 异常
    "AmalgamationError",
    "NotABijection",
    "TooLarge",
    "InvalidChain",
    "NotChronological",
    "UnboundedSeparation",
    "HypothesesNotMet",
]
