"""
链的规范化与类时链见证

@author Ysf
@date 2026-10-16
"""

import logging
import math
from typing import List, Tuple

from ..model import METRIC_TOL
from .errors import InvalidChain, NotChronological, UnboundedSeparation
from .quotient import QuotientCompiler, Relation
from .types import Chain, ClassLabel, GluingSpec, QuotientSpace, TimelikeChainWitness
from .union import GluingIndex

logger = logging.getLogger(__name__)


def _check(idx: GluingIndex, chain: Chain) -> List[Tuple[int, int]]:
    """
    校验链结构并返回下标形式的环节

    Raises:
        InvalidChain: 结构不合法
    """
    if not chain.pairs:
        raise InvalidChain("链至少需要一个环节")
    start, end = idx.node(chain.start), idx.node(chain.end)
    links = [(idx.node(a), idx.node(b)) for a, b in chain.pairs]
    union = idx.union

    if not idx.same_class(start, links[0][0]):
        raise InvalidChain(f"起点 {chain.start} 与 {chain.pairs[0][0]} 不等价")
    if not idx.same_class(links[-1][1], end):
        raise InvalidChain(f"{chain.pairs[-1][1]} 与终点 {chain.end} 不等价")
    for k, (a, b) in enumerate(links):
        if idx.side[a] != idx.side[b] or not union.causal[a, b]:
            raise InvalidChain(f"第 {k + 1} 个环节 {chain.pairs[k][0]} ≤ {chain.pairs[k][1]} 不成立")
        if k + 1 < len(links) and not idx.same_class(b, links[k + 1][0]):
            raise InvalidChain(f"{chain.pairs[k][1]} 与 {chain.pairs[k + 1][0]} 不等价")
    return links


def chain_length(spec: GluingSpec, chain: Chain) -> float:
    """Σ τ(x_i, y_i)，同时校验链结构"""
    idx = spec.index
    links = _check(idx, chain)
    return float(sum(idx.union.tau[a, b] for a, b in links))


def normalize_chain(spec: GluingSpec, chain: Chain) -> Chain:
    """
    规范化链

    1. 端点固定：x₁ ≠ x 时前置 (x, x)，y_n ≠ y 时后置 (y, y)
    2. 合并平凡连接：y_i = x_{i+1} 时由 ≤ 的传递性合并为 (x_i, y_{i+1})，
       反向三角不等式保证长度不减

    Raises:
        InvalidChain: 输入链结构不合法
    """
    idx = spec.index
    links = _check(idx, chain)
    start, end = idx.node(chain.start), idx.node(chain.end)

    if links[0][0] != start:
        links.insert(0, (start, start))
    if links[-1][1] != end:
        links.append((end, end))

    merged = [links[0]]
    for a, b in links[1:]:
        pa, pb = merged[-1]
        if pb == a:
            merged[-1] = (pa, b)
        else:
            merged.append((a, b))

    union = idx.union
    out = Chain(
        start=chain.start,
        end=chain.end,
        pairs=tuple((union.points[a], union.points[b]) for a, b in merged),
        length=float(sum(union.tau[a, b] for a, b in merged)),
    )
    _check(idx, out)
    return out


def timelike_chain_witness(
    quotient: QuotientSpace,
    spec: GluingSpec,
    x: ClassLabel,
    y: ClassLabel,
    tol: float = METRIC_TOL,
) -> TimelikeChainWitness:
    """
    每个环节都满足 x_i ≪ y_i 的最长链

    在有限空间上按 ≪ 重新编译链图，返回最优类时链及其与 τ̃ 的差距。

    Raises:
        NotChronological: τ̃([x],[y]) = 0，或不存在类时链
        UnboundedSeparation: τ̃([x],[y]) = ∞
    """
    value = quotient.tau(x, y)
    if math.isinf(value):
        raise UnboundedSeparation(f"τ̃({x},{y}) = ∞")
    if value <= 0:
        raise NotChronological(f"τ̃({x},{y}) = 0")

    compiled = QuotientCompiler(spec, Relation.CHRON, tol).compile()
    i, j = quotient.index(x), quotient.index(y)
    u, v = quotient.classes[i][0], quotient.classes[j][0]
    uu, vv = spec.index.node(u), spec.index.node(v)
    best = float(compiled.node_tau[uu, vv])
    if best <= 0:
        raise NotChronological(f"{x} 与 {y} 之间没有类时链")

    chain = compiled.witness(u, v)
    if not isinstance(chain, Chain):
        raise UnboundedSeparation(f"类时链长度无界: {x} → {y}")
    gap = max(0.0, value - chain.length)
    logger.debug("类时链 %s → %s: %d 个环节, 差距 %.3e", x, y, chain.hops, gap)
    return TimelikeChainWitness(chain=chain, gap=gap)
