"""
商时间分离编译器

链 x ∼ x₁ ≤ y₁ ∼ … ≤ y_n ∼ y 对应不相交并上的路径：同一空间内的 ≤ 边权为 τ，
粘合边权为 0 且双向。输入空间满足反向三角不等式时，块内连续的 ≤ 步可以合并，
因此只需在接缝点上求最长路径：

    τ̃(u, v) = max( τ(u, v),  max_{a,b ∈ 接缝} τ(u, a) + L(a, b) + τ(b, v) )

L 由接缝图的强连通分量凝聚后在 DAG 上做最长路径得到。含正权边的分量上可以无限绕行，
经过它的所有对 τ̃ = ∞。

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..model import METRIC_TOL
from .properties import check_map_properties
from .types import Chain, CycleCertificate, GluingSpec, NodeId, QuotientSpace, Witness
from .union import GluingIndex, check_bijection

logger = logging.getLogger(__name__)


class Relation(str, Enum):
    """编译链时使用的块内关系"""

    CAUSAL = "causal"
    CHRON = "chron"


def max_plus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(max, +) 矩阵乘积，-∞ 为零元；-∞ + ∞ 视为 -∞"""
    out = np.full((a.shape[0], b.shape[1]), -np.inf)
    with np.errstate(invalid="ignore"):
        for k in range(a.shape[1]):
            col = a[:, k]
            if not (col > -np.inf).any():
                continue
            np.fmax(out, col[:, None] + b[k][None, :], out=out)
    return out


def min_plus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(min, +) 矩阵乘积，+∞ 为零元"""
    out = np.full((a.shape[0], b.shape[1]), np.inf)
    for k in range(a.shape[1]):
        col = a[:, k]
        if not np.isfinite(col).any():
            continue
        np.fmin(out, col[:, None] + b[k][None, :], out=out)
    return out


@dataclass(eq=False)
class CompiledChains:
    """
    编译结果：点级 τ̃、可达性，以及重建见证所需的接缝图

    点下标均为不相交并中的下标。
    """

    index: GluingIndex
    relation: Relation
    node_tau: np.ndarray
    node_reach: np.ndarray
    graph: nx.DiGraph
    scc_of: np.ndarray
    positive_edge: Dict[int, Tuple[int, int]]
    longest: np.ndarray
    best_edge: Dict[Tuple[int, int], Tuple[int, int, float]]
    enter: np.ndarray
    leave: np.ndarray
    direct: np.ndarray
    tol: float = METRIC_TOL
    _condensed: Optional[nx.DiGraph] = field(default=None, repr=False)

    # ==================== 见证 ====================

    def witness(self, x: NodeId, y: NodeId) -> Witness:
        """点级见证：链、正环证书或 None（无链）"""
        u, v = self.index.node(x), self.index.node(y)
        if not self.node_reach[u, v]:
            return None
        best = self.node_tau[u, v]
        if np.isinf(best):
            return self._certificate(u, v)
        return self._chain_from_path(u, v, self._best_path(u, v, best))

    def _seam_node(self, local: int) -> int:
        return int(self.index.seam[local])

    def _best_path(self, u: int, v: int, best: float) -> List[int]:
        if self.direct[u, v] >= best - self.tol:
            return [u, v]
        with np.errstate(invalid="ignore"):
            through = self.enter[u][:, None] + self.longest_local + self.leave[:, v][None, :]
        through = np.where(np.isnan(through), -np.inf, through)
        i, j = np.unravel_index(int(np.argmax(through)), through.shape)
        path = [u] + [self._seam_node(k) for k in self._seam_path(int(i), int(j))] + [v]
        # 去掉相邻重复点（u 本身是接缝点时）
        out = [path[0]]
        for node in path[1:]:
            if node != out[-1]:
                out.append(node)
        return out

    @property
    def longest_local(self) -> np.ndarray:
        out: np.ndarray = self.longest[np.ix_(self.scc_of, self.scc_of)]
        return out

    def _route_inside(self, a: int, b: int) -> List[int]:
        """同一强连通分量内 a 到 b 的路径（分量内非正时边权全为 0）"""
        if a == b:
            return [a]
        members = [k for k in self.graph.nodes if self.scc_of[k] == self.scc_of[a]]
        path: List[int] = nx.shortest_path(self.graph.subgraph(members), a, b)
        return path

    def _seam_path(self, i: int, j: int) -> List[int]:
        """接缝图上 i 到 j 的最长路径（局部下标）"""
        target = int(self.scc_of[j])
        cur_node, cur = i, int(self.scc_of[i])
        path: List[int] = []
        while cur != target:
            goal = self.longest[cur, target]
            nxt = None
            for succ in self.condensed.successors(cur):
                p, q, w = self.best_edge[(cur, succ)]
                if w + self.longest[succ, target] >= goal - self.tol:
                    nxt = (succ, p, q)
                    break
            if nxt is None:
                raise RuntimeError(f"最长路径重建失败: {i} -> {j}")
            succ, p, q = nxt
            path.extend(self._route_inside(cur_node, p))
            cur_node, cur = q, succ
        path.extend(self._route_inside(cur_node, j))
        return path

    @property
    def condensed(self) -> nx.DiGraph:
        if self._condensed is None:
            comps: Dict[int, set] = {}
            for node in self.graph.nodes:
                comps.setdefault(int(self.scc_of[node]), set()).add(node)
            self._condensed = nx.condensation(self.graph, scc=[comps[k] for k in sorted(comps)])
        return self._condensed

    def _chain_from_path(self, u: int, v: int, path: List[int]) -> Chain:
        union = self.index.union
        links = [(a, b) for a, b in zip(path, path[1:]) if self.index.side[a] == self.index.side[b]]
        if not links:
            links = [(u, u)]
        length = float(sum(union.tau[a, b] for a, b in links))
        return Chain(
            start=union.points[u],
            end=union.points[v],
            pairs=tuple((union.points[a], union.points[b]) for a, b in links),
            length=length,
        )

    def _certificate(self, u: int, v: int) -> CycleCertificate:
        reach = self.longest > -np.inf
        for s, (p, q) in sorted(self.positive_edge.items()):
            via_entry = (self.enter[u] > -np.inf) & reach[self.scc_of, s]
            via_exit = reach[s, self.scc_of] & (self.leave[:, v] > -np.inf)
            if via_entry.any() and via_exit.any():
                back = self._route_inside(q, p)
                cycle = [p] + back
                nodes = [self._seam_node(k) for k in cycle]
                weight = float(sum(self.graph.edges[a, b]["weight"] for a, b in zip(cycle, cycle[1:])))
                union = self.index.union
                return CycleCertificate(tuple(union.points[k] for k in nodes), weight)
        raise RuntimeError("τ̃ = ∞ 但未找到正环")


class QuotientCompiler:
    """
    商空间编译器

    使用方式：
        compiler = QuotientCompiler(spec)
        chains = compiler.compile()
    """

    def __init__(self, spec: GluingSpec, relation: Relation = Relation.CAUSAL, tol: float = METRIC_TOL):
        self.spec = spec
        self.relation = relation
        self.tol = tol

    def compile(self) -> CompiledChains:
        idx = self.spec.index
        union = idx.union
        rel = union.causal if self.relation == Relation.CAUSAL else union.chron
        tau = union.tau
        seam = idx.seam
        k = len(seam)
        n = union.size

        # 1. 接缝图
        graph = nx.DiGraph()
        graph.add_nodes_from(range(k))
        sub_rel = rel[np.ix_(seam, seam)]
        sub_tau = tau[np.ix_(seam, seam)]
        for a, b in np.argwhere(sub_rel):
            a, b = int(a), int(b)
            if a == b and sub_tau[a, b] <= 0:
                continue
            graph.add_edge(a, b, weight=float(sub_tau[a, b]))
        local = {int(g): i for i, g in enumerate(seam)}
        for g in seam:
            graph.add_edge(local[int(g)], local[int(idx.partner[g])], weight=0.0)

        # 2. 强连通分量凝聚
        comps = list(nx.strongly_connected_components(graph))
        scc_of = np.zeros(k, dtype=int)
        for c, members in enumerate(comps):
            for m in members:
                scc_of[m] = c
        condensed = nx.condensation(graph, scc=comps)
        n_scc = len(comps)

        positive_edge: Dict[int, Tuple[int, int]] = {}
        best_edge: Dict[Tuple[int, int], Tuple[int, int, float]] = {}
        for a, b, data in graph.edges(data=True):
            w = data["weight"]
            s, t = int(scc_of[a]), int(scc_of[b])
            if s == t:
                if w > 0 and s not in positive_edge:
                    positive_edge[s] = (a, b)
            elif (s, t) not in best_edge or w > best_edge[(s, t)][2]:
                best_edge[(s, t)] = (a, b, w)

        # 3. DAG 上的全源最长路径，经过正分量即为 ∞
        longest = np.full((n_scc, n_scc), -np.inf)
        for s in reversed(list(nx.topological_sort(condensed))):
            row = np.full(n_scc, -np.inf)
            row[s] = 0.0
            for t in condensed.successors(s):
                row = np.fmax(row, best_edge[(s, t)][2] + longest[t])
            if s in positive_edge:
                row[row > -np.inf] = np.inf
            longest[s] = row
        seam_longest = longest[np.ix_(scc_of, scc_of)]

        # 4. 进出接缝与 (max, +) 乘积
        at_seam = np.zeros((n, k), dtype=bool)
        at_seam[seam, np.arange(k)] = True
        enter = np.where(rel[:, seam] | at_seam, tau[:, seam], -np.inf)
        leave = np.where(rel[seam, :] | at_seam.T, tau[seam, :], -np.inf)
        direct = np.where(rel, tau, -np.inf)
        through = max_plus(enter, max_plus(seam_longest, leave))
        node_best = np.fmax(direct, through)

        node_reach = node_best > -np.inf
        node_tau = np.where(node_reach, node_best, 0.0)
        logger.debug(
            "链图 (%s): %d 个接缝点, %d 条边, %d 个强连通分量, %d 个正分量",
            self.relation.value, k, graph.number_of_edges(), n_scc, len(positive_edge),
        )
        return CompiledChains(
            index=idx,
            relation=self.relation,
            node_tau=node_tau,
            node_reach=node_reach,
            graph=graph,
            scc_of=scc_of,
            positive_edge=positive_edge,
            longest=longest,
            best_edge=best_edge,
            enter=enter,
            leave=leave,
            direct=direct,
            tol=self.tol,
            _condensed=condensed,
        )

    def compile_distance(self) -> np.ndarray:
        """
        点级商半度量 d̃：粘合边权 0 的最短路径

        跨块距离为 +∞，因此只需在接缝图上跑 Dijkstra 再做 (min, +) 乘积。
        """
        idx = self.spec.index
        union = idx.union
        seam = idx.seam
        k = len(seam)

        graph = nx.Graph()
        graph.add_nodes_from(range(k))
        sub_d = union.d[np.ix_(seam, seam)]
        for a, b in np.argwhere(np.isfinite(sub_d)):
            if a < b:
                graph.add_edge(int(a), int(b), weight=float(sub_d[a, b]))
        local = {int(g): i for i, g in enumerate(seam)}
        for g in seam:
            graph.add_edge(local[int(g)], local[int(idx.partner[g])], weight=0.0)

        seam_dist = np.full((k, k), np.inf)
        for a, lengths in nx.all_pairs_dijkstra_path_length(graph, weight="weight"):
            for b, value in lengths.items():
                seam_dist[a, b] = value

        to_seam = union.d[:, seam]
        through = min_plus(min_plus(to_seam, seam_dist), to_seam.T)
        out: np.ndarray = np.fmin(union.d, through)
        return out


def build_quotient(spec: GluingSpec, tol: float = METRIC_TOL) -> QuotientSpace:
    """
    构造商空间

    Args:
        spec: 粘合规格
        tol: 数值容差

    Returns:
        QuotientSpace: 类级 d̃、τ̃、≪̃、≤̃ 以及按需重建的见证

    Raises:
        NotABijection: 粘合对不构成双射
    """
    check_bijection(spec)
    warnings: List[str] = []
    if spec.declared.declared():
        report = check_map_properties(spec)
        warnings.extend(report.warnings)

    compiler = QuotientCompiler(spec, Relation.CAUSAL, tol)
    chains = compiler.compile()
    node_d = compiler.compile_distance()

    idx = spec.index
    reps = np.array([members[0] for members in idx.classes], dtype=int)
    grid = np.ix_(reps, reps)
    tilde_tau = np.array(chains.node_tau[grid])
    tilde_causal = np.array(chains.node_reach[grid])
    tilde_d = np.array(node_d[grid])
    np.fill_diagonal(tilde_d, 0.0)

    quotient = QuotientSpace(
        spec=spec,
        labels=idx.labels,
        classes=tuple(tuple(idx.union.points[m] for m in members) for members in idx.classes),
        tilde_d=tilde_d,
        tilde_tau=tilde_tau,
        tilde_chron=tilde_tau > 0,
        tilde_causal=tilde_causal,
        warnings=tuple(warnings),
        _chains=chains,
    )
    n_inf = int(np.isinf(tilde_tau).sum())
    if n_inf:
        logger.info("商空间含 %d 对 τ̃ = ∞", n_inf)
    return quotient
