"""
平坦粘合定理实例

半平面 {x ≤ w} 与 {x ≥ 0} 沿带 0 ≤ x ≤ w（w = 0 时为直线 x = 0）粘合，
结果等距于 Minkowski 平面。逐项检查：

1. 有限采样上的粘合映射性质与非类时局部孤立
2. 有限商空间 τ̃ 与平面 τ 的关系（同侧相等，跨侧不超过平面值）
3. 连续模型中跨侧点对的 τ̃ 与平面闭式 τ 一致
4. K = 0 上界的曲率判定，包括跨接缝的三角形

@author Ysf
@date 2026-10-16
"""

import logging
from typing import Any, Dict, List, Tuple

import numpy as np

from lorentz_core.amalgamation import GluedHalfPlanes, QuotientSpace, build_quotient, check_map_properties
from lorentz_core.comparison import Bound, HalfPlaneRegion, TriangleReport, curvature_verdict
from lorentz_core.model import MEMBERSHIP_TOL
from lorentz_core.space import isolation_report
from lorentz_core.spacefile import properties_to_dict

from .base import Scenario, ScenarioResult
from .probes import grid_step, probe_scale
from .registry import ScenarioRegistry

logger = logging.getLogger(__name__)


def plane_tau(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Minkowski 平面闭式 τ，按行计算"""
    dt, dx = q[:, 0] - p[:, 0], q[:, 1] - p[:, 1]
    value = dt * dt - dx * dx
    chron = (dt > 0) & (value > MEMBERSHIP_TOL)
    out: np.ndarray = np.where(chron, np.sqrt(np.where(chron, value, 0.0)), 0.0)
    return out


def class_coords(quotient: QuotientSpace) -> np.ndarray:
    """每个类的代表点坐标（粘合点两侧坐标相同）"""
    spec = quotient.spec
    rows = []
    for members in quotient.classes:
        side, pid = members[0].split(".", 1)
        space = spec.x1 if side == "1" else spec.x2
        rows.append(space.coord_of(pid).ambient_coords)
    return np.array(rows, dtype=float)


@ScenarioRegistry.register("reshetnyak-flat")
class FlatGluingScenario(Scenario):
    description = "沿直线或竖直带粘合两个 Minkowski 半平面，得到平面本身（K = 0 上界成立）"

    def run(self) -> ScenarioResult:
        params = self.config.scenarios.reshetnyak
        variants = {"line": GluedHalfPlanes(0.0), "strip": GluedHalfPlanes(params.strip_width)}

        numbers: Dict[str, Any] = {}
        reports: Dict[str, Dict[str, Any]] = {}
        outcomes: List[bool] = []
        for name, glued in variants.items():
            ok, variant_numbers, variant_reports = self._variant(glued)
            outcomes.append(ok)
            numbers[name] = variant_numbers
            reports.update({f"{name}_{key}": value for key, value in variant_reports.items()})

        expected = all(outcomes)
        parameters = self.base_parameters()
        sampling = self.config.sampling
        parameters.update(
            {
                "validation_grid_size": sampling.validation_grid_size,
                "triangles": sampling.triangles,
                "pairs_per_triangle": sampling.pairs_per_triangle,
                "oracle_pairs": sampling.oracle_pairs,
                "geometry": params.model_dump(mode="json"),
            }
        )
        return self.finish(
            "glued half-planes are flat" if expected else "flat gluing check failed",
            expected,
            parameters=parameters,
            numbers=numbers,
            reports=reports,
        )

    def _variant(self, glued: GluedHalfPlanes) -> Tuple[bool, Dict[str, Any], Dict[str, Dict[str, Any]]]:
        finite_ok, finite_numbers, properties = self._finite(glued)
        oracle_error = self._oracle(glued)
        curvature = self._curvature(glued)

        tol = self.config.tolerances
        crossing = sum(
            1 for tri in curvature.triangles if {glued.sheet(v) for v in tri.vertices} >= {1, 2}
        )
        curvature_ok = curvature.passed and curvature.max_abs_defect <= tol.pipeline and crossing > 0
        numbers = {
            "strip_width": glued.strip_width,
            **finite_numbers,
            "oracle_max_error": oracle_error,
            "curvature_passed": curvature.passed,
            "curvature_max_defect": curvature.max_abs_defect,
            "triangles": len(curvature.triangles),
            "seam_crossing_triangles": crossing,
        }
        ok = finite_ok and oracle_error <= tol.metric and curvature_ok
        return ok, numbers, {"properties": properties, "curvature": curvature.to_dict()}

    def _finite(self, glued: GluedHalfPlanes) -> Tuple[bool, Dict[str, Any], Dict[str, Any]]:
        """有限采样：映射性质、孤立性与 τ̃ 对平面 τ"""
        extent = self.config.scenarios.reshetnyak.extent
        size = self.config.sampling.validation_grid_size
        tol = self.config.tolerances.metric

        spec = glued.to_spec((-extent, extent), (-extent, extent), (size, size))
        scale = probe_scale(grid_step(2 * extent, size))
        properties = check_map_properties(spec, scale=scale, tol=tol)
        quotient = build_quotient(spec, tol)
        space = quotient.as_space()
        isolation = isolation_report(space, space.points, [scale])

        # 同侧的类对 τ̃ 必须等于平面 τ；跨侧只能更小（接缝离散化）
        coords = class_coords(quotient)
        n = quotient.size
        rows, cols = np.divmod(np.arange(n * n), n)
        plane = plane_tau(coords[rows], coords[cols]).reshape(n, n)
        sides = [{m.split(".", 1)[0] for m in members} for members in quotient.classes]
        same = np.array([[bool(a & b) for b in sides] for a in sides])
        diff = quotient.tilde_tau - plane
        same_error = float(np.abs(diff[same]).max(initial=0.0))
        cross_excess = float(diff[~same].max(initial=0.0))
        cross_gap = float((-diff[~same]).max(initial=0.0))

        ok = not properties.failures() and isolation.passes(scale) and same_error <= tol and cross_excess <= tol
        numbers = {
            "classes": n,
            "map_failures": [c.name for c in properties.failures()],
            "isolation_passed": isolation.passes(scale),
            "same_side_max_error": same_error,
            "cross_side_excess": cross_excess,
            "cross_side_discretization_gap": cross_gap,
        }
        return ok, numbers, properties_to_dict(properties)

    def _oracle(self, glued: GluedHalfPlanes) -> float:
        """随机跨侧点对上连续 τ̃ 与平面闭式 τ 的最大偏差"""
        extent = self.config.scenarios.reshetnyak.extent
        count = self.config.sampling.oracle_pairs
        rng = np.random.default_rng(self.seed)

        left = np.column_stack([rng.uniform(-extent, extent, count), rng.uniform(-extent, 0.0, count)])
        right = np.column_stack(
            [rng.uniform(-extent, extent, count), rng.uniform(glued.strip_width, extent, count)]
        )
        # 一半从左到右，一半从右到左
        flip = rng.random(count) < 0.5
        p = np.where(flip[:, None], right, left)
        q = np.where(flip[:, None], left, right)

        expected = plane_tau(p, q)
        actual = np.array([glued.tau(tuple(a), tuple(b)) for a, b in zip(p, q)])
        error = float(np.abs(actual - expected).max(initial=0.0))
        logger.debug("平面预言机: %d 对, 最大偏差 %.3e", count, error)
        return error

    def _curvature(self, glued: GluedHalfPlanes) -> TriangleReport:
        extent = self.config.scenarios.reshetnyak.extent
        sampling = self.config.sampling
        region = HalfPlaneRegion(glued, box=((0.0, 2 * extent), (-extent, extent)))
        return curvature_verdict(
            region,
            0.0,
            Bound.UPPER,
            n_triangles=sampling.triangles,
            n_pairs=sampling.pairs_per_triangle,
            seed=self.seed,
            tol=self.config.tolerances.pipeline,
            jobs=self.jobs,
        )
