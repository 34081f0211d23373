"""
模型空间三角形

余弦定律、尺寸界检查、规范放置的比较三角形实现，以及由三条
带符号边长实现任意因果类型三角形的 Gram 矩阵方法。

规范放置：过去顶点 x 位于原点，最长边 [x,z] 沿时间轴，y 位于右半平面。

@author Ysf
@date 2026-10-16
"""

import logging
import math
from typing import Tuple, Union

import numpy as np

from .base import MEMBERSHIP_TOL, METRIC_TOL, ModelSpace
from .errors import ReverseTriangleViolated, SizeBoundViolated, UnrealizableTriple
from .factory import get_model, timelike_diameter
from .types import ModelPoint, SideLengths, SignedValue

logger = logging.getLogger(__name__)

Triangle = Tuple[ModelPoint, ModelPoint, ModelPoint]


def law_of_cosines_third_side(K: float, a: float, b: float, omega: float) -> float:
    """
    余弦定律：铰链位于中间顶点 y，a = τ(x,y)，b = τ(y,z)，omega 为 y 处双曲角

    K=0:  c² = a² + b² + 2ab·cosh ω
    K>0:  cosh c = cosh a·cosh b + sinh a·sinh b·cosh ω   (单位模型)
    K<0:  cos c = cos a·cos b - sin a·sin b·cosh ω         (单位模型)

    Returns:
        float: 最长边 c = τ(x,z)

    Raises:
        SizeBoundViolated: 结果超出 M_K 的尺寸界
    """
    if a < 0 or b < 0 or omega < 0:
        raise ValueError(f"边长与角度必须非负: a={a}, b={b}, omega={omega}")
    if K == 0:
        return math.sqrt(a * a + b * b + 2.0 * a * b * math.cosh(omega))

    R = 1.0 / math.sqrt(abs(K))
    ua, ub = a / R, b / R
    if K > 0:
        c = R * math.acosh(
            math.cosh(ua) * math.cosh(ub) + math.sinh(ua) * math.sinh(ub) * math.cosh(omega)
        )
    else:
        if ua + ub >= math.pi:
            raise SizeBoundViolated(f"两短边之和 {a + b} 超出 anti-de Sitter 时间直径 {math.pi * R}")
        v = math.cos(ua) * math.cos(ub) - math.sin(ua) * math.sin(ub) * math.cosh(omega)
        if v <= -1.0:
            raise SizeBoundViolated(f"夹角 {omega} 过大，第三边超出 anti-de Sitter 时间直径")
        c = R * math.acos(v)
    if c >= timelike_diameter(K):
        raise SizeBoundViolated(f"第三边 {c} 不满足 c < π/√|K|")
    return c


def size_bounds_check(K: float, sides: SideLengths, tol: float = METRIC_TOL) -> bool:
    """
    检查边长是否满足 M_K 的尺寸界（退化三角形 c = a + b 视为可实现）

    Returns:
        bool: 比较三角形是否存在
    """
    a, b, c = sides.as_tuple()
    if not all(math.isfinite(v) and v >= 0 for v in (a, b, c)):
        return False
    if c < a + b - tol:
        return False
    return c < timelike_diameter(K)


def realize_triangle(K: float, sides: SideLengths, tol: float = METRIC_TOL) -> Triangle:
    """
    在 M_K 中规范放置比较三角形

    Args:
        K: 曲率
        sides: 三边 τ 长度
        tol: 反向三角不等式容差

    Returns:
        (x, y, z): 两两 τ 复现 (a, b, c)

    Raises:
        ReverseTriangleViolated: c < a + b
        SizeBoundViolated: c >= π/√|K|
    """
    a, b, c = sides.as_tuple()
    if not all(math.isfinite(v) and v >= 0 for v in (a, b, c)):
        raise ReverseTriangleViolated(f"边长必须为非负有限数: {sides}")
    if c < a + b - tol:
        raise ReverseTriangleViolated(f"c={c} < a+b={a + b}")
    if c >= timelike_diameter(K):
        raise SizeBoundViolated(f"最长边 {c} 超出 π/√|K| = {timelike_diameter(K)}")

    model = get_model(K)
    R = model.radius
    x = model.origin()
    z = model.time_axis(c)
    if c == 0:
        return x, x, x

    ua, ub, uc = a / R, b / R, c / R
    if a == 0:
        y = _null_vertex_after_origin(K, ub, uc)
    elif b == 0:
        y = _reflect_time(K, uc, _null_vertex_after_origin(K, ua, uc))
    else:
        y = _place_middle_vertex(K, ua, ub, uc)
    return x, model.project(R * y), z


def _place_middle_vertex(K: float, a: float, b: float, c: float) -> np.ndarray:
    """单位模型中 y 的坐标（非退化）"""
    if K == 0:
        ch = (a * a + c * c - b * b) / (2.0 * a * c)
    elif K > 0:
        ch = (math.cosh(a) * math.cosh(c) - math.cosh(b)) / (math.sinh(a) * math.sinh(c))
    else:
        ch = (math.cos(b) - math.cos(a) * math.cos(c)) / (math.sin(a) * math.sin(c))
    ch = max(ch, 1.0)
    sh = math.sqrt(ch * ch - 1.0)
    if K == 0:
        return np.array([a * ch, a * sh])
    if K > 0:
        return np.array([math.sinh(a) * ch, math.cosh(a), math.sinh(a) * sh])
    return np.array([math.cos(a), math.sin(a) * ch, math.sin(a) * sh])


def _null_vertex_after_origin(K: float, b: float, c: float) -> np.ndarray:
    """a = 0：y 位于原点的未来右行光线上，τ(y, z) = b"""
    if K == 0:
        u = (c * c - b * b) / (2.0 * c)
        return np.array([u, u])
    if K > 0:
        u = (math.cosh(c) - math.cosh(b)) / math.sinh(c)
        return np.array([u, 1.0, u])
    u = (math.cos(b) - math.cos(c)) / math.sin(c)
    return np.array([1.0, u, u])


def _reflect_time(K: float, c: float, y: np.ndarray) -> np.ndarray:
    """关于时间轴上 c/2 处的时间反射（交换原点与 time_axis(c)），保持空间侧"""
    if K == 0:
        return np.array([c - y[0], y[1]])
    h = c / 2.0
    if K > 0:
        # boost(h) ∘ T ∘ boost(-h)
        x0 = y[0] * math.cosh(h) - y[1] * math.sinh(h)
        x1 = -y[0] * math.sinh(h) + y[1] * math.cosh(h)
        x0 = -x0
        return np.array([
            x0 * math.cosh(h) + x1 * math.sinh(h),
            x0 * math.sinh(h) + x1 * math.cosh(h),
            y[2],
        ])
    # rot(h) ∘ T ∘ rot(-h)
    x0 = y[0] * math.cos(h) + y[1] * math.sin(h)
    x1 = -y[0] * math.sin(h) + y[1] * math.cos(h)
    x1 = -x1
    return np.array([
        x0 * math.cos(h) - x1 * math.sin(h),
        x0 * math.sin(h) + x1 * math.cos(h),
        y[2],
    ])


def _signed(v: Union[SignedValue, float]) -> float:
    return v.value if isinstance(v, SignedValue) else float(v)


def realize_signed_triangle(
    K: float,
    s_pq: Union[SignedValue, float],
    s_qr: Union[SignedValue, float],
    s_pr: Union[SignedValue, float],
    tol: float = METRIC_TOL,
) -> Triangle:
    """
    由三条带符号距离实现三角形 (p, q, r)

    通过 Gram 矩阵分解求解，允许任意边为类空或类光。若 [p,q] 为因果的，
    结果使其指向未来。

    Raises:
        UnrealizableTriple: Gram 矩阵签名与模型不兼容
    """
    model = get_model(K)
    R = model.radius
    s = [_signed(s_pq) / R, _signed(s_qr) / R, _signed(s_pr) / R]
    for v in s:
        if not math.isfinite(v):
            raise UnrealizableTriple(f"带符号边长必须有限: {s}")

    if K == 0:
        sq = [math.copysign(v * v, v) for v in s]
        g_vw = (sq[0] + sq[2] - sq[1]) / 2.0
        gram = np.array([[sq[0], g_vw], [g_vw, sq[2]]])
        slots = [-1.0, 1.0]
    else:
        gram = np.empty((3, 3))
        level = 1.0 if K > 0 else -1.0
        np.fill_diagonal(gram, level)
        pairs = {(0, 1): s[0], (1, 2): s[1], (0, 2): s[2]}
        for (i, j), v in pairs.items():
            gram[i, j] = gram[j, i] = _ambient_pairing(K, v)
        slots = [-1.0, 1.0, 1.0] if K > 0 else [-1.0, -1.0, 1.0]

    lam, vecs = np.linalg.eigh(gram)
    scale = max(1.0, float(np.max(np.abs(lam))))
    # 升序特征值依次填入签名槽位（负槽在前）
    for value, slot in zip(lam, slots):
        if value * slot < -tol * scale:
            raise UnrealizableTriple(
                f"带符号边长 ({_signed(s_pq)}, {_signed(s_qr)}, {_signed(s_pr)}) "
                f"在 K={K} 中不可实现 (Gram 特征值 {lam.tolist()})"
            )
    coords = np.sqrt(np.abs(lam))[:, None] * vecs.T

    if K == 0:
        v, w = coords[:, 0], coords[:, 1]
        pts = [np.zeros(2), v, w]
    else:
        pts = [coords[:, 0], coords[:, 1], coords[:, 2]]

    p, q, r = (model.project(R * np.asarray(u)) for u in pts)
    if _needs_time_reversal(model, p, q, r):
        p, q, r = (_time_reverse(model, x) for x in (p, q, r))
    return p, q, r


def _ambient_pairing(K: float, s: float) -> float:
    """单位模型中带符号距离 s 对应的 ⟨p, q⟩"""
    if K > 0:
        if s < 0:
            return math.cosh(-s)
        return math.cos(s) if s > 0 else 1.0
    if s < 0:
        return -math.cos(-s)
    return -math.cosh(s) if s > 0 else -1.0


def _needs_time_reversal(model: ModelSpace, p: ModelPoint, q: ModelPoint, r: ModelPoint) -> bool:
    for a, b in ((p, q), (p, r), (q, r)):
        v = model.log(a, b)
        if model.inner(v, v) <= 0 and float(np.max(np.abs(v))) > METRIC_TOL:
            return not model.is_future(a, v)
    return False


def _time_reverse(model: ModelSpace, p: ModelPoint) -> ModelPoint:
    c = list(p.ambient_coords)
    if model.curvature < 0:
        c[1] = -c[1]
    else:
        c[0] = -c[0]
    return ModelPoint(tuple(c), p.curvature)


def realize_adjacent_vertex(
    K: float,
    a: ModelPoint,
    b: ModelPoint,
    s_a: Union[SignedValue, float],
    s_b: Union[SignedValue, float],
    opposite_to: ModelPoint,
    tol: float = METRIC_TOL,
) -> ModelPoint:
    """
    在测地线 (a, b) 另一侧放置第三个顶点 c，使 |ac|± = s_a，|bc|± = s_b

    两个配对约束给出一条直线，与模型超二次曲面求交得到关于该测地线对称的两个解，
    取与 opposite_to 异侧的一个。[a,b] 为类光时只有一个解。

    Raises:
        UnrealizableTriple: 无实解，或解与 opposite_to 同侧
    """
    model = get_model(K)
    R = model.radius
    eta = model.metric
    va, vb = a.vec / R, b.vec / R
    sa, sb = _signed(s_a) / R, _signed(s_b) / R

    # 1. 线性约束与二次约束
    if K == 0:
        u = vb - va
        A = math.copysign(sa * sa, sa)
        B = math.copysign(sb * sb, sb)
        rows = np.array([eta @ u])
        rhs = np.array([(A + float(u @ eta @ u) - B) / 2.0])
        base, level = va, A
    else:
        rows = np.array([eta @ va, eta @ vb])
        rhs = np.array([_ambient_pairing(K, sa), _ambient_pairing(K, sb)])
        base, level = np.zeros(3), float(va @ eta @ va)

    # 2. 直线 w = w0 + λd 与 ⟨w,w⟩ = level 求交
    w0 = np.linalg.lstsq(rows, rhs, rcond=None)[0]
    d = np.linalg.svd(rows)[2][-1]
    alpha = float(d @ eta @ d)
    beta = 2.0 * float(w0 @ eta @ d)
    gamma = float(w0 @ eta @ w0) - level
    if abs(alpha) <= MEMBERSHIP_TOL:
        if abs(beta) <= MEMBERSHIP_TOL:
            raise UnrealizableTriple("类光边的配对约束退化，无法放置第三个顶点")
        roots = [-gamma / beta]
    else:
        disc = beta * beta - 4.0 * alpha * gamma
        if disc < -tol * max(1.0, beta * beta):
            raise UnrealizableTriple(f"带符号距离 ({_signed(s_a)}, {_signed(s_b)}) 在 K={K} 中无实解")
        root = math.sqrt(max(disc, 0.0))
        roots = [(-beta + root) / (2.0 * alpha), (-beta - root) / (2.0 * alpha)]

    # 3. 按侧向选解
    side = model.orientation(a, b, opposite_to)
    if abs(side) <= MEMBERSHIP_TOL:
        raise UnrealizableTriple("参照点位于测地线 (a, b) 上，无法区分两侧")
    for lam in roots:
        c = model.project(R * (base + w0 + lam * d))
        if model.orientation(a, b, c) * side < 0:
            return c
    raise UnrealizableTriple("约束的解与参照点位于同一侧")
