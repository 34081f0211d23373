"""
报告序列化

把验证结果、商空间、见证与菱形报告转成可直接写出的 JSON 字典。
∞ 写作 "inf"，键顺序固定。

@author Ysf
@date 2026-10-16
"""

import math
from dataclasses import asdict
from typing import Any, Dict, List, Optional, Union

import numpy as np

from ..amalgamation import (
    Chain,
    CycleCertificate,
    DiamondReport,
    MapPropertyReport,
    QuotientSpace,
    ShortFormResult,
    Witness,
)
from ..space import ValidationResult
from .loader import dump_space


def json_float(value: float) -> Union[float, str]:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(value)


def validation_to_dict(result: ValidationResult) -> Dict[str, Any]:
    return {
        "success": result.success,
        "axioms": result.axioms(),
        "errors": [
            {"axiom": e.axiom, "message": e.message, "witness": list(e.witness)} for e in result.errors
        ],
        "warnings": [asdict(w) for w in result.warnings],
    }


def witness_to_dict(witness: Witness) -> Optional[Dict[str, Any]]:
    """链或正环证书"""
    if isinstance(witness, Chain):
        return {
            "kind": "chain",
            "start": witness.start,
            "end": witness.end,
            "pairs": [list(p) for p in witness.pairs],
            "length": json_float(witness.length),
        }
    if isinstance(witness, CycleCertificate):
        return {"kind": "cycle", "cycle": list(witness.cycle), "weight": json_float(witness.weight)}
    return None


def quotient_to_dict(quotient: QuotientSpace, witnesses: bool = True) -> Dict[str, Any]:
    """
    商空间报告

    顶层即一个空间文件（点为类标签），可直接交给 validate；
    附加 classes、warnings 以及 τ̃ > 0 的类对的见证。
    """
    out = dump_space(quotient.as_space())
    out["classes"] = {label: list(members) for label, members in zip(quotient.labels, quotient.classes)}
    out["warnings"] = list(quotient.warnings)
    out["infinite_pairs"] = int(np.isinf(quotient.tilde_tau).sum())
    if witnesses:
        records: List[Dict[str, Any]] = []
        for i, j in np.argwhere(quotient.tilde_chron):
            x, y = quotient.labels[int(i)], quotient.labels[int(j)]
            records.append(
                {
                    "from": x,
                    "to": y,
                    "tau": json_float(float(quotient.tilde_tau[i, j])),
                    "witness": witness_to_dict(quotient.witness(x, y)),
                }
            )
        out["witnesses"] = records
    return out


def short_form_to_dict(result: ShortFormResult) -> Dict[str, Any]:
    return {"value": json_float(result.value), "seam_class": result.seam_class}


def diamond_to_dict(report: DiamondReport) -> Dict[str, Any]:
    return {
        "case": report.case.value,
        "diamond": list(report.diamond),
        "expected": list(report.expected),
        "holds": report.holds,
        "leq_preserving": report.leq_preserving,
    }


def properties_to_dict(report: MapPropertyReport) -> Dict[str, Any]:
    return {
        "checks": {
            name: {"passed": c.passed, "witness": list(c.witness), "detail": c.detail}
            for name, c in report.checks.items()
        },
        "inverse": dict(report.inverse),
        "lipschitz_constant": json_float(report.lipschitz_constant),
        "scale": report.scale,
        "warnings": list(report.warnings),
    }
