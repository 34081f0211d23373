"""
lorentz-glue 命令行主入口

子命令: validate | glue | tau | diamond | curvature | scenario | lens
报告一律为 JSON，写到 stdout 或 --out；日志写到 stderr。

退出码:
    0  正常
    1  解析或结构错误
    2  公理违例、曲率界违例或场景结果与预期不符

@author Ysf
@date 2026-10-16
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

from lorentz_core.amalgamation import AmalgamationError, build_quotient, causal_diamond, check_map_properties
from lorentz_core.comparison import (
    Bound,
    ComparisonError,
    FiniteRegion,
    ModelRegion,
    QuotientRegion,
    Region,
    curvature_verdict,
)
from lorentz_core.config import LOG_LEVEL_ENV, ConfigError, ConfigLoader, LorentzConfig
from lorentz_core.model import ModelSpaceError, get_model
from lorentz_core.space import SpaceError, validate_space
from lorentz_core.spacefile import (
    SpaceFileError,
    diamond_to_dict,
    json_float,
    load_gluing,
    load_space,
    parse_space,
    properties_to_dict,
    quotient_to_dict,
    read_document,
    to_json,
    validation_to_dict,
    witness_to_dict,
    write_json,
)

from .lens import Lens
from .scenarios import ScenarioError, ScenarioRegistry, ScenarioResult

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2

# 映射为退出码 1 的异常
INPUT_ERRORS = (
    SpaceFileError,
    ConfigError,
    AmalgamationError,
    SpaceError,
    ModelSpaceError,
    ComparisonError,
    ScenarioError,
    ValueError,
)


@dataclass
class CommandResult:
    """子命令结果"""

    payload: Dict[str, Any]
    exit_code: int = EXIT_OK


class CliArgumentParser(argparse.ArgumentParser):
    """参数错误按输入错误处理（退出码 1）"""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class LorentzCli:
    """
    命令分发

    与配置档、种子、并行度绑定；每个子命令返回 CommandResult。
    """

    def __init__(self, args: argparse.Namespace, config: LorentzConfig):
        self.args = args
        self.config = config
        self.seed = ConfigLoader.resolve_seed(config, args.seed)
        self.jobs = args.jobs or config.sampling.jobs

        # 命令映射
        self._commands: Dict[str, Callable[[], CommandResult]] = {
            "validate": self._handle_validate,
            "glue": self._handle_glue,
            "tau": self._handle_tau,
            "diamond": self._handle_diamond,
            "curvature": self._handle_curvature,
            "scenario": self._handle_scenario,
            "lens": self._handle_lens,
        }

    def run(self) -> int:
        handler = self._commands[self.args.command]
        result = handler()
        self._emit(result.payload)
        return result.exit_code

    def _emit(self, payload: Dict[str, Any]) -> None:
        """写出报告；scenario 的 --out 是目录，已单独写出，这里只打印摘要"""
        out = getattr(self.args, "out", None)
        if out and self.args.command != "scenario":
            write_json(payload, out, self.args.pretty)
            logger.info("报告已写入 %s", out)
            return
        sys.stdout.write(to_json(payload, self.args.pretty) + "\n")

    def _tol(self) -> float:
        tol = getattr(self.args, "tol", None)
        return tol if tol is not None else self.config.tolerances.metric

    # ==================== 空间与粘合 ====================

    def _handle_validate(self) -> CommandResult:
        space = load_space(self.args.file)
        result = validate_space(space, self._tol())
        return CommandResult(validation_to_dict(result), EXIT_OK if result.success else EXIT_VIOLATION)

    def _handle_glue(self) -> CommandResult:
        spec = load_gluing(self.args.file)
        quotient = build_quotient(spec, self._tol())
        payload = quotient_to_dict(quotient, witnesses=not self.args.no_witnesses)
        if self.args.properties:
            payload["properties"] = properties_to_dict(check_map_properties(spec, tol=self._tol()))
        return CommandResult(payload)

    def _handle_tau(self) -> CommandResult:
        quotient = build_quotient(load_gluing(self.args.file), self._tol())
        x, y = self.args.x, self.args.y
        payload = {
            "from": quotient.label_of(x),
            "to": quotient.label_of(y),
            "tau": json_float(quotient.tau(x, y)),
            "leq": quotient.leq(x, y),
            "ll": quotient.ll(x, y),
            "d": json_float(quotient.d(x, y)),
            "witness": witness_to_dict(quotient.witness(x, y)),
        }
        return CommandResult(payload)

    def _handle_diamond(self) -> CommandResult:
        quotient = build_quotient(load_gluing(self.args.file), self._tol())
        report = causal_diamond(quotient, self.args.x, self.args.y)
        payload = {"from": quotient.label_of(self.args.x), "to": quotient.label_of(self.args.y)}
        payload.update(diamond_to_dict(report))
        return CommandResult(payload, EXIT_VIOLATION if report.holds is False else EXIT_OK)

    # ==================== 曲率 ====================

    def _region(self) -> Region:
        """文件含 x1 键时按粘合规格处理，否则按空间文件；未给文件时取模型空间图坐标矩形"""
        tol = self._tol()
        if self.args.file is None:
            return ModelRegion(get_model(self.args.model_K))
        data = read_document(self.args.file)
        if "x1" in data:
            return QuotientRegion(build_quotient(load_gluing(self.args.file), tol), tol)
        return FiniteRegion(parse_space(data, str(self.args.file)), tol)

    def _handle_curvature(self) -> CommandResult:
        sampling = self.config.sampling
        tol = self.args.tol if self.args.tol is not None else self.config.tolerances.pipeline
        report = curvature_verdict(
            self._region(),
            self.args.K,
            Bound(self.args.bound),
            n_triangles=self.args.triangles or sampling.triangles,
            n_pairs=self.args.pairs or sampling.pairs_per_triangle,
            seed=self.seed,
            tol=tol,
            jobs=self.jobs,
        )
        return CommandResult(report.to_dict(), EXIT_OK if report.passed else EXIT_VIOLATION)

    # ==================== 场景 ====================

    def _handle_scenario(self) -> CommandResult:
        if self.args.action == "list":
            return CommandResult({"scenarios": ScenarioRegistry.describe()})

        names = ScenarioRegistry.list_scenarios() if self.args.name == "all" else [self.args.name]
        results = [self._run_scenario(name) for name in names]
        exit_code = max(r.exit_code for r in results)
        if len(results) == 1:
            return CommandResult(results[0].to_dict(), exit_code)
        return CommandResult({"results": [r.to_dict() for r in results]}, exit_code)

    def _run_scenario(self, name: str) -> ScenarioResult:
        scenario = ScenarioRegistry.create(name, self.config, self.seed, self.jobs)
        logger.info("运行场景 %s (seed=%d, jobs=%d)", name, self.seed, self.jobs)
        result = scenario.run()
        if self.args.out:
            out = Path(self.args.out)
            for key, report in result.reports.items():
                path = out / f"{name}.{key}.json"
                write_json(report, path, self.args.pretty)
                result.artifacts.append(str(path))
            summary = out / f"{name}.json"
            result.artifacts.append(str(summary))
            write_json(result.to_dict(), summary, self.args.pretty)
        return result

    # ==================== 透镜 ====================

    def _handle_lens(self) -> CommandResult:
        args = self.args
        if args.omega is not None:
            lens = Lens.symmetric(args.omega, args.leg, dim=len(args.x), radius=args.radius)
        else:
            if args.b_minus is None or args.b_plus is None:
                raise ValueError("需要 --b-minus 与 --b-plus，或给出 --omega")
            lens = Lens(tuple(args.b_minus), tuple(args.b_plus), args.radius)
        return CommandResult(lens.report(args.x))


# ==================== 参数 ====================


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", default=None, help="配置档名称（默认取 LORENTZ_GLUE_PROFILE 或 default）")
    common.add_argument("--seed", type=int, default=None, help="随机种子（默认取 LORENTZ_GLUE_SEED 或配置档）")
    common.add_argument("--jobs", type=int, default=None, help="并行线程数")
    common.add_argument("--pretty", action="store_true", help="缩进输出 JSON")
    common.add_argument("--out", default=None, help="报告输出路径（scenario 为目录）")
    common.add_argument("--log-level", default=None, help="日志级别（默认取 LORENTZ_GLUE_LOG_LEVEL 或 WARNING）")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = CliArgumentParser(prog="lorentz-glue", description="Lorentz 预长度空间粘合与比较几何")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    validate = sub.add_parser("validate", parents=[common], help="验证空间文件")
    validate.add_argument("file")
    validate.add_argument("--tol", type=float, default=None)

    glue = sub.add_parser("glue", parents=[common], help="构造商空间")
    glue.add_argument("file")
    glue.add_argument("--tol", type=float, default=None)
    glue.add_argument("--no-witnesses", action="store_true", help="不输出见证链")
    glue.add_argument("--properties", action="store_true", help="附带粘合映射性质报告")

    for name, text in (("tau", "两类之间的 τ̃ 与见证"), ("diamond", "因果菱形及其分解")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("file")
        cmd.add_argument("x", help="类标签或不相交并标识 1.<id> / 2.<id>")
        cmd.add_argument("y")
        cmd.add_argument("--tol", type=float, default=None)

    curvature = sub.add_parser("curvature", parents=[common], help="时间曲率界判定")
    curvature.add_argument("file", nargs="?", default=None, help="空间文件或粘合规格；省略时取模型空间")
    curvature.add_argument("--model-K", dest="model_K", type=float, default=0.0, help="省略文件时的模型曲率")
    curvature.add_argument("--K", dest="K", type=float, required=True, help="比较曲率")
    curvature.add_argument("--bound", choices=[b.value for b in Bound], default=Bound.UPPER.value)
    curvature.add_argument("--triangles", type=int, default=None)
    curvature.add_argument("--pairs", type=int, default=None)
    curvature.add_argument("--tol", type=float, default=None)

    scenario = sub.add_parser("scenario", help="运行或列出场景")
    actions = scenario.add_subparsers(dest="action", required=True, parser_class=CliArgumentParser)
    run = actions.add_parser("run", parents=[common], help="运行场景（all 表示全部）")
    run.add_argument("name")
    actions.add_parser("list", parents=[common], help="列出场景")

    lens = sub.add_parser("lens", parents=[common], help="宽透镜成员判定")
    lens.add_argument("--b-minus", dest="b_minus", type=float, nargs="+", default=None)
    lens.add_argument("--b-plus", dest="b_plus", type=float, nargs="+", default=None)
    lens.add_argument("--omega", type=float, default=None, help="对称端点的双曲角")
    lens.add_argument("--leg", type=float, default=1.0, help="对称端点到原点的 τ")
    lens.add_argument("--radius", type=float, default=None, help="欧氏球半径 S")
    lens.add_argument("--x", dest="x", type=float, nargs="+", required=True)
    return parser


def _configure_logging(level: Optional[str]) -> None:
    name = (level or os.environ.get(LOG_LEVEL_ENV, "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="[%(asctime)s] %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.log_level)
    try:
        config = ConfigLoader.load(args.profile)
        return LorentzCli(args, config).run()
    except INPUT_ERRORS as e:
        logger.error("%s: %s", type(e).__name__, e)
        sys.stderr.write(f"lorentz-glue: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
