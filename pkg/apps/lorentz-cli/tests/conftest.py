"""
lorentz-cli 测试配置

@author Ysf
@date 2026-10-16
"""

import json

import pytest

from lorentz_cli.main import main
from lorentz_core.config import LOG_LEVEL_ENV, PROFILE_ENV, SEED_ENV, ConfigLoader

SEAM_SPACE_X1 = {"points": [{"id": "x"}, {"id": "a"}], "tau": [["x", "a", 1.0]], "causal": [["x", "a"]]}
SEAM_SPACE_X2 = {"points": [{"id": "a"}, {"id": "y"}], "tau": [["a", "y", 2.0]], "causal": [["a", "y"]]}


@pytest.fixture(autouse=True)
def fast_profile(monkeypatch):
    """所有命令行测试使用快速配置档"""
    monkeypatch.setenv(PROFILE_ENV, "fast")
    monkeypatch.delenv(SEED_ENV, raising=False)
    monkeypatch.delenv(LOG_LEVEL_ENV, raising=False)
    ConfigLoader.set_custom_dir(None)
    ConfigLoader.refresh_cache()
    yield
    ConfigLoader.refresh_cache()


@pytest.fixture
def fast_config():
    return ConfigLoader.load("fast")


@pytest.fixture
def write(tmp_path):
    """把字典写成 JSON 文件，返回路径字符串"""

    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def triple_file(write):
    """满足公理的三点空间 x ≤ y ≤ z"""
    return write(
        "triple.json",
        {
            "points": [{"id": "x"}, {"id": "y"}, {"id": "z"}],
            "tau": [["x", "y", 1.0], ["y", "z", 1.0], ["x", "z", 2.5]],
            "causal": [["x", "y"], ["y", "z"], ["x", "z"]],
        },
    )


@pytest.fixture
def broken_file(write):
    """违反反向三角不等式：τ(x,z) < τ(x,y) + τ(y,z)"""
    return write(
        "broken.json",
        {
            "points": [{"id": "x"}, {"id": "y"}, {"id": "z"}],
            "tau": [["x", "y", 1.0], ["y", "z", 1.0], ["x", "z", 1.5]],
            "causal": [["x", "y"], ["y", "z"], ["x", "z"]],
        },
    )


@pytest.fixture
def seam_file(write):
    """四点粘合：X1 中 x ≤ a，X2 中 a ≤ y，粘合 a ∼ a"""
    write("x1.json", SEAM_SPACE_X1)
    write("x2.json", SEAM_SPACE_X2)
    return write("seam.json", {"x1": "x1.json", "x2": "x2.json", "pairs": [["a", "a"]]})


@pytest.fixture
def cycle_file(write):
    """反向定向的两点空间粘合两点，存在正环"""
    return write(
        "cycle.json",
        {
            "x1": {"points": [{"id": "a"}, {"id": "b"}], "tau": [["a", "b", 1.0]], "causal": [["a", "b"]]},
            "x2": {"points": [{"id": "a"}, {"id": "b"}], "tau": [["b", "a", 1.0]], "causal": [["b", "a"]]},
            "pairs": [["a", "a"], ["b", "b"]],
        },
    )


@pytest.fixture
def run_cli(capsys):
    """
    运行命令行

    Returns:
        (退出码, stdout 原文, 解析后的 JSON 或 None)
    """

    def _run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr().out
        data = json.loads(out) if out.strip() else None
        return code, out, data

    return _run
