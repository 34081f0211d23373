"""
空间文件单元测试

@author Ysf
@date 2026-10-16
"""

import json
import math

import numpy as np
import pytest

from lorentz_core.amalgamation import build_quotient
from lorentz_core.space import FiniteLorentzSpace, validate_space
from lorentz_core.spacefile import (
    SpaceFileLoadError,
    SpaceFileNotFoundError,
    dump_gluing,
    dump_space,
    load_gluing,
    load_space,
    parse_space,
    quotient_to_dict,
    to_json,
    validation_to_dict,
    write_json,
)


def assert_same_space(a: FiniteLorentzSpace, b: FiniteLorentzSpace) -> None:
    assert a.points == b.points
    for name in ("d", "tau", "chron", "causal"):
        assert np.array_equal(getattr(a, name), getattr(b, name)), name
    assert a.model_K == b.model_K
    assert a.coords == b.coords


TRIPLE = {
    "points": [{"id": "x"}, {"id": "y"}, {"id": "z"}],
    "tau": [["x", "y", 1.0], [1, 2, 1.0], [0, 2, 2.5]],
    "causal": [[0, 1], ["y", "z"], [0, 2]],
}


class TestParseSpace:
    """文档解析测试"""

    def test_sparse_relations(self):
        """下标与标识混用；≪ 由 τ > 0 推出；d 取离散度量"""
        space = parse_space(TRIPLE)
        assert space.points == ("x", "y", "z")
        assert space.tau_of("x", "z") == 2.5
        assert space.ll("x", "y") and not space.ll("y", "x")
        assert space.leq("y", "y")
        assert space.d_of("x", "z") == 1.0
        assert validate_space(space).success

    def test_explicit_chron_and_d(self):
        doc = dict(TRIPLE, chron=[[0, 1]], d=[[0, 1, 0.5], [1, 2, 0.5], [0, 2, 1.0]])
        space = parse_space(doc)
        assert space.ll("x", "y")
        assert not space.ll("x", "z")
        assert space.d_of("z", "x") == 1.0

    def test_coords_with_model(self):
        """有模型标签时 d 由坐标推出"""
        doc = {
            "points": [{"id": "o", "coords": [0.0, 0.0]}, {"id": "p", "coords": [3.0, 4.0]}],
            "tau": [],
            "causal": [],
            "model": {"K": 0.0},
        }
        space = parse_space(doc)
        assert space.model_K == 0.0
        assert space.d_of("o", "p") == pytest.approx(5.0)
        assert space.coord_of("p").ambient_coords == (3.0, 4.0)

    def test_infinite_tau(self):
        doc = {"points": [{"id": "a"}, {"id": "b"}], "tau": [[0, 1, "inf"]], "causal": [[0, 1]]}
        space = parse_space(doc)
        assert math.isinf(space.tau_of("a", "b"))
        assert space.ll("a", "b")

    @pytest.mark.parametrize(
        "doc, message",
        [
            ({"points": [{"id": "a"}], "tau": [["a", "b", 1.0]]}, "未知点"),
            ({"points": [{"id": "a"}], "causal": [[0, 3]]}, "下标越界"),
            ({"points": [{"id": "a", "coords": [0.0, 0.0]}, {"id": "b"}]}, "坐标"),
            ({"points": [{"id": "a"}, {"id": "a"}]}, "唯一"),
            ({"points": "abc"}, "结构错误"),
        ],
    )
    def test_malformed(self, doc, message):
        with pytest.raises(SpaceFileLoadError, match=message):
            parse_space(doc)


class TestRoundTrip:
    """解析 → 序列化 → 解析"""

    def test_sampled_space(self, diamond64):
        data = dump_space(diamond64)
        assert "d" not in data  # 由坐标恢复
        again = parse_space(json.loads(to_json(data)))
        assert_same_space(diamond64, again)
        assert dump_space(again) == data

    def test_relation_space(self, chain_space):
        data = dump_space(chain_space)
        assert "chron" not in data and "d" not in data
        assert_same_space(chain_space, parse_space(data))

    def test_quotient_space(self, seam_spec):
        """商空间的 d̃ 不是离散度量，需要显式写出"""
        space = build_quotient(seam_spec).as_space()
        data = dump_space(space)
        assert "d" in data
        assert_same_space(space, parse_space(json.loads(to_json(data, pretty=True))))

    def test_bytes_stable(self, diamond64, tmp_path):
        """同一空间两次写出的字节相同"""
        write_json(dump_space(diamond64), tmp_path / "a.json")
        write_json(dump_space(load_space(tmp_path / "a.json")), tmp_path / "b.json")
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


class TestLoadFiles:
    """文件加载测试"""

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpaceFileNotFoundError):
            load_space(tmp_path / "none.json")

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(SpaceFileLoadError, match="JSON 解析失败"):
            load_space(path)

    def test_root_must_be_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(SpaceFileLoadError, match="根节点必须是对象"):
            load_space(path)

    def test_yaml_space(self, tmp_path):
        path = tmp_path / "triple.yaml"
        path.write_text(
            "points: [{id: x}, {id: y}]\ntau: [[x, y, 2.0]]\ncausal: [[x, y]]\n", encoding="utf-8"
        )
        assert load_space(path).tau_of("x", "y") == 2.0

    def test_gluing_with_relative_paths(self, tmp_path, seam_spec):
        (tmp_path / "parts").mkdir()
        write_json(dump_space(seam_spec.x1), tmp_path / "parts" / "x1.json")
        write_json(dump_space(seam_spec.x2), tmp_path / "parts" / "x2.json")
        write_json(
            {"x1": "parts/x1.json", "x2": "parts/x2.json", "pairs": [["a", "a"]]},
            tmp_path / "glue.json",
        )
        spec = load_gluing(tmp_path / "glue.json")
        assert spec.pairs == (("a", "a"),)
        assert build_quotient(spec).tau("1.x", "2.y") == pytest.approx(3.0)

    def test_gluing_inline(self, tmp_path, cycle_spec):
        write_json(dump_gluing(cycle_spec), tmp_path / "cycle.json")
        spec = load_gluing(tmp_path / "cycle.json")
        assert spec.pairs == cycle_spec.pairs
        assert_same_space(spec.x2, cycle_spec.x2)


class TestReports:
    """报告序列化测试"""

    def test_quotient_report(self, seam_spec):
        data = quotient_to_dict(build_quotient(seam_spec))
        assert data["classes"]["1.a~2.a"] == ["1.a", "2.a"]
        record = next(r for r in data["witnesses"] if r["from"] == "1.x" and r["to"] == "2.y")
        assert record["tau"] == pytest.approx(3.0)
        assert record["witness"]["kind"] == "chain"
        # 报告本身可以作为空间文件重新加载
        assert parse_space(data).tau_of("1.x", "2.y") == pytest.approx(3.0)

    def test_cycle_report(self, cycle_spec):
        data = quotient_to_dict(build_quotient(cycle_spec))
        assert data["infinite_pairs"] > 0
        assert all(r["tau"] == "inf" for r in data["witnesses"])
        assert {r["witness"]["kind"] for r in data["witnesses"]} == {"cycle"}
        json.loads(to_json(data))

    def test_validation_report(self):
        broken = dict(TRIPLE, tau=[[0, 1, 1.0], [1, 2, 1.0], [0, 2, 1.5]])
        data = validation_to_dict(validate_space(parse_space(broken)))
        assert data["success"] is False
        assert "reverse_triangle" in data["axioms"]
        assert data["errors"][0]["witness"]

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            to_json({"x": float("nan")})
