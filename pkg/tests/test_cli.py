from collections import Counter

import pytest

from pgk.cli import main
from pgk.graph_core import load_graph, save_graph
from pgk.group_core import cyclic_group, direct_product
from pgk.powergraph_build import (
    directed_power_graph,
    enhanced_power_graph,
    power_graph,
)

from helpers import s3_cayley_text


def run(*argv):
    return main(list(argv))


@pytest.fixture
def s3_spec(tmp_path):
    path = tmp_path / "s3.cayley"
    path.write_text(s3_cayley_text(), encoding="utf-8")
    return f"file:{path}"


class TestGenerate:
    def test_z1_dpow(self, tmp_path):
        out = tmp_path / "z1.graph"
        assert run("generate", "Z1", "--kind", "dpow", "--out", str(out)) == 0
        assert out.read_text() == "digraph 1\nnocolors\n0 0\n"

    def test_z6_pow_has_13_edges(self, tmp_path):
        out = tmp_path / "z6.graph"
        assert run("generate", "Z6", "--kind", "pow", "--out", str(out)) == 0
        text = out.read_text()
        assert text.startswith("graph 6\nnocolors\n")
        assert len(load_graph(out).edges) == 13

    def test_q8_cdpow_colors_line(self, tmp_path):
        out = tmp_path / "q8.graph"
        assert run("generate", "Q8", "--kind", "cdpow", "--out", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "digraph 8"
        assert lines[1] == "colors 1 2 4 4 4 4 4 4"

    def test_epow_kind(self, tmp_path, s3_spec):
        out = tmp_path / "s3.graph"
        assert run("generate", s3_spec, "--kind", "epow", "--out", str(out)) == 0
        assert len(load_graph(out).edges) == 6

    def test_deterministic_output(self, tmp_path):
        out1, out2 = tmp_path / "a.graph", tmp_path / "b.graph"
        run("generate", "Z2xZ6", "--kind", "cdpow", "--out", str(out1))
        run("generate", "Z2xZ6", "--kind", "cdpow", "--out", str(out2))
        assert out1.read_bytes() == out2.read_bytes()

    def test_parse_error_exit_2(self, tmp_path):
        assert run("generate", "Zx", "--kind", "pow", "--out", str(tmp_path / "o")) == 2

    def test_io_error_exit_3(self, tmp_path):
        missing_dir = tmp_path / "no" / "such" / "dir" / "o.graph"
        assert run("generate", "Z4", "--kind", "pow", "--out", str(missing_dir)) == 3

    def test_output_reparses(self, tmp_path):
        out = tmp_path / "d.graph"
        run("generate", "Z12", "--kind", "cdpow", "--out", str(out))
        D = load_graph(out)
        assert Counter(D.colors) == Counter(
            directed_power_graph(cyclic_group(12)).colors
        )


class TestDetect:
    def test_klein_four_pow(self, tmp_path, capsys):
        G = direct_product(cyclic_group(2), cyclic_group(2))
        path = tmp_path / "v4.graph"
        save_graph(power_graph(G), path, with_colors=False)
        assert run("detect", str(path), "--kind", "pow") == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3
        assert all(ln.split()[1] == "2" for ln in lines)

    def test_clique_case(self, tmp_path, capsys):
        path = tmp_path / "z8.graph"
        save_graph(power_graph(cyclic_group(8)), path, with_colors=False)
        assert run("detect", str(path), "--kind", "pow") == 0
        assert capsys.readouterr().out.strip() == "0 8"

    def test_epow_s3(self, tmp_path, capsys, s3):
        path = tmp_path / "s3e.graph"
        save_graph(enhanced_power_graph(s3), path, with_colors=False)
        assert run("detect", str(path), "--kind", "epow") == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert sorted(ln.split()[1] for ln in lines) == ["2", "2", "2", "3"]

    def test_malformed_file_exit_2(self, tmp_path):
        path = tmp_path / "junk.graph"
        path.write_text("not a graph\n")
        assert run("detect", str(path), "--kind", "pow") == 2

    def test_directed_input_exit_2(self, tmp_path):
        path = tmp_path / "d.graph"
        save_graph(directed_power_graph(cyclic_group(4)), path)
        assert run("detect", str(path), "--kind", "pow") == 2

    def test_no_universal_vertex_exit_4(self, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text("graph 5\nnocolors\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        assert run("detect", str(path), "--kind", "pow") == 4

    def test_missing_file_exit_3(self, tmp_path):
        assert run("detect", str(tmp_path / "none.graph"), "--kind", "pow") == 3


class TestReconstruct:
    def test_pow_z6_default_stage(self, tmp_path):
        src, out = tmp_path / "z6.graph", tmp_path / "z6.dpow"
        save_graph(power_graph(cyclic_group(6)), src, with_colors=False)
        assert run("reconstruct", str(src), "--kind", "pow", "--out", str(out)) == 0
        D = load_graph(out)
        assert D.n == 6
        assert set(D.colors) == {1}  # dpow stage drops colors
        assert len(D.undirected_shadow().edges) == 13

    def test_emit_r3_path_for_z8(self, tmp_path):
        src, out = tmp_path / "z8.graph", tmp_path / "z8.r3"
        save_graph(power_graph(cyclic_group(8)), src, with_colors=False)
        assert run(
            "reconstruct", str(src), "--kind", "pow",
            "--out", str(out), "--emit-stage", "r3",
        ) == 0
        X = load_graph(out)
        assert X.n == 4
        assert sorted(X.colors) == [1, 2, 4, 8]
        assert sorted(X.degree(v) for v in range(4)) == [1, 1, 2, 2]

    def test_emit_r4_klein_four_epow(self, tmp_path):
        G = direct_product(cyclic_group(2), cyclic_group(2))
        src, out = tmp_path / "v4.graph", tmp_path / "v4.r4"
        save_graph(enhanced_power_graph(G), src, with_colors=False)
        assert run(
            "reconstruct", str(src), "--kind", "epow",
            "--out", str(out), "--emit-stage", "r4",
        ) == 0
        X = load_graph(out)
        assert X.n == 6
        assert sorted(X.colors) == [1, 1, 1, 2, 2, 2]
        assert len(X.edges) == 6

    def test_emit_cdpow_keeps_colors(self, tmp_path):
        src, out = tmp_path / "z12.graph", tmp_path / "z12.cdpow"
        save_graph(power_graph(cyclic_group(12)), src, with_colors=False)
        assert run(
            "reconstruct", str(src), "--kind", "pow",
            "--out", str(out), "--emit-stage", "cdpow",
        ) == 0
        D = load_graph(out)
        assert Counter(D.colors) == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}

    def test_pipeline_error_exit_4(self, tmp_path):
        src = tmp_path / "c5.graph"
        src.write_text("graph 5\nnocolors\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        out = tmp_path / "o.graph"
        assert run("reconstruct", str(src), "--kind", "pow", "--out", str(out)) == 4


class TestIso:
    def _write(self, tmp_path, name, graph, with_colors=False):
        path = tmp_path / name
        save_graph(graph, path, with_colors=with_colors)
        return str(path)

    def test_footnote_pair(self, tmp_path):
        from pgk.group_core import elementary_abelian_group, heisenberg_group

        a = self._write(
            tmp_path, "a.graph", power_graph(elementary_abelian_group(3, 3))
        )
        b = self._write(tmp_path, "b.graph", power_graph(heisenberg_group(3)))
        assert run("iso", a, b, "--kind", "pow") == 0

    def test_non_isomorphic_dpow(self, tmp_path, capsys):
        a = self._write(
            tmp_path, "a.graph", directed_power_graph(cyclic_group(12)), True
        )
        b = self._write(
            tmp_path,
            "b.graph",
            directed_power_graph(direct_product(cyclic_group(2), cyclic_group(6))),
            True,
        )
        assert run("iso", a, b, "--kind", "dpow") == 1
        assert capsys.readouterr().out.strip() == "non-isomorphic"

    def test_identical_files(self, tmp_path, capsys):
        a = self._write(tmp_path, "a.graph", power_graph(cyclic_group(12)))
        assert run("iso", a, a, "--kind", "pow") == 0
        assert capsys.readouterr().out.strip() == "isomorphic"

    def test_kind_mismatch_exit_2(self, tmp_path):
        a = self._write(tmp_path, "a.graph", power_graph(cyclic_group(4)))
        assert run("iso", a, a, "--kind", "dpow") == 2

    def test_non_nilpotent_shape_exit_4(self, tmp_path, s3):
        a = self._write(tmp_path, "a.graph", directed_power_graph(s3), True)
        assert run("iso", a, a, "--kind", "dpow") == 4


class TestVerify:
    def test_pow_z12_consistent(self, tmp_path):
        path = tmp_path / "z12.graph"
        save_graph(power_graph(cyclic_group(12)), path, with_colors=False)
        assert run("verify", str(path), "--kind", "pow") == 0

    def test_epow_s3_consistent(self, tmp_path, s3):
        path = tmp_path / "s3.graph"
        save_graph(enhanced_power_graph(s3), path, with_colors=False)
        assert run("verify", str(path), "--kind", "epow") == 0

    def test_non_power_graph_diagnosed(self, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text("graph 5\nnocolors\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        assert run("verify", str(path), "--kind", "pow") == 4

    def test_cap_exit_5(self, tmp_path):
        path = tmp_path / "z12.graph"
        save_graph(power_graph(cyclic_group(12)), path, with_colors=False)
        assert run("verify", str(path), "--kind", "pow", "--cap", "5") == 5
