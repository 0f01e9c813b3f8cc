"""Built-in instances, instance resolution, and the three file formats."""

import pytest

from osadic import (circuits_of_binary_matrix, circuits_of_graph,
                    complete_graph, cycle_graph, fig1, parse_circuit_file,
                    parse_graph_file, parse_matrix_file, resolve_instance,
                    wheel_graph)
from osadic.errors import InputError, ParseError
from osadic.instances import FIG1_LINES, fano_matrix
from osadic.bitsets import elements, size, word_of


class TestFig1:
    def test_circuit_inventory(self, fig1_family):
        assert fig1_family.ground.n == 7
        assert len(fig1_family.circuits) == 20
        lines = [elements(c) for c in fig1_family.circuits if size(c) == 3]
        assert tuple(lines) == FIG1_LINES
        quads = [elements(c) for c in fig1_family.circuits if size(c) == 4]
        assert quads == [(1, 2, 4, 7), (1, 2, 5, 6), (1, 2, 5, 7),
                         (1, 3, 4, 6), (1, 3, 4, 7), (1, 3, 5, 6),
                         (2, 3, 4, 5), (2, 3, 4, 7), (2, 3, 5, 6),
                         (2, 3, 6, 7), (2, 4, 5, 7), (2, 5, 6, 7),
                         (3, 4, 5, 6), (3, 4, 6, 7), (4, 5, 6, 7)]

    def test_every_4_set_without_a_line_is_a_circuit(self, fig1_family):
        # rank 3: the dependent 4-sets are exactly those, nothing bigger
        from itertools import combinations
        lines = {word_of(t) for t in FIG1_LINES}
        quads = {c for c in fig1_family.circuits if size(c) == 4}
        for combo in combinations(range(1, 8), 4):
            w = word_of(combo)
            has_line = any(l & w == l for l in lines)
            assert (w in quads) == (not has_line)


class TestGraphBuilders:
    def test_complete_graph_edge_order(self):
        g = complete_graph(4)
        assert g.edges == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_cycle_edges(self):
        g = cycle_graph(5)
        assert g.edges == ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))

    def test_wheel_edges(self):
        g = wheel_graph(3)
        assert g.vertices == 4
        assert g.edges == ((1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (3, 4))

    def test_wheel3_is_complete4_in_disguise(self, k4_family):
        fam = circuits_of_graph(wheel_graph(3))
        profile = sorted(size(c) for c in fam.circuits)
        assert profile == sorted(size(c) for c in k4_family.circuits)

    def test_parameter_floors(self):
        with pytest.raises(InputError):
            complete_graph(1)
        with pytest.raises(InputError):
            cycle_graph(2)
        with pytest.raises(InputError):
            wheel_graph(2)

    def test_fano_matrix_columns(self):
        m = fano_matrix()
        assert m.columns == (1, 2, 3, 4, 5, 6, 7)
        assert circuits_of_binary_matrix(m).ground.n == 7


class TestResolve:
    def test_builtin_names(self):
        for spec, n, count in (("fig1", 7, 20), ("fano", 7, 14),
                               ("K4", 6, 7), ("C_5", 5, 1), ("W3", 6, 7)):
            label, fam = resolve_instance(spec)
            assert fam.ground.n == n
            assert len(fam.circuits) == count
        assert resolve_instance("C_5")[0] == "C5"

    def test_unknown_and_undersized(self):
        with pytest.raises(InputError):
            resolve_instance("Q8")
        with pytest.raises(InputError):
            resolve_instance("K1")
        with pytest.raises(InputError):
            resolve_instance("C2")

    def test_file_specs(self, tmp_path, k4_family):
        cpath = tmp_path / "u24.txt"
        cpath.write_text("# all triangles on four points\n"
                         "1 2 3\n1 2 4\n\n1 3 4\n2 3 4\n")
        label, fam = resolve_instance(f"circuits:{cpath}")
        assert label == str(cpath)
        assert len(fam.circuits) == 4 and fam.ground.n == 4

        mpath = tmp_path / "pair.txt"
        mpath.write_text("2 3\n101\n011\n")
        _, fam = resolve_instance(f"matrix:{mpath}")
        assert [elements(c) for c in fam.circuits] == [(1, 2, 3)]

        gpath = tmp_path / "k4.txt"
        body = "\n".join(f"{u} {v}" for u, v in complete_graph(4).edges)
        gpath.write_text(f"4 6\n{body}\n")
        _, fam = resolve_instance(f"graph:{gpath}")
        assert fam == k4_family

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            resolve_instance(f"circuits:{tmp_path}/absent.txt")


class TestCircuitFiles:
    def test_ground_is_largest_label(self):
        fam = parse_circuit_file("1 2 3\n1 2 4\n1 3 4\n2 3 4\n")
        assert fam.ground.n == 4

    def test_comments_and_blanks_skipped(self):
        fam = parse_circuit_file("# header\n\n1 2 3\n  # indented comment\n"
                                 "1 2 4\n1 3 4\n2 3 4\n")
        assert len(fam.circuits) == 4

    def test_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as exc:
            parse_circuit_file("1 2 3\n1 2 x\n")
        assert exc.value.line_no == 2
        with pytest.raises(ParseError) as exc:
            parse_circuit_file("1 2 3\n\n# c\n4 4 5\n")
        assert exc.value.line_no == 4
        with pytest.raises(ParseError) as exc:
            parse_circuit_file("0 1 2\n")
        assert exc.value.line_no == 1
        with pytest.raises(ParseError) as exc:
            parse_circuit_file("# nothing\n")
        assert exc.value.line_no == 1


class TestMatrixFiles:
    def test_spaces_inside_rows_allowed(self):
        m = parse_matrix_file("2 3\n1 0 1\n0 1 1\n")
        assert m.rows == 2 and m.cols == 3

    def test_header_and_shape_errors(self):
        with pytest.raises(ParseError):
            parse_matrix_file("")
        with pytest.raises(ParseError) as exc:
            parse_matrix_file("2\n10\n01\n")
        assert exc.value.line_no == 1
        with pytest.raises(ParseError):
            parse_matrix_file("2 2\n10\n")          # missing row
        with pytest.raises(ParseError) as exc:
            parse_matrix_file("2 2\n10\n0x\n")
        assert exc.value.line_no == 3


class TestGraphFiles:
    def test_roundtrip(self):
        g = parse_graph_file("# C4\n4 4\n1 2\n2 3\n3 4\n1 4\n")
        assert g.vertices == 4 and len(g.edges) == 4

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_graph_file("")
        with pytest.raises(ParseError) as exc:
            parse_graph_file("3 2\n1 2\n")          # promised 2 edges
        assert exc.value.line_no == 1
        with pytest.raises(ParseError) as exc:
            parse_graph_file("3 1\n1 2 3\n")
        assert exc.value.line_no == 2
        with pytest.raises(ParseError):
            parse_graph_file("3 1\n1 1\n")          # loop, flagged upstream
