"""Unit tests for DIMACS I/O and graph hashing."""

import pytest

from starjoin.errors import InputError
from starjoin.graph import Base, TowerParams, complete_graph, cycle_graph, tower
from starjoin.graph.dimacs import (
    canonical_hash,
    dimacs_text,
    label_map_text,
    parse_dimacs,
    parse_label_map,
    read_dimacs,
    sidecar_path,
    write_dimacs,
)


class TestDimacsText:
    """Test cases for serialization."""

    def test_triangle(self) -> None:
        """Test the DIMACS text of K3."""
        assert dimacs_text(complete_graph(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"

    def test_label_map(self) -> None:
        """Test the tab-separated label sidecar."""
        assert label_map_text(complete_graph(2)) == "1\t0\n2\t1\n"

    def test_parse_skips_comments_and_blank_lines(self) -> None:
        """Test that comment and blank lines are ignored."""
        text = "c a comment\n\np edge 3 2\ne 1 2\nc another\ne 2 3\n"
        assert parse_dimacs(text) == (3, [(0, 1), (1, 2)])

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("e 1 2\n", "before problem line"),
            ("c nothing\n", "missing problem line"),
            ("p edge 2 1\np edge 2 1\ne 1 2\n", "repeated"),
            ("p col 2 1\ne 1 2\n", "unknown problem"),
            ("p edge 2 1\ne 1 3\n", "outside"),
            ("p edge 2 2\ne 1 2\n", "declares 2 edges"),
            ("p edge 2 1\nx 1 2\n", "unknown line"),
            ("p edge 2 1\ne 1\n", "malformed"),
            ("p edge x 1\ne 1 2\n", "non-integer counts"),
            ("p edge -2 0\n", "negative counts"),
            ("p edge 2 1\ne a b\n", "non-integer endpoint"),
            ("p edge 2 1\ne 1 2.5\n", "non-integer endpoint"),
        ],
    )
    def test_malformed_files(self, text: str, message: str) -> None:
        """Test the error message for each kind of malformed DIMACS text."""
        with pytest.raises(InputError, match=message):
            parse_dimacs(text)

    def test_label_map_must_cover_every_vertex(self) -> None:
        """Test that sidecars with gaps, repeats or no tab are rejected."""
        with pytest.raises(InputError, match="cover"):
            parse_label_map("1\t0\n", 2)
        with pytest.raises(InputError, match="repeated"):
            parse_label_map("1\t0\n1\t1\n", 2)
        with pytest.raises(InputError):
            parse_label_map("1 0\n", 1)


class TestDimacsFiles:
    """Test cases for reading and writing files."""

    def test_round_trip_keeps_structured_labels(self, tmp_path) -> None:
        """Test that a tower survives a DIMACS round trip with its labels."""
        graph = tower(TowerParams(n=2, c=3, r=1))
        path = tmp_path / "tower.dimacs"
        write_dimacs(graph, path)
        assert sidecar_path(path).exists()
        assert read_dimacs(path) == graph

    def test_without_sidecar_labels_are_base(self, tmp_path) -> None:
        """Test that a bare DIMACS file gets Base labels."""
        path = tmp_path / "plain.dimacs"
        path.write_text("p edge 3 2\ne 1 2\ne 2 3\n")
        graph = read_dimacs(path)
        assert graph.vertices == (Base(0), Base(1), Base(2))
        assert graph.size == 2

    def test_missing_file(self, tmp_path) -> None:
        """Test that a missing graph file is an input error."""
        with pytest.raises(InputError, match="Cannot read"):
            read_dimacs(tmp_path / "absent.dimacs")


class TestCanonicalHash:
    """Test cases for the graph hash."""

    def test_stable(self) -> None:
        """Test that the hash is a stable SHA-256 hex digest."""
        assert canonical_hash(cycle_graph(5)) == canonical_hash(cycle_graph(5))
        assert len(canonical_hash(cycle_graph(5))) == 64

    def test_distinguishes_structure_and_labels(self) -> None:
        """Test that both edges and labels feed the hash."""
        assert canonical_hash(cycle_graph(5)) != canonical_hash(complete_graph(5))
        relabeled = complete_graph(3).relabel({Base(i): Base(i + 10) for i in range(3)})
        assert canonical_hash(relabeled) != canonical_hash(complete_graph(3))
