"""Unit tests for the complex text format."""

import pytest

from starjoin.errors import InputError
from starjoin.graph import TowerParams, complete_graph, star_join_quotient, tower
from starjoin.topology import SimplicialComplex, neighborhood_complex, read_complex, write_complex
from starjoin.topology.complex_io import complex_text, parse_complex


class TestComplexText:
    """Test cases for serializing and parsing complexes."""

    def test_triangle_boundary(self) -> None:
        """Test the text of N(K3), the boundary of a triangle."""
        text = complex_text(neighborhood_complex(complete_graph(3)))
        assert text == "universe: 0 1 2\n0 1\n0 2\n1 2\n"

    def test_comments_and_blank_lines(self) -> None:
        """Test that comments and blank lines are skipped."""
        text = "# boundary of a triangle\nuniverse: a b c\n\na b\n# middle\nb c\nc a\n"
        complex_ = parse_complex(text)
        assert len(complex_.universe) == 3
        assert len(complex_.maximal_faces) == 3

    def test_empty_complex(self) -> None:
        """Test the universe-only text of the empty complex."""
        empty = SimplicialComplex.empty()
        assert complex_text(empty) == "universe:\n"
        assert parse_complex("universe:\n") == empty

    def test_structured_labels_survive(self) -> None:
        """Test that star-join labels round-trip through the text format."""
        complex_ = neighborhood_complex(star_join_quotient(complete_graph(2), complete_graph(3), 1))
        assert parse_complex(complex_text(complex_)) == complex_

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("", "first line"),
            ("a b\n", "first line"),
            ("universe: a b\n", "without faces"),
            ("universe: a b\na c\n", "not in the universe"),
            ("universe: a X[1]\na\n", "Unknown label constructor"),
        ],
    )
    def test_malformed(self, text: str, message: str) -> None:
        """Test the error message for each kind of malformed complex text."""
        with pytest.raises(InputError, match=message):
            parse_complex(text)


class TestComplexFiles:
    """Test cases for complex files."""

    def test_round_trip(self, tmp_path) -> None:
        """Test writing and reading back N(G_2)."""
        complex_ = neighborhood_complex(tower(TowerParams(n=2, c=3, r=1)))
        path = tmp_path / "n_tower.complex"
        write_complex(complex_, path)
        assert read_complex(path) == complex_

    def test_missing_file(self, tmp_path) -> None:
        """Test that a missing file is an input error."""
        with pytest.raises(InputError, match="Cannot read"):
            read_complex(tmp_path / "absent.complex")
