"""Unit tests for vertex labels and their text grammar."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starjoin.errors import InputError
from starjoin.graph.labels import (
    Base,
    Left,
    Mid,
    Named,
    Right,
    Tagged,
    VertexLabel,
    format_label,
    parse_label,
)

leaves = st.builds(Base, st.integers(min_value=0, max_value=10**6)) | st.builds(
    Named, st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,6}", fullmatch=True)
)
labels = st.recursive(
    leaves,
    lambda children: (
        st.builds(Left, children)
        | st.builds(Right, children)
        | st.builds(Mid, children, children, st.integers(min_value=1, max_value=64))
        | st.builds(Tagged, st.integers(min_value=0, max_value=1), children)
    ),
    max_leaves=8,
)


class TestFormatLabel:
    """Test cases for rendering labels."""

    def test_base_and_named(self) -> None:
        """Test that base and named labels render as their plain text."""
        assert format_label(Base(7)) == "7"
        assert format_label(Named("apex")) == "apex"

    def test_star_join_labels(self) -> None:
        """Nested star-join labels render recursively."""
        assert format_label(Left(Base(0))) == "L[0]"
        assert format_label(Right(Base(2))) == "R[2]"
        assert format_label(Mid(Left(Base(1)), Base(2), 3)) == "M[L[1],2,3]"

    def test_tagged(self) -> None:
        """Test the prefix form of join tags."""
        assert format_label(Tagged(1, Mid(Base(0), Base(1), 2))) == "1:M[0,1,2]"


class TestParseLabel:
    """Test cases for parsing labels."""

    def test_parse_examples(self) -> None:
        """Test parsing one label of each constructor."""
        assert parse_label("12") == Base(12)
        assert parse_label("v_3") == Named("v_3")
        assert parse_label("M[R[0],1,4]") == Mid(Right(Base(0)), Base(1), 4)
        assert parse_label("0:1:5") == Tagged(0, Tagged(1, Base(5)))

    def test_surrounding_whitespace_is_ignored(self) -> None:
        """Test that leading and trailing whitespace is stripped."""
        assert parse_label("  L[3]\n") == Left(Base(3))

    @pytest.mark.parametrize("text", ["", "L[1", "X[1]", "M[1,2]", "M[1,2,]", "1 2", "[1]", "L[1]]"])
    def test_malformed_labels(self, text: str) -> None:
        """Malformed text raises InputError."""
        with pytest.raises(InputError):
            parse_label(text)

    @given(labels)
    def test_parse_inverts_format(self, label: VertexLabel) -> None:
        """Test that parsing recovers every formatted label."""
        assert parse_label(format_label(label)) == label

    @given(labels)
    def test_formatted_labels_have_no_whitespace(self, label: VertexLabel) -> None:
        """Test that formatted labels are single tokens."""
        text = format_label(label)
        assert text.split() == [text]
