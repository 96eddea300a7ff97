"""Structured vertex labels recording how a vertex was constructed.

Text grammar (whitespace-free, so labels can be space-separated in files):

    label := digits                      Base(index)
           | digits ":" label            Tagged(tag, label)
           | "L[" label "]"              Left(g1)        merged level-0 vertex
           | "R[" label "]"              Right(g2)       merged last-level vertex
           | "M[" label "," label "," digits "]"   Mid(g1, g2, level)
           | identifier                  Named(name)
"""

import re
from dataclasses import dataclass

from ..errors import InputError


@dataclass(frozen=True, slots=True)
class Base:
    """A vertex of a primitive graph (complete graph, cycle, file input)."""

    index: int


@dataclass(frozen=True, slots=True)
class Named:
    """A vertex carrying a free-form identifier (hand-written complexes)."""

    name: str


@dataclass(frozen=True, slots=True)
class Left:
    """The merged vertex (g1, 0) of a star-join."""

    g1: "VertexLabel"


@dataclass(frozen=True, slots=True)
class Right:
    """The merged vertex (g2, s+1) of a star-join."""

    g2: "VertexLabel"


@dataclass(frozen=True, slots=True)
class Mid:
    """A middle vertex (g1, g2, level) of a star-join, 1 <= level <= s."""

    g1: "VertexLabel"
    g2: "VertexLabel"
    level: int


@dataclass(frozen=True, slots=True)
class Tagged:
    """A vertex of a complex join, tagged 0 (left factor) or 1 (right factor)."""

    tag: int
    inner: "VertexLabel"


type VertexLabel = Base | Named | Left | Right | Mid | Tagged

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")
_DIGITS = re.compile(r"\d+")


def format_label(label: VertexLabel) -> str:
    """Render a label in the canonical text grammar."""
    match label:
        case Base(index):
            return str(index)
        case Named(name):
            return name
        case Left(g1):
            return f"L[{format_label(g1)}]"
        case Right(g2):
            return f"R[{format_label(g2)}]"
        case Mid(g1, g2, level):
            return f"M[{format_label(g1)},{format_label(g2)},{level}]"
        case Tagged(tag, inner):
            return f"{tag}:{format_label(inner)}"
    raise InputError(f"Not a vertex label: {label!r}")


def parse_label(text: str) -> VertexLabel:
    """Parse a label written in the canonical text grammar."""
    parser = _LabelParser(text.strip())
    label = parser.parse()
    if parser.pos != len(parser.text):
        raise InputError(f"Trailing characters in label {text!r} at {parser.pos}")
    return label


class _LabelParser:
    """Recursive-descent parser over one label string."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> VertexLabel:
        if not self.text:
            raise InputError("Empty vertex label")

        digits = _DIGITS.match(self.text, self.pos)
        if digits:
            self.pos = digits.end()
            value = int(digits.group())
            if self._peek() == ":":
                self.pos += 1
                return Tagged(value, self.parse())
            return Base(value)

        ident = _IDENTIFIER.match(self.text, self.pos)
        if not ident:
            raise InputError(f"Unexpected character in label {self.text!r} at {self.pos}")
        self.pos = ident.end()
        name = ident.group()

        if self._peek() != "[":
            return Named(name)
        self.pos += 1

        if name == "L":
            label: VertexLabel = Left(self.parse())
        elif name == "R":
            label = Right(self.parse())
        elif name == "M":
            g1 = self.parse()
            self._expect(",")
            g2 = self.parse()
            self._expect(",")
            level = _DIGITS.match(self.text, self.pos)
            if not level:
                raise InputError(f"Missing level in label {self.text!r}")
            self.pos = level.end()
            label = Mid(g1, g2, int(level.group()))
        else:
            raise InputError(f"Unknown label constructor {name!r} in {self.text!r}")

        self._expect("]")
        return label

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            raise InputError(f"Expected {char!r} in label {self.text!r} at {self.pos}")
        self.pos += 1
