"""Coefficient fields for homology computations."""

from dataclasses import dataclass
from enum import Enum

from sympy import isprime

from ..config import settings
from ..errors import InputError


class FieldKind(Enum):
    GF2 = "gf2"
    GFP = "gfp"
    RATIONALS = "rat"


@dataclass(frozen=True)
class FieldSpec:
    """GF(2), GF(p) for an odd prime p, or the rationals."""

    kind: FieldKind
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.GFP:
            if self.p is None or self.p % 2 == 0 or not isprime(self.p):
                raise InputError(f"GF(p) needs an odd prime, got {self.p}")
        elif self.p is not None:
            raise InputError(f"{self.kind.value} takes no characteristic, got p={self.p}")

    @classmethod
    def gf2(cls) -> "FieldSpec":
        return cls(FieldKind.GF2)

    @classmethod
    def gfp(cls, p: int | None = None) -> "FieldSpec":
        """GF(p); the configured default prime when p is omitted."""
        return cls(FieldKind.GFP, settings.gfp_prime if p is None else p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """
        Parse a field name as written on the command line.

        Accepts "gf2", "gfp" (default prime), "gfp:<p>" and "rat" (or "q").
        """
        name = text.strip().lower()
        if name == "gf2":
            return cls.gf2()
        if name == "gfp":
            return cls.gfp()
        if name.startswith("gfp:"):
            try:
                return cls.gfp(int(name[4:]))
            except ValueError:
                raise InputError(f"Bad prime in field {text!r}") from None
        if name in ("rat", "q"):
            return cls.rationals()
        raise InputError(f"Unknown field {text!r}; expected gf2, gfp:<p> or rat")

    @property
    def characteristic(self) -> int:
        match self.kind:
            case FieldKind.GF2:
                return 2
            case FieldKind.GFP:
                assert self.p is not None
                return self.p
        return 0

    def label(self) -> str:
        """Short display name: GF(2), GF(p) or Q."""
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        return f"GF({self.characteristic})"

    def __str__(self) -> str:
        return self.label()
