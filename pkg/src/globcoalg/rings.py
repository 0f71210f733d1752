"""The two coefficient rings: big-integer ℤ and 𝔽₂.

Coefficients are plain Python ints in both cases; a ring only knows how to
normalize them.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import StructuralError


@dataclass(frozen=True)
class Ring:
    name: str
    modulus: int | None

    @property
    def signed(self) -> bool:
        """True when c = c⁺ − c⁻ decompositions make sense (ℤ only)."""
        return self.modulus is None

    def __call__(self, value: int) -> int:
        if self.modulus is None:
            return int(value)
        return int(value) & 1

    def __repr__(self):
        return {"z": "ZZ", "f2": "F2"}[self.name]


ZZ = Ring("z", None)
F2 = Ring("f2", 2)


def ring_by_name(name: str) -> Ring:
    try:
        return {"z": ZZ, "f2": F2}[name.lower()]
    except KeyError:
        raise StructuralError(f"unknown ring {name!r}; expected 'z' or 'f2'") from None
