"""Cells of the ω-category μ(C): double sequences (c₀⁻, c₀⁺, c₁⁻, c₁⁺, …).

Elements are kept canonical (trailing zero pairs trimmed), so two elements
are equal exactly when their entries are, and hashing is cheap.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .chains import BasedComplex, Chain, chain_to_json, sort_key
from .errors import ComposabilityError, StructuralError
from .report import Report
from .rings import ZZ, Ring


class MuElement:
    __slots__ = ("minus", "plus", "ring", "_hash", "_key")

    def __init__(self, minus: Sequence[Chain], plus: Sequence[Chain], ring: Ring | None = None):
        if len(minus) != len(plus):
            raise StructuralError("minus and plus sequences differ in length")
        minus, plus = list(minus), list(plus)
        if ring is None:
            ring = next((c.ring for c in minus + plus), ZZ)
        while minus and not minus[-1] and not plus[-1]:
            minus.pop()
            plus.pop()
        self.minus = tuple(minus)
        self.plus = tuple(plus)
        self.ring = ring
        self._hash = None
        self._key = None

    @property
    def top(self) -> int:
        """Largest k with a nonzero entry (−1 for the zero element)."""
        return len(self.minus) - 1

    def entry(self, k: int, eta: str) -> Chain:
        seq = self.minus if eta == "-" else self.plus
        return seq[k] if 0 <= k < len(seq) else Chain.zero(self.ring)

    def pairs(self):
        return zip(self.minus, self.plus)

    def _zip(self, other: "MuElement", op):
        n = max(len(self.minus), len(other.minus))
        return MuElement(
            [op(self.entry(k, "-"), other.entry(k, "-")) for k in range(n)],
            [op(self.entry(k, "+"), other.entry(k, "+")) for k in range(n)],
            self.ring,
        )

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __eq__(self, other):
        if not isinstance(other, MuElement):
            return NotImplemented
        return self.minus == other.minus and self.plus == other.plus

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.minus, self.plus))
        return self._hash

    def sort_key(self):
        if self._key is None:
            self._key = (
                self.top,
                tuple(
                    (tuple((sort_key(x), v) for x, v in m.sorted_items()),
                     tuple((sort_key(x), v) for x, v in p.sorted_items()))
                    for m, p in self.pairs()
                ),
            )
        return self._key

    def max_coefficient(self) -> int:
        return max((abs(v) for c in self.minus + self.plus for _, v in c.items()), default=0)

    def lift(self, ring: Ring) -> "MuElement":
        return MuElement([c.lift(ring) for c in self.minus], [c.lift(ring) for c in self.plus], ring)

    def to_json(self, complex: BasedComplex | None = None) -> dict:
        return {
            "top": self.top,
            "minus": [chain_to_json(c, complex) for c in self.minus],
            "plus": [chain_to_json(c, complex) for c in self.plus],
        }

    def __repr__(self):
        body = ", ".join(f"{m!r}, {p!r}" for m, p in self.pairs())
        return f"⟨{body}⟩"


def mu_validate(m: MuElement, C: BasedComplex) -> Report:
    """Entries homogeneous of degree k, finitely many, and ∂c_{k+1}^± = c_k^+ − c_k^-."""
    rep = Report("mu")
    for k, (cm, cp) in enumerate(m.pairs()):
        for eta, c in (("-", cm), ("+", cp)):
            if c.ring != C.ring:
                rep.add("ring", k=k, detail=f"entry {eta} over {c.ring}, complex over {C.ring}")
                return rep
            try:
                ok = C.is_homogeneous(c, k)
            except StructuralError as exc:
                rep.add("unknown-cell", k=k, detail=str(exc))
                return rep
            if not ok:
                rep.add("degree", k=k, lhs=c, detail=f"{eta}-entry not homogeneous of degree {k}")
    if rep.violations:
        return rep
    for k in range(m.top + 1):
        diff = m.entry(k, "+") - m.entry(k, "-")
        for eta in "-+":
            d = C.boundary(m.entry(k + 1, eta))
            if d != diff:
                rep.add("boundary", k=k, lhs=d, rhs=diff, detail=f"∂c_{k + 1}^{eta} ≠ c_{k}^+ − c_{k}^-")
    return rep


def mu_source(m: MuElement, k: int) -> MuElement:
    if k >= m.top:
        return m
    return MuElement(m.minus[:k + 1], m.plus[:k] + (m.minus[k],), m.ring)


def mu_target(m: MuElement, k: int) -> MuElement:
    if k >= m.top:
        return m
    return MuElement(m.minus[:k] + (m.plus[k],), m.plus[:k + 1], m.ring)


def mu_identity(m: MuElement, k: int) -> MuElement:
    """Identities are inclusions in μ(C): i_k(c) = c."""
    return m


def composable(b: MuElement, a: MuElement, m: int) -> bool:
    return mu_source(b, m) == mu_target(a, m)


def compose(b: MuElement, a: MuElement, m: int) -> MuElement:
    """b ∘_m a = b + a − s_m(b), defined when s_m(b) = t_m(a)."""
    c = mu_source(b, m)
    t = mu_target(a, m)
    if c != t:
        k = next(
            (j for j in range(max(c.top, t.top) + 1)
             if c.entry(j, "-") != t.entry(j, "-") or c.entry(j, "+") != t.entry(j, "+")),
            None,
        )
        raise ComposabilityError(
            f"s_{m}(b) ≠ t_{m}(a) (first mismatch at entry {k}: {c.entry(k, '-')!r},{c.entry(k, '+')!r} "
            f"vs {t.entry(k, '-')!r},{t.entry(k, '+')!r})",
            witness=k,
        )
    return b + a - c


def mu_apply(f: Callable[[Chain], Chain], m: MuElement, ring: Ring | None = None) -> MuElement:
    """μ(f): apply a chain map entrywise."""
    return MuElement([f(c) for c in m.minus], [f(c) for c in m.plus], ring or m.ring)
