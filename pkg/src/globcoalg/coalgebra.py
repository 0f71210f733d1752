"""Counital cosymmetric coalgebras given by their Δ_k families.

The structure map out of the free resolution W is never built; a coalgebra
is a based complex plus a function ``(cell, k) -> Tensor`` whose linear
extensions satisfy

    ∂Δ_k − (−1)^k Δ_k ∂ = (1 + (−1)^k T) Δ_{k−1},   Δ_{−1} = 0,

together with the counit identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .chains import BasedComplex, Chain, Tensor, cell_name, tensor
from .errors import ContractError, StructuralError
from .mu import MuElement
from .report import Report


@dataclass(frozen=True, eq=False)
class CoalgebraStructure:
    complex: BasedComplex
    delta_fn: Callable  # (basis cell, k) -> Tensor
    name: str = "coalgebra"
    source: object = None  # the globular set / simplicial complex it came from

    @property
    def ring(self):
        return self.complex.ring

    def default_kmax(self) -> int:
        return self.complex.max_degree + 2

    def delta(self, k: int, c) -> Tensor:
        """Δ_k extended linearly; ``c`` is a basis cell or a Chain."""
        ring = self.ring
        if k < 0:
            return Tensor.zero(ring)
        if not isinstance(c, Chain):
            self.complex.degree(c)
            return self.delta_fn(c, k)
        out: dict = {}
        for x, v in c.items():
            for pair, w in self.delta_fn(x, k).items():
                out[pair] = out.get(pair, 0) + v * w
        return Tensor(out, ring)

    def counit(self, c) -> int:
        return self.complex.augment(c)


def _eq2_sides(C: CoalgebraStructure, b, k: int, cache: dict):
    K = C.complex

    def d(k_, x):
        key = (x, k_)
        if key not in cache:
            cache[key] = C.delta(k_, x)
        return cache[key]

    def d_chain(k_, chain):
        out: dict = {}
        for x, v in chain.items():
            for pair, w in d(k_, x).items():
                out[pair] = out.get(pair, 0) + v * w
        return Tensor(out, K.ring)

    sign = -1 if k % 2 else 1
    lhs = K.tensor_boundary(d(k, b)) - d_chain(k, K.boundary(b)).scale(sign)
    prev = d(k - 1, b) if k >= 1 else Tensor.zero(K.ring)
    rhs = prev + K.koszul_swap(prev).scale(sign)
    return lhs, rhs


def validate_cosymmetric(C: CoalgebraStructure, kmax: int | None = None, fail_fast: bool = False) -> Report:
    """Exact check of the Δ_k relation and the counit identities for 0 ≤ k ≤ kmax."""
    if kmax is None:
        kmax = C.default_kmax()
    K = C.complex
    rep = Report("cosymmetric", stats={"name": C.name, "kmax": kmax, "cells": len(K.cells())})
    cache: dict = {}
    eps = K.augment
    for b in K.cells():
        for k in range(kmax + 1):
            lhs, rhs = _eq2_sides(C, b, k, cache)
            if lhs != rhs:
                rep.add("delta-relation", cell=b, k=k, lhs=lhs, rhs=rhs)
                if fail_fast:
                    return rep
        d0 = cache.get((b, 0)) or C.delta(0, b)
        base = K.basis_chain(b)
        right = K.tensor_apply(None, eps, d0)
        left = K.tensor_apply(eps, None, d0)
        if right != base:
            rep.add("counit-right", cell=b, k=0, lhs=right, rhs=base)
        if left != base:
            rep.add("counit-left", cell=b, k=0, lhs=left, rhs=base)
        for k in range(1, kmax + 1):
            dk = cache.get((b, k)) or C.delta(k, b)
            r = K.tensor_apply(None, eps, dk)
            l_ = K.tensor_apply(eps, None, dk)
            if r or l_:
                rep.add("counit-higher", cell=b, k=k, lhs=r, rhs=l_)
        if fail_fast and rep.violations:
            return rep
    return rep


@dataclass(frozen=True, eq=False)
class CoalgebraMap:
    """Degree-preserving map given on the source basis.

    Basis cells missing from ``assignment`` go to zero.
    """

    source: CoalgebraStructure
    target: CoalgebraStructure
    assignment: dict

    def __post_init__(self):
        src, tgt = self.source.complex, self.target.complex
        table = {}
        for b in src.cells():
            img = self.assignment.get(b)
            if img is None:
                img = Chain.zero(tgt.ring)
            tgt._check(img)
            table[b] = img
        for b in self.assignment:
            if b not in src:
                raise StructuralError(f"map assigns unknown source cell {cell_name(b)}")
        object.__setattr__(self, "assignment", table)

    @classmethod
    def identity(cls, C: CoalgebraStructure) -> "CoalgebraMap":
        return cls(C, C, {b: C.complex.basis_chain(b) for b in C.complex.cells()})

    def __call__(self, c) -> Chain:
        if not isinstance(c, Chain):
            return self.assignment[c]
        out: dict = {}
        for x, v in c.items():
            for y, w in self.assignment[x].items():
                out[y] = out.get(y, 0) + v * w
        return Chain(out, self.target.ring)

    def on_tensor(self, t: Tensor) -> Tensor:
        """(f ⊗ f)(t); no signs since f has degree 0."""
        out: dict = {}
        for (x, y), v in t.items():
            for (pair, w) in tensor(self.assignment[x], self.assignment[y]).items():
                out[pair] = out.get(pair, 0) + v * w
        return Tensor(out, self.target.ring)

    def compose(self, first: "CoalgebraMap") -> "CoalgebraMap":
        """``self ∘ first``."""
        return CoalgebraMap(first.source, self.target, {b: self(img) for b, img in first.assignment.items()})

    def __eq__(self, other):
        if not isinstance(other, CoalgebraMap):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self):
        return hash(frozenset(self.assignment.items()))

    def __repr__(self):
        body = ", ".join(f"{cell_name(b)}↦{img!r}" for b, img in self.assignment.items())
        return f"CoalgebraMap({body})"


def validate_coalgebra_map(f: CoalgebraMap, kmax: int | None = None, fail_fast: bool = False) -> Report:
    """Chain map, augmentation and (f⊗f)Δ'_k = Δ_k f for every k ≤ kmax."""
    src, tgt = f.source, f.target
    S, T = src.complex, tgt.complex
    if kmax is None:
        kmax = max(src.default_kmax(), tgt.default_kmax())
    rep = Report("coalgebra-map", stats={"kmax": kmax})
    if S.ring != T.ring:
        rep.add("ring-mismatch", detail=f"{S.ring} vs {T.ring}")
        return rep
    for b in S.cells():
        img = f(b)
        n = S.degree(b)
        if img and not T.is_homogeneous(img, n):
            rep.add("degree", cell=b, lhs=img, detail=f"image not of degree {n}")
            if fail_fast:
                return rep
            continue
        lhs, rhs = T.boundary(img), f(S.boundary(b))
        if lhs != rhs:
            rep.add("chain-map", cell=b, lhs=lhs, rhs=rhs)
        if T.augment(img) != S.augment(b):
            rep.add("augmentation", cell=b, lhs=T.augment(img), rhs=S.augment(b))
        for k in range(kmax + 1):
            lhs, rhs = f.on_tensor(src.delta(k, b)), tgt.delta(k, img)
            if lhs != rhs:
                rep.add("coproduct", cell=b, k=k, lhs=lhs, rhs=rhs)
        if fail_fast and rep.violations:
            return rep
    return rep


def is_group_like(C: CoalgebraStructure, c, kmax: int | None = None) -> bool:
    """Δ_k(c) ∈ C_{≤n}⊗C_{≤n} for all k, Δ_n(c) = c⊗c, and ε(c) = 1 if n = 0."""
    K = C.complex
    if not isinstance(c, Chain):
        c = K.basis_chain(c)
    if not c:
        return False
    n = K.degree_of(c)
    if n is None:
        return False
    if kmax is None:
        kmax = C.default_kmax()
    for k in range(max(kmax, n) + 1):
        if not K.tensor_truncated(C.delta(k, c), n):
            return False
    if C.delta(n, c) != tensor(c, c):
        return False
    if n == 0 and C.counit(c) != C.ring(1):
        return False
    return True


def classify_basis_image(f: CoalgebraMap, a):
    """Return the basis cell ``f(a)`` equals, or None when ``f(a) = 0``.

    Over an integral domain a coalgebra map between group-like coalgebras
    has no other option; anything else is rejected.
    """
    img = f(a)
    if not img:
        return None
    if len(img) == 1:
        (b, v), = img.items()
        if v == 1:
            return b
    raise ContractError(
        f"not a coalgebra map between group-like coalgebras: {cell_name(a)} ↦ {img!r}",
        witness=a,
    )


def project(b, eta: str, t: Tensor, K: BasedComplex) -> Chain:
    """π_b^+ = id ⊗ π_b and π_b^- = π_b^+ T."""
    if eta not in ("+", "-"):
        raise ValueError(f"eta must be '+' or '-', got {eta!r}")
    if eta == "-":
        t = K.koszul_swap(t)
    out = {x: v for (x, y), v in t.items() if y == b}
    return Chain(out, t.ring)


def _atom_sign(k: int) -> int:
    return -1 if k % 2 else 1


def atom(C: CoalgebraStructure, b) -> MuElement:
    """The μ-element ⟨b⟩ of a group-like basis cell."""
    if not is_group_like(C, b):
        raise ContractError(f"{cell_name(b)} is not group-like", witness=b)
    K = C.complex
    n = K.degree(b)
    minus, plus = [], []
    for k in range(n + 1):
        d = C.delta(k, b)
        plus.append(project(b, "+", d, K))
        minus.append(project(b, "-", d, K).scale(_atom_sign(k)))
    return MuElement(minus, plus, ring=K.ring)
