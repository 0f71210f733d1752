"""Finite reflexive globular sets, their chains and globular coalgebras.

Cells are strings, unique across all dimensions. ``t`` and ``s`` send an
n-cell to an (n−1)-cell; ``i`` sends an (n−1)-cell to its identity n-cell.
A cell is degenerate iff it lies in the image of ``i``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .chains import BasedComplex, Chain, Tensor
from .coalgebra import (
    CoalgebraMap,
    CoalgebraStructure,
    classify_basis_image,
    validate_coalgebra_map,
)
from .errors import ContractError, StructuralError
from .report import Report
from .rings import ZZ, Ring


class GlobularSet:
    """Truncated reflexive globular set stored explicitly, cell by cell.

    The constructor accepts arbitrary (even invalid) data so that
    :func:`validate_globular` can report on it; operations that need a
    genuine globular set call :meth:`require_valid`.
    """

    def __init__(self, cells: Sequence[Sequence[str]], t: dict, s: dict, i: dict, truncation: int | None = None):
        self.cells = [list(cs) for cs in cells]
        self.truncation = len(self.cells) - 1 if truncation is None else truncation
        while len(self.cells) <= self.truncation:
            self.cells.append([])
        self.t = dict(t)
        self.s = dict(s)
        self.i = dict(i)
        self.dim: dict[str, int] = {}
        self._duplicates = []
        for n, cs in enumerate(self.cells):
            for x in cs:
                if x in self.dim:
                    self._duplicates.append(x)
                self.dim[x] = n
        self._i_inverse: dict[str, str] = {}
        for y, x in self.i.items():
            self._i_inverse.setdefault(x, y)
        self._valid = None
        self._coalgebras: dict = {}

    # -- construction ----------------------------------------------------
    @classmethod
    def build(cls, generators: Sequence[Sequence[tuple]], truncation: int | None = None) -> "GlobularSet":
        """Build from non-degenerate cells, adding identities ``i(y)``.

        ``generators[0]`` lists point names; ``generators[n]`` for n ≥ 1 lists
        triples ``(name, target, source)`` whose target/source may name
        degenerate cells such as ``"i(a)"``.
        """
        top = len(generators) - 1
        if truncation is None:
            truncation = max(top, 0)
        if truncation < top:
            raise StructuralError(f"truncation {truncation} below generator dimension {top}")
        cells: list[list[str]] = [[] for _ in range(truncation + 1)]
        t, s, i = {}, {}, {}
        for n in range(truncation + 1):
            gens = generators[n] if n < len(generators) else []
            for g in gens:
                if n == 0:
                    name = g if isinstance(g, str) else g[0]
                else:
                    name, tgt, src = g
                    t[name], s[name] = tgt, src
                cells[n].append(name)
            if n >= 1:
                for y in cells[n - 1]:
                    name = f"i({y})"
                    i[y] = name
                    t[name] = s[name] = y
                    cells[n].append(name)
        return cls(cells, t, s, i, truncation)

    # -- queries -----------------------------------------------------------
    def __contains__(self, x):
        return x in self.dim

    def all_cells(self) -> list[str]:
        return [x for cs in self.cells for x in cs]

    def is_degenerate(self, x: str) -> bool:
        return x in self._i_inverse

    def degeneracy_base(self, x: str) -> str:
        return self._i_inverse[x]

    def nondegenerate(self, n: int | None = None) -> list[str]:
        if n is None:
            return [x for cs in self.cells for x in cs if x not in self._i_inverse]
        if n >= len(self.cells):
            return []
        return [x for x in self.cells[n] if x not in self._i_inverse]

    @property
    def effective_dimension(self) -> int:
        return max((n for n in range(len(self.cells)) if self.nondegenerate(n)), default=-1)

    def target(self, x: str, k: int | None = None) -> str:
        """t_k x (default k = dim x − 1), composed through t."""
        n = self.dim[x]
        k = n - 1 if k is None else k
        if not 0 <= k <= n:
            raise StructuralError(f"t_{k} undefined on {x} of dimension {n}")
        while n > k:
            x = self.t[x]
            n -= 1
        return x

    def source(self, x: str, k: int | None = None) -> str:
        n = self.dim[x]
        k = n - 1 if k is None else k
        if not 0 <= k <= n:
            raise StructuralError(f"s_{k} undefined on {x} of dimension {n}")
        if k == n:
            return x
        while n > k + 1:
            x = self.t[x]  # any path down to k+1 works; the last step decides
            n -= 1
        return self.s[x]

    def identity(self, y: str) -> str:
        return self.i[y]

    def parallel(self, a: str, b: str) -> bool:
        n = self.dim[a]
        if n != self.dim[b]:
            return False
        return n == 0 or (self.t[a] == self.t[b] and self.s[a] == self.s[b])

    def require_valid(self):
        if self._valid is None:
            self._valid = validate_globular(self)
        if not self._valid.passed:
            raise ContractError(f"invalid globular set: {self._valid.first}", witness=self._valid.first)

    def __eq__(self, other):
        if not isinstance(other, GlobularSet):
            return NotImplemented
        return (self.truncation == other.truncation and self.cells == other.cells
                and self.t == other.t and self.s == other.s and self.i == other.i)

    __hash__ = object.__hash__

    def __repr__(self):
        counts = [len(self.nondegenerate(n)) for n in range(self.truncation + 1)]
        return f"GlobularSet(truncation={self.truncation}, nondegenerate={counts})"

    # -- JSON --------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "cells": self.cells,
            "t": dict(sorted(self.t.items())),
            "s": dict(sorted(self.s.items())),
            "i": dict(sorted(self.i.items())),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GlobularSet":
        try:
            return cls(data["cells"], data.get("t", {}), data.get("s", {}), data.get("i", {}), data.get("truncation"))
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"malformed globular set document: {exc}") from None


def validate_globular(X: GlobularSet) -> Report:
    """Report every violated instance of the globe relations.

    Checked in presheaf form: t t = t s, s s = s t, t i = id = s i, plus
    i total on dimensions below the truncation and injective.
    """
    rep = Report("globular")
    for x in X._duplicates:
        rep.add("duplicate-name", cell=x)
    N = X.truncation
    for n in range(1, N + 1):
        for x in X.cells[n]:
            for name, table in (("t", X.t), ("s", X.s)):
                y = table.get(x)
                if y is None:
                    rep.add("missing-face", cell=x, detail=f"{name} undefined")
                elif X.dim.get(y) != n - 1:
                    rep.add("face-dimension", cell=x, detail=f"{name}({x}) = {y} not of dimension {n - 1}")
    for x in X.cells[0]:
        if x in X.t or x in X.s:
            rep.add("face-dimension", cell=x, detail="point has a source or target")
    if rep.violations:
        return rep
    for n in range(2, N + 1):
        for x in X.cells[n]:
            tx, sx = X.t[x], X.s[x]
            if X.t[tx] != X.t[sx]:
                rep.add("globularity", cell=x, lhs=X.t[tx], rhs=X.t[sx], detail="t t ≠ t s")
            if X.s[sx] != X.s[tx]:
                rep.add("globularity", cell=x, lhs=X.s[sx], rhs=X.s[tx], detail="s s ≠ s t")
    seen: dict[str, str] = {}
    for n in range(N):
        for y in X.cells[n]:
            x = X.i.get(y)
            if x is None:
                rep.add("identity-missing", cell=y)
                continue
            if X.dim.get(x) != n + 1:
                rep.add("identity-dimension", cell=y, detail=f"i({y}) = {x} not of dimension {n + 1}")
                continue
            if X.t[x] != y or X.s[x] != y:
                rep.add("identity-faces", cell=y, lhs=X.t[x], rhs=X.s[x], detail=f"t i ≠ id or s i ≠ id at {y}")
            if x in seen:
                rep.add("identity-not-injective", cell=[seen[x], y], detail=f"both map to {x}")
            else:
                seen[x] = y
    for y in X.i:
        if y not in X.dim or X.dim[y] >= N:
            rep.add("identity-dimension", cell=y, detail="i defined outside dimensions below the truncation")
    return rep


# -- representables ---------------------------------------------------------

def representable(n: int, truncation: int | None = None) -> GlobularSet:
    """𝔾ₙ: cells s_k, t_k for k < n and the top cell ``x``."""
    truncation = n if truncation is None else truncation
    if n < 0 or truncation < n:
        raise StructuralError(f"need 0 ≤ n ≤ truncation, got n={n}, truncation={truncation}")
    return GlobularSet.build(_sphere_generators(n) + [_top_generator(n)], truncation)


def boundary_representable(n: int, truncation: int | None = None) -> GlobularSet:
    """∂𝔾_{n+1}: 𝔾_{n+1} without its top cell (two cells in each dimension ≤ n)."""
    truncation = n if truncation is None else truncation
    if n < 0 or truncation < n:
        raise StructuralError(f"need 0 ≤ n ≤ truncation, got n={n}, truncation={truncation}")
    return GlobularSet.build(_sphere_generators(n + 1), truncation)


def _sphere_generators(n):
    gens: list = []
    for k in range(n):
        if k == 0:
            gens.append(["s0", "t0"])
        else:
            gens.append([(f"s{k}", f"t{k - 1}", f"s{k - 1}"), (f"t{k}", f"t{k - 1}", f"s{k - 1}")])
    return gens


def _top_generator(n):
    return ["x"] if n == 0 else [("x", f"t{n - 1}", f"s{n - 1}")]


# -- chains and the globular coalgebra ----------------------------------------

def chains(X: GlobularSet, ring: Ring = ZZ) -> BasedComplex:
    """Normalized chains: basis = non-degenerate cells, ∂x = t x − s x mod degeneracies."""
    X.require_valid()
    basis = {n: X.nondegenerate(n) for n in range(X.truncation + 1)}
    bd = {}
    for n in range(1, X.truncation + 1):
        for x in basis[n]:
            terms = {}
            tx, sx = X.t[x], X.s[x]
            if not X.is_degenerate(tx):
                terms[tx] = terms.get(tx, 0) + 1
            if not X.is_degenerate(sx):
                terms[sx] = terms.get(sx, 0) - 1
            bd[x] = Chain(terms, ring)
    aug = {x: 1 for x in basis[0]}
    return BasedComplex(ring, basis, bd, aug)


def _coproduct_sign(n: int, k: int) -> int:
    return -1 if ((n + 1) * k) % 2 else 1


def globular_coproduct(X: GlobularSet, x: str, k: int, ring: Ring = ZZ) -> Tensor:
    """Δ_k x = 0 (n<k), x⊗x (n=k), t_k x⊗x + (−1)^{(n+1)k} x⊗s_k x (k<n)."""
    if x not in X:
        raise StructuralError(f"unknown cell {x}")
    if X.is_degenerate(x):
        raise ContractError(f"coproduct is defined on non-degenerate cells, {x} is degenerate", witness=x)
    n = X.dim[x]
    if k < 0 or n < k:
        return Tensor.zero(ring)
    if n == k:
        return Tensor({(x, x): 1}, ring)
    terms = {}
    tk, sk = X.target(x, k), X.source(x, k)
    if not X.is_degenerate(tk):
        terms[(tk, x)] = 1
    if not X.is_degenerate(sk):
        terms[(x, sk)] = terms.get((x, sk), 0) + _coproduct_sign(n, k)
    return Tensor(terms, ring)


def globular_coalgebra(X: GlobularSet, ring: Ring = ZZ) -> CoalgebraStructure:
    key = ring.name
    if key not in X._coalgebras:
        K = chains(X, ring)
        X._coalgebras[key] = CoalgebraStructure(
            K, lambda cell, k: globular_coproduct(X, cell, k, ring), name="globular", source=X,
        )
    return X._coalgebras[key]


# -- maps --------------------------------------------------------------------

@dataclass(eq=False)
class GlobularMap:
    source: GlobularSet
    target: GlobularSet
    mapping: dict

    def __call__(self, x: str) -> str:
        return self.mapping[x]

    def validate(self) -> Report:
        X, Y, F = self.source, self.target, self.mapping
        rep = Report("globular-map")
        if Y.truncation < X.truncation:
            rep.add("truncation", detail=f"target truncation {Y.truncation} < source {X.truncation}")
            return rep
        for x in X.all_cells():
            y = F.get(x)
            if y is None or y not in Y:
                rep.add("undefined", cell=x, detail=f"F({x}) = {y}")
            elif Y.dim[y] != X.dim[x]:
                rep.add("dimension", cell=x, detail=f"F({x}) = {y} changes dimension")
        if rep.violations:
            return rep
        for x in X.all_cells():
            if X.dim[x] >= 1:
                if Y.t[F[x]] != F[X.t[x]]:
                    rep.add("target", cell=x, lhs=Y.t[F[x]], rhs=F[X.t[x]])
                if Y.s[F[x]] != F[X.s[x]]:
                    rep.add("source", cell=x, lhs=Y.s[F[x]], rhs=F[X.s[x]])
            if x in X.i and Y.i.get(F[x]) != F[X.i[x]]:
                rep.add("identity", cell=x, lhs=Y.i.get(F[x]), rhs=F[X.i[x]])
        return rep

    def compose(self, first: "GlobularMap") -> "GlobularMap":
        """``self ∘ first``."""
        return GlobularMap(first.source, self.target, {x: self.mapping[y] for x, y in first.mapping.items()})

    def __eq__(self, other):
        if not isinstance(other, GlobularMap):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    def to_json(self) -> dict:
        X = self.source
        return {"maps": [{x: self.mapping[x] for x in X.cells[n]} for n in range(X.truncation + 1)]}

    @classmethod
    def from_json(cls, data: dict, X: GlobularSet, Y: GlobularSet) -> "GlobularMap":
        mapping = {}
        for layer in data["maps"]:
            mapping.update(layer)
        return cls(X, Y, mapping)

    @classmethod
    def identity(cls, X: GlobularSet) -> "GlobularMap":
        return cls(X, X, {x: x for x in X.all_cells()})


def chains_of_map(F: GlobularMap, ring: Ring = ZZ) -> CoalgebraMap:
    """C_•(F): x ↦ F(x) when F(x) is non-degenerate, else 0."""
    rep = F.validate()
    if not rep.passed:
        raise ContractError(f"invalid globular map: {rep.first}", witness=rep.first)
    X, Y = F.source, F.target
    src, tgt = globular_coalgebra(X, ring), globular_coalgebra(Y, ring)
    assignment = {}
    for x in X.nondegenerate():
        y = F.mapping[x]
        assignment[x] = Chain.zero(ring) if Y.is_degenerate(y) else Chain({y: 1}, ring)
    return CoalgebraMap(src, tgt, assignment)


def reconstruct_map(f: CoalgebraMap, X: GlobularSet, Y: GlobularSet) -> GlobularMap:
    """The globular map F with C_•(F) = f, built dimension by dimension.

    F(x) = f(x) if f(x) ≠ 0, else i(F(t x)); on identities F(i y) = i F(y).
    """
    X.require_valid()
    Y.require_valid()
    ring = f.source.ring
    if f.source.complex.cells() != chains(X, ring).cells() or f.target.complex.cells() != chains(Y, ring).cells():
        raise ContractError("coalgebra map does not run between the chains of the given globular sets")
    if Y.truncation < X.truncation:
        raise ContractError(f"target truncation {Y.truncation} below source truncation {X.truncation}")
    rep = validate_coalgebra_map(f, fail_fast=True)
    if not rep.passed:
        raise ContractError(f"not a coalgebra map: {rep.first}", witness=rep.first)
    F: dict[str, str] = {}
    for n in range(X.truncation + 1):
        for x in X.cells[n]:
            if X.is_degenerate(x):
                F[x] = Y.i[F[X.degeneracy_base(x)]]
                continue
            y = classify_basis_image(f, x)
            if y is not None:
                F[x] = y
            elif n == 0:
                raise ContractError(f"point {x} sent to 0; augmentation not preserved", witness=x)
            else:
                F[x] = Y.i[F[X.t[x]]]
    G = GlobularMap(X, Y, F)
    rep = G.validate()
    if not rep.passed:
        raise ContractError(f"reconstruction is not a globular map: {rep.first}", witness=rep.first)
    if chains_of_map(G, ring) != f:
        raise ContractError("reconstruction does not reproduce the coalgebra map")
    return G


# -- random instances ---------------------------------------------------------

def random_globular_set(rng: random.Random, max_dim: int = 4, max_cells: int = 6,
                        extra_truncation: int | None = None) -> GlobularSet:
    """Random valid globular set: faces drawn uniformly among parallel pairs."""
    dim = rng.randint(0, max_dim)
    if extra_truncation is None:
        extra_truncation = rng.randint(0, 1)
    gens: list = [[f"p{j}" for j in range(rng.randint(1, max_cells))]]
    # all cells (with identities) of the previous dimension, with their faces
    prev = list(gens[0])
    faces: dict[str, tuple] = {}
    for n in range(1, dim + 1):
        layer = []
        for j in range(rng.randint(1, max_cells)):
            tgt = rng.choice(prev)
            if n == 1:
                src = rng.choice(prev)
            else:
                src = rng.choice([c for c in prev if faces[c] == faces[tgt]])
            name = f"c{n}_{j}"
            layer.append((name, tgt, src))
        gens.append(layer)
        new_prev = []
        for name, tgt, src in layer:
            faces[name] = (tgt, src)
            new_prev.append(name)
        for y in prev:
            faces[f"i({y})"] = (y, y)
            new_prev.append(f"i({y})")
        prev = new_prev
    return GlobularSet.build(gens, dim + extra_truncation)


def iter_globular_maps(X: GlobularSet, Y: GlobularSet, rng: random.Random | None = None) -> Iterator[GlobularMap]:
    """Enumerate globular maps X → Y by backtracking, in random order if ``rng`` is given."""
    if Y.truncation < X.truncation:
        return
    index: dict[tuple, list[str]] = {}
    for y in Y.all_cells():
        n = Y.dim[y]
        key = (n, Y.t[y], Y.s[y]) if n else (0,)
        index.setdefault(key, []).append(y)
    order = X.nondegenerate()
    order.sort(key=lambda x: X.dim[x])
    F: dict[str, str] = {}

    def image(x):
        if x in F:
            return F[x]
        return Y.i[image(X.degeneracy_base(x))]

    def search(pos):
        if pos == len(order):
            full = {x: image(x) for x in X.all_cells()}
            yield GlobularMap(X, Y, full)
            return
        x = order[pos]
        n = X.dim[x]
        key = (n, image(X.t[x]), image(X.s[x])) if n else (0,)
        cands = list(index.get(key, ()))
        if rng is not None:
            rng.shuffle(cands)
        for y in cands:
            F[x] = y
            yield from search(pos + 1)
            del F[x]

    yield from search(0)


def random_globular_map(rng: random.Random, X: GlobularSet, Y: GlobularSet) -> GlobularMap | None:
    return next(iter_globular_maps(X, Y, rng), None)
