"""Ordered simplicial complexes, Steenrod's cup-i coproducts and 𝔽₂ squares.

A simplex is a strictly increasing tuple of vertices. Face maps delete
positions, so d_U x removes the vertices sitting at the positions in U.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .chains import BasedComplex, Chain, Tensor, cell_name, parse_cell_name, sort_key
from .coalgebra import CoalgebraStructure
from .errors import ContractError, RingCapabilityError, StructuralError
from .rings import F2, ZZ, Ring


class SimplicialComplex:
    """Downward closure of a list of simplices."""

    def __init__(self, maximal_simplices: Iterable[Sequence[int]]):
        faces: set[tuple] = set()
        for s in maximal_simplices:
            s = tuple(s)
            if any(a >= b for a, b in zip(s, s[1:])) or any(v < 0 for v in s):
                raise StructuralError(f"simplex {s} is not strictly increasing over non-negative vertices")
            if not s:
                continue
            for r in range(1, len(s) + 1):
                faces.update(itertools.combinations(s, r))
        self.dimension = max((len(f) - 1 for f in faces), default=-1)
        self.simplices = {n: sorted((f for f in faces if len(f) == n + 1), key=sort_key)
                          for n in range(self.dimension + 1)}
        self._complexes: dict = {}
        self._coalgebra = None

    def __contains__(self, s):
        return len(s) - 1 in self.simplices and tuple(s) in set(self.simplices[len(s) - 1])

    def cells(self, n: int | None = None) -> list[tuple]:
        if n is None:
            return [s for k in range(self.dimension + 1) for s in self.simplices[k]]
        return self.simplices.get(n, [])

    def maximal(self) -> list[tuple]:
        all_faces = set(self.cells())
        covered = set()
        for s in all_faces:
            for j in range(len(s)):
                covered.add(s[:j] + s[j + 1:])
        return sorted(all_faces - covered, key=sort_key)

    def chain_complex(self, ring: Ring = ZZ) -> BasedComplex:
        if ring.name not in self._complexes:
            basis = {n: list(cs) for n, cs in self.simplices.items()}
            bd = {}
            for n in range(1, self.dimension + 1):
                for s in self.simplices[n]:
                    bd[s] = Chain(((face(s, j), -1 if j % 2 else 1) for j in range(n + 1)), ring)
            aug = {s: 1 for s in self.simplices.get(0, [])}
            self._complexes[ring.name] = BasedComplex(ring, basis, bd, aug)
        return self._complexes[ring.name]

    def to_json(self) -> dict:
        return {"maximal_simplices": [list(s) for s in self.maximal()]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        try:
            return cls(data["maximal_simplices"])
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"malformed complex document: {exc}") from None

    def __repr__(self):
        return f"SimplicialComplex(f-vector={[len(self.cells(n)) for n in range(self.dimension + 1)]})"


def simplex(n: int) -> SimplicialComplex:
    """Δⁿ as an ordered simplicial complex on vertices 0..n."""
    if n < 0:
        raise StructuralError("n must be non-negative")
    return SimplicialComplex([tuple(range(n + 1))])


def standard_simplex(n: int, ring: Ring = ZZ) -> BasedComplex:
    """Chains of Δⁿ with the canonical basis of injective maps [m] → [n]."""
    return simplex(n).chain_complex(ring)


def face(x: tuple, j: int) -> tuple:
    return x[:j] + x[j + 1:]


def delete_positions(x: tuple, positions: Iterable[int]) -> tuple:
    """d_{u₁}⋯d_{u_k} x: drop the vertices at the given positions of x."""
    drop = set(positions)
    return tuple(v for p, v in enumerate(x) if p not in drop)


def split_selector(U: Sequence[int]) -> tuple[tuple, tuple]:
    """(U⁻, U⁺): u_i goes to U⁻ iff u_i ≢ i (mod 2), positions counted from 1."""
    minus, plus = [], []
    for i, u in enumerate(U, start=1):
        (plus if (u - i) % 2 == 0 else minus).append(u)
    return tuple(minus), tuple(plus)


def cup_i(x: tuple, i: int, ring: Ring = F2) -> Tensor:
    """Δ_i x = Σ_{U ⊂ {0..n}, |U| = n−i} d_{U⁻}x ⊗ d_{U⁺}x over 𝔽₂."""
    if ring.signed:
        raise RingCapabilityError("cup-i coproducts are only defined here over F2")
    n = len(x) - 1
    if i < 0 or i > n:
        return Tensor.zero(ring)
    out: dict = {}
    for U in itertools.combinations(range(n + 1), n - i):
        minus, plus = split_selector(U)
        pair = (delete_positions(x, minus), delete_positions(x, plus))
        out[pair] = out.get(pair, 0) + 1
    return Tensor(out, ring)


def steenrod_coalgebra(K: SimplicialComplex | int) -> CoalgebraStructure:
    """The cup-i coalgebra (C_•(K; 𝔽₂), Δ, ε)."""
    if isinstance(K, int):
        K = simplex(K)
    if K._coalgebra is None:
        K._coalgebra = CoalgebraStructure(
            K.chain_complex(F2), lambda x, k: cup_i(x, k, F2), name="steenrod", source=K,
        )
    return K._coalgebra


def face_inclusion_map(phi: Sequence[int]):
    """Chain map induced by the order embedding j ↦ phi[j] of Δᵐ into Δⁿ."""
    phi = tuple(phi)

    def on_cell(x):
        return tuple(phi[v] for v in x)

    return on_cell


# -- cochains and cohomology over 𝔽₂ -------------------------------------------

@dataclass(frozen=True)
class Cochain:
    """𝔽₂-valued cochain of one degree, stored as its support."""

    degree: int
    support: frozenset

    @classmethod
    def of(cls, degree: int, cells: Iterable) -> "Cochain":
        cells = [tuple(c) for c in cells]
        for c in cells:
            if len(c) != degree + 1:
                raise StructuralError(f"{c} is not a {degree}-simplex")
        return cls(degree, frozenset(cells))

    def __call__(self, cell) -> int:
        return 1 if cell in self.support else 0

    def evaluate(self, c: Chain) -> int:
        return sum(v for x, v in c.items() if x in self.support) & 1

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.degree != other.degree:
            raise StructuralError("adding cochains of different degrees")
        return Cochain(self.degree, self.support ^ other.support)

    def __bool__(self):
        return bool(self.support)

    def to_json(self) -> dict:
        return {"degree": self.degree, "support": [cell_name(c) for c in sorted(self.support, key=sort_key)]}

    @classmethod
    def from_json(cls, data: dict) -> "Cochain":
        return cls.of(data["degree"], (parse_cell_name(c) for c in data["support"]))

    def __repr__(self):
        return f"Cochain({self.degree}, {[cell_name(c) for c in sorted(self.support, key=sort_key)]})"


def coboundary(alpha: Cochain, K: SimplicialComplex) -> Cochain:
    """δα(x) = α(∂x) mod 2."""
    return Cochain(alpha.degree + 1, frozenset(
        x for x in K.cells(alpha.degree + 1)
        if sum(alpha(face(x, j)) for j in range(len(x))) & 1
    ))


def is_cocycle(alpha: Cochain, K: SimplicialComplex) -> bool:
    return not coboundary(alpha, K)


def _pair_against(alpha: Cochain, beta: Cochain, t: Tensor) -> int:
    return sum(v for (x, y), v in t.items() if x in alpha.support and y in beta.support) & 1


def cup_product(alpha: Cochain, beta: Cochain, K: SimplicialComplex) -> Cochain:
    """(α ⊗ β)Δ₀ as a cochain of degree |α| + |β|."""
    n = alpha.degree + beta.degree
    return Cochain(n, frozenset(x for x in K.cells(n) if _pair_against(alpha, beta, cup_i(x, 0))))


def steenrod_square(k: int, alpha: Cochain, K: SimplicialComplex) -> Cochain:
    """Sq^k α = (α ⊗ α)Δ_{|α|−k}, a cocycle of degree |α| + k."""
    if k < 0:
        raise ContractError("Sq^k needs k ≥ 0")
    if not is_cocycle(alpha, K):
        raise ContractError(f"{alpha!r} is not a cocycle", witness=alpha)
    n, i = alpha.degree + k, alpha.degree - k
    if i < 0:
        return Cochain(n, frozenset())
    return Cochain(n, frozenset(x for x in K.cells(n) if _pair_against(alpha, alpha, cup_i(x, i))))


class _Echelon:
    """Row-echelon basis of an 𝔽₂ subspace; vectors are int bitmasks."""

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}  # pivot bit -> (vector, tag)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        while v:
            p = v.bit_length() - 1
            if p not in self.rows:
                break
            rv, rt = self.rows[p]
            v ^= rv
            tag ^= rt
        return v, tag

    def full_reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        out = 0
        while v:
            p = v.bit_length() - 1
            if p in self.rows:
                rv, rt = self.rows[p]
                v ^= rv
                tag ^= rt
            else:
                out |= 1 << p
                v ^= 1 << p
        return out, tag

    def add(self, v: int, tag: int = 0) -> bool:
        v, tag = self.reduce(v, tag)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = (v, tag)
        return True

    def __len__(self):
        return len(self.rows)


class CohomologyF2:
    """H^•(K; 𝔽₂) by dense bitmask elimination.

    For each degree p keeps a basis of coboundaries and a list of cocycle
    representatives completing it to a basis of the cocycles.
    """

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        self.index = {p: {c: j for j, c in enumerate(K.cells(p))} for p in range(K.dimension + 1)}
        self._images = {}
        for p in range(K.dimension + 1):
            nxt = self.index.get(p + 1, {})
            rows = []
            for x in K.cells(p):
                v = 0
                for y in nxt:
                    # x is a face of y iff it is y with one vertex removed
                    if len(y) == len(x) + 1 and set(x) <= set(y):
                        v |= 1 << nxt[y]
                rows.append(v)
            self._images[p] = rows
        self._cocycles: dict[int, list[int]] = {}
        self._coboundaries: dict[int, _Echelon] = {}
        self._reps: dict[int, list[int]] = {}
        self._class_basis: dict[int, _Echelon] = {}
        for p in range(K.dimension + 1):
            self._cocycles[p] = self._kernel(self._images[p])
            B = _Echelon()
            for v in self._images.get(p - 1, []):
                B.add(v)
            self._coboundaries[p] = B
            full = _Echelon()
            for pivot, (v, _) in B.rows.items():
                full.rows[pivot] = (v, 0)
            reps = []
            for z in self._cocycles[p]:
                if full.add(z, 1 << len(reps)):
                    reps.append(z)
            self._reps[p] = reps
            self._class_basis[p] = full

    @staticmethod
    def _kernel(images: list[int]) -> list[int]:
        ech = _Echelon()
        kernel = []
        for j, v in enumerate(images):
            r, tag = ech.reduce(v, 1 << j)
            if r:
                ech.rows[r.bit_length() - 1] = (r, tag)
            else:
                kernel.append(tag)
        return kernel

    def _vector(self, alpha: Cochain) -> int:
        idx = self.index.get(alpha.degree, {})
        v = 0
        for c in alpha.support:
            if c not in idx:
                raise StructuralError(f"cochain mentions {cell_name(c)}, not a cell of the complex")
            v |= 1 << idx[c]
        return v

    def _cochain(self, p: int, v: int) -> Cochain:
        cells = self.complex.cells(p)
        return Cochain(p, frozenset(cells[j] for j in range(len(cells)) if v >> j & 1))

    def rank(self, p: int) -> int:
        return len(self._reps.get(p, []))

    def ranks(self) -> tuple[int, ...]:
        return tuple(self.rank(p) for p in range(self.complex.dimension + 1))

    def generators(self, p: int) -> list[Cochain]:
        return [self._cochain(p, v) for v in self._reps.get(p, [])]

    def cocycle_basis(self, p: int) -> list[Cochain]:
        return [self._cochain(p, v) for v in self._cocycles.get(p, [])]

    def is_coboundary(self, alpha: Cochain) -> bool:
        if alpha.degree not in self._coboundaries:
            return not alpha
        v, _ = self._coboundaries[alpha.degree].reduce(self._vector(alpha))
        return v == 0

    def reduce(self, alpha: Cochain) -> Cochain:
        """Normal form of α modulo coboundaries."""
        if alpha.degree not in self._coboundaries:
            return alpha
        v, _ = self._coboundaries[alpha.degree].full_reduce(self._vector(alpha))
        return self._cochain(alpha.degree, v)

    def coordinates(self, alpha: Cochain) -> tuple[int, ...]:
        """Coordinates of the class [α] in the basis of :meth:`generators`."""
        p = alpha.degree
        if p not in self._class_basis:
            return ()
        if not is_cocycle(alpha, self.complex):
            raise ContractError(f"{alpha!r} is not a cocycle", witness=alpha)
        v, tag = self._class_basis[p].reduce(self._vector(alpha))
        assert v == 0
        return tuple(tag >> j & 1 for j in range(self.rank(p)))

    def random_cocycle(self, rng: random.Random, p: int) -> Cochain:
        v = 0
        for z in self._cocycles.get(p, []):
            if rng.random() < 0.5:
                v ^= z
        return self._cochain(p, v)


def cohomology_f2(K: SimplicialComplex) -> CohomologyF2:
    return CohomologyF2(K)


# -- sample complexes ---------------------------------------------------------

RP2_MAXIMAL = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5),
]


def rp2() -> SimplicialComplex:
    """The minimal 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex(RP2_MAXIMAL)


def random_subcomplex(rng: random.Random, n: int, density: float = 0.5) -> SimplicialComplex:
    """Downward closure of a random family of faces of Δⁿ."""
    faces = [s for r in range(1, n + 2) for s in itertools.combinations(range(n + 1), r)]
    chosen = [s for s in faces if rng.random() < density]
    return SimplicialComplex(chosen or [(0,)])
