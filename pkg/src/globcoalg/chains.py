"""Exact sparse chains over ℤ or 𝔽₂ and based augmented complexes.

A cell is any hashable: globular cells are strings, simplices are tuples of
vertices. A tensor term is a pair ``(x, y)`` of cells.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping

from .errors import RingCapabilityError, StructuralError
from .rings import ZZ, Ring, ring_by_name

Cell = Hashable


def sort_key(cell):
    # ints < strings < tuples; tuples by length then entrywise
    if isinstance(cell, bool) or isinstance(cell, int):
        return (0, cell)
    if isinstance(cell, str):
        return (1, cell)
    if isinstance(cell, tuple):
        return (2, len(cell), tuple(sort_key(c) for c in cell))
    return (3, repr(cell))


def cell_name(cell) -> str:
    if isinstance(cell, str):
        return cell
    if isinstance(cell, tuple) and all(isinstance(v, int) for v in cell):
        return "[" + ",".join(map(str, cell)) + "]"
    return repr(cell)


def parse_cell_name(name: str):
    if name.startswith("[") and name.endswith("]"):
        body = name[1:-1]
        return tuple(int(v) for v in body.split(",")) if body else ()
    return name


class Chain:
    """A finite linear combination of cells in canonical sparse form.

    Zero coefficients are never stored, so ``==`` is coefficient-wise
    equality.
    """

    __slots__ = ("_terms", "ring", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), ring: Ring = ZZ):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for cell, coeff in items:
            acc[cell] = acc.get(cell, 0) + coeff
        self._terms = {c: ring(v) for c, v in acc.items() if ring(v) != 0}
        self.ring = ring
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, ring: Ring):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.ring = ring
        obj._hash = None
        return obj

    @classmethod
    def of(cls, *cells, ring: Ring = ZZ):
        return cls(((c, 1) for c in cells), ring)

    @classmethod
    def zero(cls, ring: Ring = ZZ):
        return cls._raw({}, ring)

    # -- mapping-like access -------------------------------------------
    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coefficient(self, cell) -> int:
        return self._terms.get(cell, 0)

    def __getitem__(self, cell) -> int:
        return self._terms.get(cell, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    # -- arithmetic -----------------------------------------------------
    def _combine(self, other: "Chain", sign: int):
        if not isinstance(other, Chain):
            return NotImplemented
        if other.ring != self.ring:
            raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")
        ring = self.ring
        out = dict(self._terms)
        for c, v in other._terms.items():
            w = ring(out.get(c, 0) + sign * v)
            if w:
                out[c] = w
            else:
                out.pop(c, None)
        return type(self)._raw(out, ring)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar: int):
        ring = self.ring
        s = ring(scalar)
        if s == 0:
            return type(self)._raw({}, ring)
        return type(self)._raw({c: ring(s * v) for c, v in self._terms.items() if ring(s * v)}, ring)

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return self.scale(scalar)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.name, frozenset(self._terms.items())))
        return self._hash

    def map_cells(self, fn: Callable) -> "Chain":
        """Linear extension of a cell -> Chain function."""
        out = Chain.zero(self.ring)
        for c, v in self._terms.items():
            out = out + fn(c).scale(v)
        return out

    def lift(self, ring: Ring) -> "Chain":
        """Coefficient-wise set map into another ring (0 ↦ 0, 1 ↦ 1 for 𝔽₂ → ℤ)."""
        return type(self)._raw({c: ring(v) for c, v in self._terms.items() if ring(v)}, ring)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for c, v in self.sorted_items():
            name = self._cell_repr(c)
            if v == 1:
                parts.append(("+", name))
            elif v == -1:
                parts.append(("-", name))
            elif v < 0:
                parts.append(("-", f"{-v}*{name}"))
            else:
                parts.append(("+", f"{v}*{name}"))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    @staticmethod
    def _cell_repr(cell):
        return cell_name(cell)


class Tensor(Chain):
    """Element of C ⊗ C; cells are pairs ``(x, y)``."""

    __slots__ = ()

    @staticmethod
    def _cell_repr(cell):
        x, y = cell
        return f"{cell_name(x)}⊗{cell_name(y)}"


def tensor(a: Chain, b: Chain) -> Tensor:
    ring = a.ring
    return Tensor(
        (((x, y), u * v) for x, u in a.items() for y, v in b.items()),
        ring,
    )


def positive_negative_parts(c: Chain) -> tuple[Chain, Chain]:
    """Split ``c = c⁺ − c⁻`` with both parts having nonnegative coefficients."""
    if not c.ring.signed:
        raise RingCapabilityError(f"positive/negative parts need signed coefficients, ring is {c.ring}")
    plus = {x: v for x, v in c.items() if v > 0}
    minus = {x: -v for x, v in c.items() if v < 0}
    return type(c)._raw(plus, c.ring), type(c)._raw(minus, c.ring)


@dataclass(frozen=True, eq=False)
class BasedComplex:
    """Augmented chain complex with a distinguished basis.

    ``boundary`` and ``augmentation`` are given on basis cells; missing
    entries mean zero.
    """

    ring: Ring
    basis: dict  # degree -> tuple of cells
    boundary_table: dict = field(default_factory=dict)
    augmentation_table: dict = field(default_factory=dict)

    def __post_init__(self):
        degrees = {}
        basis = {}
        for n in sorted(self.basis):
            if n < 0:
                raise StructuralError(f"negative degree {n}")
            cells = tuple(self.basis[n])
            for c in cells:
                if c in degrees:
                    raise StructuralError(f"duplicate basis cell {cell_name(c)}")
                degrees[c] = n
            basis[n] = cells
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_degrees", degrees)
        table = {}
        for c in degrees:
            d = self.boundary_table.get(c)
            if d is None:
                d = Chain.zero(self.ring)
            elif not isinstance(d, Chain):
                d = Chain(d, self.ring)
            elif d.ring != self.ring:
                d = Chain(d.items(), self.ring)
            for y in d.support():
                if y not in degrees:
                    raise StructuralError(f"boundary of {cell_name(c)} mentions unknown cell {cell_name(y)}")
                if degrees[y] != degrees[c] - 1:
                    raise StructuralError(f"boundary of {cell_name(c)} is not of degree {degrees[c] - 1}")
            table[c] = d
        for c in self.boundary_table:
            if c not in degrees:
                raise StructuralError(f"boundary given for unknown cell {cell_name(c)}")
        object.__setattr__(self, "boundary_table", table)
        aug = {}
        for c, v in self.augmentation_table.items():
            if c not in degrees:
                raise StructuralError(f"augmentation given for unknown cell {cell_name(c)}")
            if self.ring(v) and degrees[c] != 0:
                raise StructuralError(f"augmentation nonzero on {cell_name(c)} of positive degree")
            if self.ring(v):
                aug[c] = self.ring(v)
        object.__setattr__(self, "augmentation_table", aug)

    # -- basis queries --------------------------------------------------
    def __contains__(self, cell):
        return cell in self._degrees

    def cells(self, n: int | None = None) -> tuple:
        if n is None:
            return tuple(c for k in sorted(self.basis) for c in self.basis[k])
        return self.basis.get(n, ())

    @property
    def max_degree(self) -> int:
        return max((n for n, cs in self.basis.items() if cs), default=-1)

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(self.basis.get(n, ())) for n in range(self.max_degree + 1))

    def degree(self, cell) -> int:
        try:
            return self._degrees[cell]
        except KeyError:
            raise StructuralError(f"unknown cell {cell_name(cell)}") from None

    def basis_chain(self, cell) -> Chain:
        self.degree(cell)
        return Chain._raw({cell: 1}, self.ring)

    def chain(self, terms) -> Chain:
        c = terms if isinstance(terms, Chain) else Chain(terms, self.ring)
        self._check(c)
        return c

    def _check(self, c: Chain):
        for x in c.support():
            if x not in self._degrees:
                raise StructuralError(f"unknown cell {cell_name(x)}")

    def degree_of(self, c: Chain) -> int | None:
        """Common degree of a homogeneous nonzero chain, else None."""
        degs = {self.degree(x) for x in c.support()}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, c: Chain, n: int | None = None) -> bool:
        if not c:
            return True
        d = self.degree_of(c)
        return d is not None and (n is None or d == n)

    def truncate(self, c: Chain, n: int) -> Chain:
        """Projection onto C_{≤n}."""
        return type(c)._raw({x: v for x, v in c.items() if self.degree(x) <= n}, c.ring)

    # -- structure maps ---------------------------------------------------
    def boundary(self, c) -> Chain:
        if not isinstance(c, Chain):
            c = self.basis_chain(c)
        self._check(c)
        ring = self.ring
        out: dict = {}
        for x, v in c.items():
            for y, w in self.boundary_table[x].items():
                out[y] = out.get(y, 0) + v * w
        return Chain(out, ring)

    def augment(self, c) -> int:
        if not isinstance(c, Chain):
            c = self.basis_chain(c)
        self._check(c)
        return self.ring(sum(v * self.augmentation_table.get(x, 0) for x, v in c.items()))

    def tensor_boundary(self, t: Tensor) -> Tensor:
        """∂(x⊗y) = ∂x⊗y + (−1)^{|x|} x⊗∂y."""
        ring = self.ring
        out: dict = {}
        for (x, y), v in t.items():
            for x2, w in self.boundary_table[x].items():
                out[(x2, y)] = out.get((x2, y), 0) + v * w
            sign = -1 if self.degree(x) % 2 else 1
            for y2, w in self.boundary_table[y].items():
                out[(x, y2)] = out.get((x, y2), 0) + sign * v * w
        return Tensor(out, ring)

    def koszul_swap(self, t: Tensor) -> Tensor:
        """T(x⊗y) = (−1)^{|x||y|} y⊗x."""
        out = {}
        for (x, y), v in t.items():
            sign = -1 if (self.degree(x) * self.degree(y)) % 2 else 1
            out[(y, x)] = sign * v
        return Tensor(out, t.ring)

    def tensor_apply(self, left: Callable | None, right: Callable | None, t: Tensor) -> Chain:
        """Apply ``1⊗φ`` or ``φ⊗1`` for a scalar-valued φ (used for counits)."""
        ring = self.ring
        out: dict = {}
        for (x, y), v in t.items():
            if right is not None:
                s = right(y)
                if s:
                    out[x] = out.get(x, 0) + v * s
            else:
                s = left(x)
                if s:
                    out[y] = out.get(y, 0) + v * s
        return Chain(out, ring)

    def tensor_truncated(self, t: Tensor, n: int) -> bool:
        """True iff t lies in C_{≤n} ⊗ C_{≤n}."""
        return all(self.degree(x) <= n and self.degree(y) <= n for (x, y) in t.support())

    def validate(self):
        """Check ∂∂ = 0 and ε∂ = 0 on every basis cell."""
        from .report import Report

        rep = Report("complex")
        for c in self.cells():
            dd = self.boundary(self.boundary_table[c])
            if dd:
                rep.add("boundary-squared", cell=c, lhs=dd, rhs=Chain.zero(self.ring))
            if self.degree(c) == 1:
                e = self.augment(self.boundary_table[c])
                if e:
                    rep.add("augmentation-chain-map", cell=c, lhs=e, rhs=0)
        return rep

    def with_ring(self, ring: Ring) -> "BasedComplex":
        """Same basis and tables, coefficients lifted into ``ring``."""
        return BasedComplex(
            ring,
            dict(self.basis),
            {c: d.lift(ring) for c, d in self.boundary_table.items()},
            dict(self.augmentation_table),
        )


def linear_map(fn: Callable, c: Chain, ring: Ring | None = None) -> Chain:
    """Linear extension of ``fn: cell -> Chain`` evaluated on ``c``."""
    ring = ring or c.ring
    out: dict = {}
    kind = Chain
    for x, v in c.items():
        img = fn(x)
        kind = type(img)
        for y, w in img.items():
            out[y] = out.get(y, 0) + v * w
    return kind(out, ring)


# -- JSON ----------------------------------------------------------------

def chain_to_json(c: Chain, complex: BasedComplex | None = None) -> dict:
    degree = complex.degree_of(c) if complex is not None and c else None
    return {
        "degree": degree,
        "terms": [{"cell": cell_name(x), "coeff": v} for x, v in c.sorted_items()],
    }


def chain_from_json(data: dict, ring: Ring, complex: BasedComplex | None = None) -> Chain:
    c = Chain(((parse_cell_name(t["cell"]), int(t["coeff"])) for t in data.get("terms", [])), ring)
    if complex is not None:
        complex._check(c)
        if data.get("degree") is not None and c and not complex.is_homogeneous(c, data["degree"]):
            raise StructuralError(f"chain {c!r} is not of declared degree {data['degree']}")
    return c


def complex_to_json(C: BasedComplex) -> dict:
    return {
        "ring": C.ring.name,
        "basis": [[cell_name(c) for c in C.cells(n)] for n in range(C.max_degree + 1)],
        "boundary": {cell_name(c): chain_to_json(C.boundary_table[c], C) for c in C.cells() if C.boundary_table[c]},
        "augmentation": {cell_name(c): v for c, v in sorted(C.augmentation_table.items(), key=lambda kv: sort_key(kv[0]))},
    }


def complex_from_json(data: dict) -> BasedComplex:
    ring = ring_by_name(data.get("ring", "z"))
    basis = {n: [parse_cell_name(x) for x in cells] for n, cells in enumerate(data["basis"])}
    boundary = {parse_cell_name(k): chain_from_json(v, ring) for k, v in data.get("boundary", {}).items()}
    aug = {parse_cell_name(k): int(v) for k, v in data.get("augmentation", {}).items()}
    return BasedComplex(ring, basis, boundary, aug)


def boundary(c, C: BasedComplex) -> Chain:
    return C.boundary(c)


def tensor_boundary(t: Tensor, C: BasedComplex) -> Tensor:
    return C.tensor_boundary(t)


def koszul_swap(t: Tensor, C: BasedComplex) -> Tensor:
    return C.koszul_swap(t)


def augment(c, C: BasedComplex) -> int:
    return C.augment(c)
