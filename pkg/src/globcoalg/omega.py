"""ω-categories inside μ(C): closures of atoms, strong augmented directed complexes, orientals, ξ.

A generated ω-category is stored as the finite set of its cells; closure
runs a worklist fixpoint over sources, targets and compositions, with
hash-based dedup on canonical :class:`MuElement` values.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .chains import BasedComplex, Chain, cell_name, positive_negative_parts, sort_key
from .coalgebra import CoalgebraMap, CoalgebraStructure, atom, classify_basis_image, is_group_like
from .errors import BoundExceeded, ContractError, RingCapabilityError
from .mu import MuElement, compose, mu_apply, mu_source, mu_target, mu_validate
from .report import Report
from .rings import ZZ
from .simplicial import standard_simplex, steenrod_coalgebra


@dataclass(frozen=True)
class Bounds:
    max_elements: int = 100_000
    max_coefficient: int = 64

    @classmethod
    def parse(cls, text: str) -> "Bounds":
        elems, coeff = text.split(",")
        return cls(int(elems), int(coeff))


DEFAULT_BOUNDS = Bounds()


@dataclass(eq=False)
class OmegaCat:
    elements: tuple  # MuElements, deterministically ordered
    complex: BasedComplex
    generators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        self._members = frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in self._members

    def __iter__(self):
        return iter(self.elements)

    def element_set(self) -> frozenset:
        return self._members

    def to_json(self) -> dict:
        return {
            "count": len(self.elements),
            "elements": [
                dict(m.to_json(self.complex), generator=m in self.generators) for m in self.elements
            ],
        }


def generate_omega(atoms, complex: BasedComplex, bounds: Bounds = DEFAULT_BOUNDS) -> OmegaCat:
    """Least subset of μ(C) containing ``atoms`` closed under s_k, t_k and ∘_m."""
    atoms = list(dict.fromkeys(atoms))
    for a in atoms:
        rep = mu_validate(a, complex)
        if not rep.passed:
            raise ContractError(f"generator {a!r} is not in μ(C): {rep.first}", witness=a)
    seen: set = set()
    # (m, boundary cell) -> elements whose s_m / t_m equals it
    by_source: dict = {}
    by_target: dict = {}
    queue: deque = deque()

    def push(x: MuElement):
        if x in seen:
            return
        if x.max_coefficient() > bounds.max_coefficient:
            raise BoundExceeded("max_coefficient", bounds.max_coefficient)
        seen.add(x)
        if len(seen) > bounds.max_elements:
            raise BoundExceeded("max_elements", bounds.max_elements)
        queue.append(x)

    for a in atoms:
        push(a)
    while queue:
        x = queue.popleft()
        for m in range(x.top):
            s, t = mu_source(x, m), mu_target(x, m)
            push(s)
            push(t)
            by_source.setdefault((m, s), []).append(x)
            by_target.setdefault((m, t), []).append(x)
            for a in list(by_target.get((m, s), ())):
                push(x + a - s)
            for b in list(by_source.get((m, t), ())):
                push(b + x - t)
    ordered = tuple(sorted(seen, key=MuElement.sort_key))
    return OmegaCat(ordered, complex, frozenset(atoms))


class _Index:
    def __init__(self, X: OmegaCat):
        self.by_source: dict = {}
        self.by_target: dict = {}
        for x in X.elements:
            for m in range(x.top):
                self.by_source.setdefault((m, mu_source(x, m)), []).append(x)
                self.by_target.setdefault((m, mu_target(x, m)), []).append(x)

    def after(self, a, m):
        """Every b with s_m(b) = t_m(a), the identity t_m(a) included."""
        t = mu_target(a, m)
        return self.by_source.get((m, t), []) + [t]


def check_omega_axioms(X: OmegaCat, samples: int | None = None, seed: int = 0,
                       interchange_samples: int | None = None) -> Report:
    """Closure, boundary compatibility, unitality, associativity and interchange.

    With ``samples=None`` every composable pair and triple is checked;
    otherwise that many random composable triples are drawn.
    """
    rep = Report("omega-axioms")
    idx = _Index(X)
    members = X.element_set()
    elems = list(X.elements)
    counts = {"pairs": 0, "triples": 0, "interchange": 0}

    def member(y, what):
        if y not in members:
            rep.add("closure", detail=f"{what} = {y!r} not in the ω-category")

    for x in elems:
        for k in range(x.top):
            member(mu_source(x, k), "source")
            member(mu_target(x, k), "target")
            # unitality: composing with identities on the boundary is trivial
            if compose(x, mu_source(x, k), k) != x:
                rep.add("unit-right", k=k, detail=repr(x))
            if compose(mu_target(x, k), x, k) != x:
                rep.add("unit-left", k=k, detail=repr(x))
            # globularity of μ(C)'s structure maps
            for j in range(k):
                if mu_source(mu_source(x, k), j) != mu_source(x, j) or mu_source(mu_target(x, k), j) != mu_source(x, j):
                    rep.add("globularity", k=k, detail=f"s_{j} relation fails on {x!r}")
                if mu_target(mu_target(x, k), j) != mu_target(x, j) or mu_target(mu_source(x, k), j) != mu_target(x, j):
                    rep.add("globularity", k=k, detail=f"t_{j} relation fails on {x!r}")

    def check_pair(b, a, m):
        counts["pairs"] += 1
        ba = compose(b, a, m)
        member(ba, f"composite at {m}")
        if mu_source(ba, m) != mu_source(a, m) or mu_target(ba, m) != mu_target(b, m):
            rep.add("composite-boundary", k=m, detail=f"{b!r} ∘ {a!r}")
        for p in range(max(ba.top, a.top, b.top)):
            if p < m:
                if mu_source(ba, p) != mu_source(a, p) or mu_target(ba, p) != mu_target(b, p):
                    rep.add("composite-boundary", k=p, detail=f"low boundary of {b!r} ∘_{m} {a!r}")
            elif p > m:
                if mu_source(ba, p) != compose(mu_source(b, p), mu_source(a, p), m):
                    rep.add("composite-boundary", k=p, detail=f"s_{p} of {b!r} ∘_{m} {a!r}")
                if mu_target(ba, p) != compose(mu_target(b, p), mu_target(a, p), m):
                    rep.add("composite-boundary", k=p, detail=f"t_{p} of {b!r} ∘_{m} {a!r}")
        return ba

    def check_triple(c, b, a, m):
        counts["triples"] += 1
        left = compose(compose(c, b, m), a, m)
        right = compose(c, compose(b, a, m), m)
        if left != right:
            rep.add("associativity", k=m, lhs=repr(left), rhs=repr(right))

    def check_interchange(a, b, a2, b2, p, q):
        # (b2 ∘_q a2) ∘_p (b ∘_q a) = (b2 ∘_p b) ∘_q (a2 ∘_p a)
        counts["interchange"] += 1
        left = compose(compose(b2, a2, q), compose(b, a, q), p)
        right = compose(compose(b2, b, p), compose(a2, a, p), q)
        if left != right:
            rep.add("interchange", k=q, lhs=repr(left), rhs=repr(right), detail=f"p={p}")

    if samples is None:
        for a in elems:
            for m in range(a.top + 1):
                for b in idx.after(a, m):
                    check_pair(b, a, m)
                    for c in idx.after(b, m):
                        check_triple(c, b, a, m)
        for a in elems:
            for q in range(1, a.top + 1):
                for b in idx.after(a, q):
                    for p in range(q):
                        for a2 in idx.after(a, p):
                            for b2 in idx.after(a2, q):
                                if mu_source(b2, p) == mu_target(b, p):
                                    check_interchange(a, b, a2, b2, p, q)
    else:
        rng = random.Random(seed)
        starts = [(a, m) for a in elems for m in range(a.top + 1)]
        tries = 0
        while counts["triples"] < samples and starts and tries < 50 * samples:
            tries += 1
            a, m = rng.choice(starts)
            b = rng.choice(idx.after(a, m))
            c = rng.choice(idx.after(b, m))
            check_pair(b, a, m)
            check_triple(c, b, a, m)
        want = samples if interchange_samples is None else interchange_samples
        qstarts = [(a, q) for a, q in starts if q >= 1]
        tries = 0
        while counts["interchange"] < want and qstarts and tries < 50 * want:
            tries += 1
            a, q = rng.choice(qstarts)
            b = rng.choice(idx.after(a, q))
            p = rng.randrange(q)
            a2 = rng.choice(idx.after(a, p))
            b2s = [y for y in idx.after(a2, q) if mu_source(y, p) == mu_target(b, p)]
            if b2s:
                check_interchange(a, b, a2, rng.choice(b2s), p, q)
    rep.stats.update(counts)
    return rep


# -- strong augmented directed complexes -------------------------------------

def steiner_atom(C: BasedComplex, b) -> MuElement:
    """b_i^± = (∂ b_{i+1}^±)^± below the degree of b, b at its degree."""
    if not C.ring.signed:
        raise RingCapabilityError(f"Steiner atoms need ℤ coefficients, complex is over {C.ring}")
    n = C.degree(b)
    minus = [Chain.zero(C.ring)] * (n + 1)
    plus = [Chain.zero(C.ring)] * (n + 1)
    minus[n] = plus[n] = C.basis_chain(b)
    for i in range(n - 1, -1, -1):
        plus[i] = positive_negative_parts(C.boundary(plus[i + 1]))[0]
        minus[i] = positive_negative_parts(C.boundary(minus[i + 1]))[1]
    return MuElement(minus, plus, C.ring)


def sadc_order(C: BasedComplex) -> dict:
    """Generating relation c₁ ≤ c₂ on basis cells, as successor lists (reflexive pairs omitted)."""
    succ: dict = {c: set() for c in C.cells()}
    for c in C.cells():
        plus, minus = positive_negative_parts(C.boundary(c))
        for y, v in minus.items():
            if v >= 1:
                succ[y].add(c)  # y ≤ c: (∂c)^- − y ∈ C⁺
        for y, v in plus.items():
            if v >= 1:
                succ[c].add(y)  # c ≤ y: (∂c)^+ − y ∈ C⁺
    return succ


def _find_cycle(succ: dict):
    """A directed cycle as a list of cells, or None."""
    G = nx.DiGraph()
    for c in sorted(succ, key=sort_key):
        G.add_node(c)
        G.add_edges_from((c, y) for y in sorted(succ[c], key=sort_key))
    try:
        edges = nx.find_cycle(G)
    except nx.NetworkXNoCycle:
        return None
    return [u for u, _ in edges]


def validate_sadc(C: BasedComplex) -> Report:
    """Unital basis plus antisymmetry of the transitive closure of ≤."""
    rep = Report("sadc")
    if not C.ring.signed:
        rep.add("ring", detail=f"SADCs live over ℤ, complex is over {C.ring}")
        return rep
    base = C.validate()
    rep.extend(base)
    for b in C.cells():
        a = steiner_atom(C, b)
        for eta in "-+":
            e = C.augment(a.entry(0, eta))
            if e != 1:
                rep.add("unitality", cell=b, lhs=e, rhs=1, detail=f"ε(b_0^{eta}) = {e}")
    cycle = _find_cycle(sadc_order(C))
    if cycle is not None:
        rep.add("order-cycle", cell=list(cycle), detail=" ≤ ".join(cell_name(c) for c in cycle + cycle[:1]))
    return rep


def oriental(n: int, bounds: Bounds = DEFAULT_BOUNDS) -> OmegaCat:
    """𝒪ₙ: the sub-ω-category of μ(C(Δⁿ; ℤ)) generated by the Steiner atoms."""
    C = standard_simplex(n, ZZ)
    return generate_omega([steiner_atom(C, b) for b in C.cells()], C, bounds)


def xi(C: CoalgebraStructure, bounds: Bounds = DEFAULT_BOUNDS, lift: BasedComplex | None = None) -> OmegaCat:
    """Sub-ω-category of μ(C) generated by the atoms of a group-like coalgebra.

    With ``lift`` the atoms are carried coefficient-wise into that complex
    (same basis, e.g. 𝔽₂ → ℤ) before closing up.
    """
    K = C.complex
    for b in K.cells():
        if not is_group_like(C, b):
            raise ContractError(f"basis cell {cell_name(b)} is not group-like", witness=b)
    atoms = [atom(C, b) for b in K.cells()]
    if lift is not None:
        atoms = [a.lift(lift.ring) for a in atoms]
        K = lift
    return generate_omega(atoms, K, bounds)


def compare_atoms(n: int) -> Report:
    """Steenrod atoms of Δⁿ, lifted 𝔽₂ → ℤ, against Steiner atoms, entrywise."""
    rep = Report("compare-atoms", stats={"n": n})
    S = steenrod_coalgebra(n)
    Z = standard_simplex(n, ZZ)
    count = 0
    for sigma in Z.cells():
        count += 1
        steiner = steiner_atom(Z, sigma)
        bad = [(k, eta, v) for k in range(steiner.top + 1) for eta in "-+"
               for _, v in steiner.entry(k, eta).items() if v not in (0, 1)]
        if bad:
            rep.add("non-binary-steiner", cell=sigma, detail=f"coefficients {bad}")
        lifted = atom(S, sigma).lift(ZZ)
        for k in range(max(lifted.top, steiner.top) + 1):
            for eta in "-+":
                if lifted.entry(k, eta) != steiner.entry(k, eta):
                    rep.add("atom-mismatch", cell=sigma, k=k, lhs=lifted.entry(k, eta),
                            rhs=steiner.entry(k, eta), detail=f"eta={eta}")
    rep.stats["cells"] = count
    return rep


def induced_atom_map(f: CoalgebraMap) -> dict:
    """μ(f) on the atoms of the source: a ↦ f⟨a⟩, labelled by the basis cell f(a) is (None for zero)."""
    out = {}
    for a in f.source.complex.cells():
        image = mu_apply(f, atom(f.source, a), f.target.ring)
        out[a] = (classify_basis_image(f, a), image)
    return out
