"""The acceptance suite: ten exact, seeded checks with wall-clock limits.

Each ``criterion_N`` returns a :class:`Outcome`; :func:`run_all` runs them
in order and :func:`format_line` renders the one-line verdicts printed by
``globcoalg selftest`` and the pytest wrapper.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from unittest import mock

from . import coalgebra, globular, simplicial
from .chains import Chain
from .coalgebra import CoalgebraMap, atom, classify_basis_image, validate_coalgebra_map, validate_cosymmetric
from .errors import ContractError
from .globular import (
    GlobularSet, boundary_representable, chains_of_map, globular_coalgebra, iter_globular_maps,
    random_globular_map, random_globular_set, reconstruct_map, representable,
)
from .mu import mu_validate
from .omega import DEFAULT_BOUNDS, check_omega_axioms, compare_atoms, oriental, steiner_atom, validate_sadc
from .oracles import as_oracle_element, closure_oracle, front_back_cup, square_of_degree_one_generator, steiner_atom_oracle
from .chains import BasedComplex
from .rings import F2, ZZ
from .simplicial import (
    RP2_MAXIMAL, Cochain, cohomology_f2, cup_product, random_subcomplex, rp2, standard_simplex,
    steenrod_coalgebra, steenrod_square,
)

LIMITS = {1: 10.0, 2: 10.0, 3: 30.0, 4: 30.0, 5: 5.0, 6: 10.0, 7: 60.0, 8: 5.0, 9: 30.0, 10: 20.0}

NAMES = {
    1: "cosymmetric relation, globular coalgebras",
    2: "cosymmetric relation, cup-i coalgebras",
    3: "globular maps <-> coalgebra maps round trips",
    4: "basis images are zero or a single cell",
    5: "atoms are elements of mu(C)",
    6: "Steenrod atoms equal Steiner atoms",
    7: "orientals: closure, counts, omega-category axioms",
    8: "strong augmented directed complexes",
    9: "Steenrod squares",
    10: "mutation sensitivity",
}


@dataclass
class Outcome:
    number: int
    passed: bool
    detail: str
    seconds: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return NAMES[self.number]

    @property
    def limit(self) -> float:
        return LIMITS[self.number]

    @property
    def ok(self) -> bool:
        return self.passed and self.seconds < self.limit

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "pass": self.ok,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "limit": self.limit,
            "stats": self.stats,
        }


def format_line(o: Outcome, timing: bool = True) -> str:
    verdict = "PASS" if o.ok else "FAIL"
    if o.passed and not o.ok:
        detail = f"{o.detail}; over time limit"
    else:
        detail = o.detail
    line = f"criterion {o.number:>2} {verdict}  {o.name}: {detail}"
    if timing:
        line += f" [{o.seconds:.2f}s < {o.limit:.0f}s]"
    return line


def _timed(number: int, fn, *args) -> Outcome:
    t0 = time.perf_counter()
    passed, detail, stats = fn(*args)
    return Outcome(number, passed, detail, time.perf_counter() - t0, stats)


# -- 1 ---------------------------------------------------------------------

def _globular_fixtures(seed: int) -> list[GlobularSet]:
    sets = []
    for n in range(5):
        sets.append(representable(n))
        sets.append(boundary_representable(n))
    rng = random.Random(seed)
    sets.extend(random_globular_set(rng, max_dim=4, max_cells=6) for _ in range(200))
    return sets


def _check_globular_cosymmetric(seed: int):
    checked, failures = 0, []
    for X in _globular_fixtures(seed):
        for ring in (ZZ, F2):
            C = globular_coalgebra(X, ring)
            rep = validate_cosymmetric(C, fail_fast=True)
            checked += 1
            if not rep.passed:
                failures.append((repr(X), ring, rep.first))
    if failures:
        X, ring, v = failures[0]
        return False, f"{len(failures)} failing coalgebras, first {X} over {ring}: {v}", {"checked": checked}
    return True, f"{checked} coalgebras (G_n, boundary G_(n+1), 200 random; Z and F2)", {"checked": checked}


def criterion_1(seed: int = 0) -> Outcome:
    return _timed(1, _check_globular_cosymmetric, seed)


# -- 2 ---------------------------------------------------------------------

def _check_steenrod_cosymmetric():
    for n in range(7):
        rep = validate_cosymmetric(steenrod_coalgebra(n), kmax=n + 2, fail_fast=True)
        if not rep.passed:
            return False, f"Delta^{n}: {rep.first}", {"n": n}
    return True, "Delta^n for n <= 6, kmax = n+2, over F2", {"max_n": 6}


def criterion_2(seed: int = 0) -> Outcome:
    return _timed(2, _check_steenrod_cosymmetric)


# -- 3 and 4 share a pool of maps ------------------------------------------

@dataclass
class MapPool:
    direct: list = field(default_factory=list)      # F
    composed: list = field(default_factory=list)    # (F, G)
    distinct: list = field(default_factory=list)    # (F, G) with F != G


def _sized_pair(rng: random.Random):
    X = random_globular_set(rng, max_dim=3, max_cells=3)
    Y = random_globular_set(rng, max_dim=3, max_cells=4, extra_truncation=X.truncation)
    return X, Y


@lru_cache(maxsize=4)
def map_pool(seed: int = 0) -> MapPool:
    """500 maps, 200 composable pairs and 200 pairs of distinct parallel maps."""
    rng = random.Random(seed)
    pool = MapPool()
    for _ in range(500):
        X, Y = _sized_pair(rng)
        pool.direct.append(random_globular_map(rng, X, Y))
    for _ in range(200):
        X, Y = _sized_pair(rng)
        Z = random_globular_set(rng, max_dim=3, max_cells=4, extra_truncation=Y.truncation)
        pool.composed.append((random_globular_map(rng, X, Y), random_globular_map(rng, Y, Z)))
    while len(pool.distinct) < 200:
        X, Y = _sized_pair(rng)
        maps = []
        for F in iter_globular_maps(X, Y, rng):
            if not maps or F != maps[0]:
                maps.append(F)
            if len(maps) == 2:
                pool.distinct.append(tuple(maps))
                break
    return pool


def _pool_coalgebra_maps(pool: MapPool, ring):
    """Every coalgebra map the round trips use, over one ring."""
    maps = [chains_of_map(F, ring) for F in pool.direct]
    maps += [chains_of_map(G, ring).compose(chains_of_map(F, ring)) for F, G in pool.composed]
    maps += [chains_of_map(H, ring) for pair in pool.distinct for H in pair]
    return maps


def _check_round_trips(seed: int):
    pool = map_pool(seed)
    for ring in (ZZ, F2):
        for F in pool.direct:
            if reconstruct_map(chains_of_map(F, ring), F.source, F.target) != F:
                return False, f"reconstruct(C(F)) != F for {F.source!r} -> {F.target!r} over {ring}", {}
        for F, G in pool.composed:
            f = chains_of_map(G, ring).compose(chains_of_map(F, ring))
            rep = validate_coalgebra_map(f, fail_fast=True)
            if not rep.passed:
                return False, f"composite of chain maps is not a coalgebra map over {ring}: {rep.first}", {}
            H = reconstruct_map(f, F.source, G.target)
            if chains_of_map(H, ring) != f:
                return False, f"C(reconstruct(f)) != f over {ring}", {}
            if H != G.compose(F):
                return False, f"reconstruction of C(G)C(F) differs from G o F over {ring}", {}
        for F, G in pool.distinct:
            if chains_of_map(F, ring) == chains_of_map(G, ring):
                return False, f"distinct maps with equal chains over {ring}", {}
    stats = {"direct": len(pool.direct), "composed": len(pool.composed), "distinct_pairs": len(pool.distinct)}
    return True, "500 F = reconstruct(C(F)), 200 f = C(reconstruct(f)), 200 pairs separated; each over Z and F2", stats


def criterion_3(seed: int = 0) -> Outcome:
    return _timed(3, _check_round_trips, seed)


def planted_non_dichotomous_map(ring=ZZ) -> CoalgebraMap:
    """A point sent to the sum of two points: f(a) = p + q."""
    X = representable(0)
    Y = GlobularSet.build([["p", "q"]])
    src, tgt = globular_coalgebra(X, ring), globular_coalgebra(Y, ring)
    return CoalgebraMap(src, tgt, {"x": Chain({"p": 1, "q": 1}, ring)})


def _check_dichotomy(seed: int):
    pool = map_pool(seed)
    images = count = 0
    for ring in (ZZ, F2):
        for f in _pool_coalgebra_maps(pool, ring):
            count += 1
            for a in f.source.complex.cells():
                try:
                    b = classify_basis_image(f, a)
                except ContractError as exc:
                    return False, f"legitimate map rejected: {exc}", {}
                if b is not None and b not in f.target.complex:
                    return False, f"classified image {b} is not a target cell", {}
                images += 1
    for ring in (ZZ, F2):
        bad = planted_non_dichotomous_map(ring)
        try:
            classify_basis_image(bad, "x")
        except ContractError:
            pass
        else:
            return False, f"planted map x -> p + q accepted over {ring}", {}
    return True, f"{images} basis images over {count} maps; planted x -> p + q rejected", {"images": images}


def criterion_4(seed: int = 0) -> Outcome:
    return _timed(4, _check_dichotomy, seed)


# -- 5 ---------------------------------------------------------------------

def _check_atoms(seed: int):
    count = 0
    rng = random.Random(seed)
    globs = [representable(n) for n in range(5)] + [boundary_representable(n) for n in range(5)]
    globs += [random_globular_set(rng, max_dim=4, max_cells=6) for _ in range(20)]
    for X in globs:
        C = globular_coalgebra(X, ZZ)
        for b in C.complex.cells():
            rep = mu_validate(atom(C, b), C.complex)
            count += 1
            if not rep.passed:
                return False, f"globular atom of {b} in {X!r}: {rep.first}", {}
    for n in range(6):
        S, Z = steenrod_coalgebra(n), standard_simplex(n, ZZ)
        for b in Z.cells():
            for label, m in (("Steenrod", atom(S, b).lift(ZZ)), ("Steiner", steiner_atom(Z, b))):
                rep = mu_validate(m, Z)
                count += 1
                if not rep.passed:
                    return False, f"{label} atom of {b} in Delta^{n}: {rep.first}", {}
    return True, f"{count} atoms (globular over Z, lifted Steenrod and Steiner of Delta^n, n <= 5)", {"atoms": count}


def criterion_5(seed: int = 0) -> Outcome:
    return _timed(5, _check_atoms, seed)


# -- 6 ---------------------------------------------------------------------

def _check_compare_atoms():
    for n in range(5):
        rep = compare_atoms(n)
        if not rep.passed:
            return False, f"n = {n}: {rep.first}", {"n": n}
        if rep.stats["cells"] != 2 ** (n + 1) - 1:
            return False, f"n = {n}: compared {rep.stats['cells']} cells", {"n": n}
    return True, "all 2^(n+1)-1 cells for n <= 4, 0/1 coefficients", {"max_n": 4}


def criterion_6(seed: int = 0) -> Outcome:
    return _timed(6, _check_compare_atoms)


# -- 7 ---------------------------------------------------------------------

def recorded_oriental_counts() -> dict[int, int]:
    text = resources.files("globcoalg").joinpath("data/oriental_counts.json").read_text()
    return {int(k): v for k, v in json.loads(text)["counts"].items()}


def _check_orientals(seed: int):
    recorded = recorded_oriental_counts()
    counts = {}
    for n in range(4):
        O = oriental(n, DEFAULT_BOUNDS)
        counts[n] = len(O)
        simplices = [b for b in O.complex.cells()]
        ref = closure_oracle(steiner_atom_oracle(s) for s in simplices)
        mine = {as_oracle_element(m) for m in O}
        if mine != ref:
            return False, f"oriental({n}) differs from the closure oracle ({len(mine)} vs {len(ref)})", counts
        if n in recorded and recorded[n] != len(O):
            return False, f"oriental({n}) has {len(O)} elements, fixture records {recorded[n]}", counts
        if O.elements and max(m.max_coefficient() for m in O) > 1:
            return False, f"oriental({n}) has an entry with a coefficient outside {{0, 1}}", counts
    rep2 = check_omega_axioms(oriental(2))
    if not rep2.passed:
        return False, f"oriental(2): {rep2.first}", counts
    rep3 = check_omega_axioms(oriental(3), samples=10_000, seed=seed)
    if not rep3.passed:
        return False, f"oriental(3): {rep3.first}", counts
    if rep3.stats["triples"] < 10_000:
        return False, f"only {rep3.stats['triples']} triples sampled in oriental(3)", counts
    stats = {"counts": counts, "exhaustive_2": rep2.stats, "sampled_3": rep3.stats}
    shown = ", ".join(str(counts[n]) for n in range(4))
    return True, f"counts {shown} match oracle and fixture; axioms hold ({rep3.stats['triples']} sampled triples)", stats


def criterion_7(seed: int = 0) -> Outcome:
    return _timed(7, _check_orientals, seed)


# -- 8 ---------------------------------------------------------------------

def loop_complex() -> BasedComplex:
    """A point with a loop: the 1-cell has zero boundary, so its atom has ε = 0."""
    return BasedComplex(ZZ, {0: ["v"], 1: ["e"]}, {"e": Chain.zero(ZZ)}, {"v": 1})


def circle_complex() -> BasedComplex:
    """Two points joined by two opposite edges: a → b → a closes an order cycle."""
    bd = {"e": Chain({"b": 1, "a": -1}, ZZ), "f": Chain({"a": 1, "b": -1}, ZZ)}
    return BasedComplex(ZZ, {0: ["a", "b"], 1: ["e", "f"]}, bd, {"a": 1, "b": 1})


def _check_sadc():
    for n in range(6):
        rep = validate_sadc(standard_simplex(n, ZZ))
        if not rep.passed:
            return False, f"Delta^{n}: {rep.first}", {}
    for n in range(4):
        rep = validate_sadc(globular_coalgebra(representable(n), ZZ).complex)
        if not rep.passed:
            return False, f"G_{n}: {rep.first}", {}
    rep = validate_sadc(loop_complex())
    kinds = {(v.kind, v.cell) for v in rep.violations}
    if rep.passed or ("unitality", "e") not in kinds:
        return False, f"loop complex not rejected on cell e: {rep}", {}
    rep = validate_sadc(circle_complex())
    cyc = [v for v in rep.violations if v.kind == "order-cycle"]
    if rep.passed or not cyc or not {"e", "f"} <= set(cyc[0].cell):
        return False, f"circle complex not rejected with an e/f cycle: {rep}", {}
    if any(v.kind != "order-cycle" for v in rep.violations):
        return False, f"circle complex flagged for the wrong reason: {rep}", {}
    return True, f"Delta^n (n <= 5) and G_n pass; loop rejected at e, circle rejected with cycle {cyc[0].detail}", {}


def criterion_8(seed: int = 0) -> Outcome:
    return _timed(8, _check_sadc)


# -- 9 ---------------------------------------------------------------------

def _check_squares(seed: int):
    K = rp2()
    H = cohomology_f2(K)
    if H.ranks() != (1, 1, 1):
        return False, f"RP2 cohomology ranks {H.ranks()}", {}
    (gen,) = H.generators(1)
    sq = steenrod_square(1, gen, K)
    ref = square_of_degree_one_generator(RP2_MAXIMAL)
    if not ref["square_nonzero"] or not ref["squares_cohomologous"] or ref["h2"] != 1:
        return False, f"oracle disagrees with the expected RP2 picture: {ref}", {}
    if H.is_coboundary(sq):
        return False, f"Sq^1 of the generator is a coboundary: {sq!r}", {}
    witness = Cochain.of(2, ref["witness"])
    if not H.is_coboundary(sq + witness):
        return False, "Sq^1 of the generator is not the oracle's class", {}
    if sq.support != front_back_cup(gen.support, gen.support, 1, K.cells(2)):
        return False, "Sq^1 of the generator differs from the textbook cup square", {}
    rng = random.Random(seed)
    done = 0
    while done < 100:
        n = rng.randint(1, 4)
        L = random_subcomplex(rng, n)
        p = rng.randint(0, L.dimension)
        alpha = cohomology_f2(L).random_cocycle(rng, p)
        top = L.cells(2 * p)
        cup = cup_product(alpha, alpha, L)
        if steenrod_square(p, alpha, L) != cup:
            return False, f"Sq^|a| a != a cup a for {alpha!r}", {}
        if cup.support != front_back_cup(alpha.support, alpha.support, p, top):
            return False, f"a cup a differs from the front/back formula for {alpha!r}", {}
        for k in range(p + 1, p + 3):
            if steenrod_square(k, alpha, L):
                return False, f"Sq^{k} a != 0 for {alpha!r}", {}
        done += 1
    return True, f"RP2: Sq^1 of generator = nonzero class {sq!r}; 100 random cocycles pass", {"cocycles": done}


def criterion_9(seed: int = 0) -> Outcome:
    return _timed(9, _check_squares, seed)


# -- 10 --------------------------------------------------------------------

def _flipped_coproduct_sign(n: int, k: int) -> int:
    return -(-1 if ((n + 1) * k) % 2 else 1)


def _flipped_split(U):
    minus, plus = [], []
    for i, u in enumerate(U, start=1):
        (minus if (u - i) % 2 == 0 else plus).append(u)
    return tuple(minus), tuple(plus)


MUTATIONS = {
    "globular coproduct sign": (globular, "_coproduct_sign", _flipped_coproduct_sign),
    "cup-i split parity": (simplicial, "split_selector", _flipped_split),
    "atom sign": (coalgebra, "_atom_sign", lambda k: 1),
}


def _detectors(seed: int):
    return ((1, lambda: _check_globular_cosymmetric(seed)), (2, _check_steenrod_cosymmetric), (6, _check_compare_atoms))


def mutation_verdicts(seed: int = 0) -> dict[str, list[int]]:
    """For each mutation, the criteria among 1, 2, 6 that fail under it."""
    out = {}
    for label, (module, attr, replacement) in MUTATIONS.items():
        caught = []
        with mock.patch.object(module, attr, replacement):
            for number, check in _detectors(seed):
                if not check()[0]:
                    caught.append(number)
        out[label] = caught
    return out


def _check_mutations(seed: int):
    verdicts = mutation_verdicts(seed)
    parts = [f"{label} -> {nums or 'none'}" for label, nums in verdicts.items()]
    missed = [label for label, nums in verdicts.items() if not nums]
    if missed:
        return False, "undetected by 1, 2, 6: " + ", ".join(missed) + " (" + "; ".join(parts) + ")", verdicts
    return True, "; ".join(parts), verdicts


def criterion_10(seed: int = 0) -> Outcome:
    return _timed(10, _check_mutations, seed)


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


def run_all(seed: int = 0, only=None) -> list[Outcome]:
    return [CRITERIA[n](seed) for n in sorted(only or CRITERIA)]
