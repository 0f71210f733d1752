import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from globcoalg import (
    F2, ZZ, Chain, CoalgebraMap, ContractError, GlobularMap, GlobularSet, Tensor, atom, boundary_representable,
    chains, chains_of_map, globular_coalgebra, globular_coproduct, is_group_like, iter_globular_maps,
    random_globular_map, random_globular_set, reconstruct_map, representable, validate_coalgebra_map,
    validate_cosymmetric, validate_globular,
)
from globcoalg.mu import MuElement


def z(terms):
    return Chain(terms, ZZ)


@pytest.mark.parametrize("n, counts", [(0, [1]), (1, [2, 1]), (2, [2, 2, 1]), (3, [2, 2, 2, 1])])
def test_representable_cell_counts(n, counts):
    X = representable(n)
    assert [len(X.nondegenerate(k)) for k in range(n + 1)] == counts
    assert validate_globular(X).passed


@pytest.mark.parametrize("n", range(4))
def test_boundary_representable_is_the_sphere(n):
    X = boundary_representable(n)
    assert [len(X.nondegenerate(k)) for k in range(n + 1)] == [2] * (n + 1)
    assert validate_globular(X).passed


def test_iterated_faces_on_the_two_globe():
    X = representable(2)
    assert (X.target("x", 1), X.source("x", 1)) == ("t1", "s1")
    assert (X.target("x", 0), X.source("x", 0)) == ("t0", "s0")
    assert X.source("x", 2) == "x"


def test_broken_globularity_is_reported():
    X = representable(2)
    t = dict(X.t)
    t["t1"] = "s0"  # now t t x = s0 but t s x = t0
    bad = GlobularSet(X.cells, t, X.s, X.i, X.truncation)
    rep = validate_globular(bad)
    assert not rep.passed
    assert any(v.kind == "globularity" and v.cell == "x" for v in rep.violations)


def test_non_injective_identity_is_reported():
    X = GlobularSet.build([["a", "b"]], truncation=1)
    i = dict(X.i)
    i["b"] = i["a"]
    rep = validate_globular(GlobularSet(X.cells, X.t, X.s, i, X.truncation))
    assert not rep.passed


def test_chains_of_the_arrow():
    K = chains(representable(1))
    assert K.ranks() == (2, 1)
    assert K.boundary("x") == z({"t0": 1, "s0": -1})
    assert chains(representable(2)).ranks() == (2, 2, 1)
    P = chains(representable(0))
    assert P.ranks() == (1,) and P.augment(P.basis_chain("x")) == 1


def test_coproduct_cases():
    X = representable(2)
    assert globular_coproduct(X, "x", 2) == Tensor({("x", "x"): 1}, ZZ)
    assert globular_coproduct(X, "x", 1) == Tensor({("t1", "x"): 1, ("x", "s1"): -1}, ZZ)
    assert globular_coproduct(X, "x", 0) == Tensor({("t0", "x"): 1, ("x", "s0"): 1}, ZZ)
    assert not globular_coproduct(X, "x", 3)
    with pytest.raises(ContractError):
        globular_coproduct(representable(2, truncation=3), "i(x)", 0)


def test_atom_of_the_two_globe():
    C = globular_coalgebra(representable(2), ZZ)
    expect = MuElement([z({"s0": 1}), z({"s1": 1}), z({"x": 1})], [z({"t0": 1}), z({"t1": 1}), z({"x": 1})])
    assert atom(C, "x") == expect
    assert atom(C, "s0") == MuElement([z({"s0": 1})], [z({"s0": 1})])


@pytest.mark.parametrize("ring", [ZZ, F2])
@pytest.mark.parametrize("n", range(5))
def test_representables_are_cosymmetric_and_group_like(n, ring):
    for X in (representable(n), boundary_representable(n)):
        C = globular_coalgebra(X, ring)
        assert validate_cosymmetric(C).passed
        assert all(is_group_like(C, b) for b in C.complex.cells())


def test_flipped_sign_fails_at_a_lower_level_cell(monkeypatch):
    from globcoalg import globular

    monkeypatch.setattr(globular, "_coproduct_sign", lambda n, k: -1 if ((n + 1) * k) % 2 == 0 else 1)
    rep = validate_cosymmetric(globular_coalgebra(representable(2), ZZ))
    assert not rep.passed
    assert rep.first.k < 2


def test_identity_round_trip():
    X = representable(2)
    f = CoalgebraMap.identity(globular_coalgebra(X, ZZ))
    assert reconstruct_map(f, X, X) == GlobularMap.identity(X)


def test_collapsing_the_two_cell():
    X = representable(2)
    C = globular_coalgebra(X, ZZ)
    f = CoalgebraMap(C, C, {b: C.complex.basis_chain(b) for b in C.complex.cells() if b != "x"}
                     | {"s1": C.complex.basis_chain("t1"), "x": Chain.zero(ZZ)})
    assert validate_coalgebra_map(f).passed
    F = reconstruct_map(f, X, X)
    assert F("x") == "i(t1)"
    assert chains_of_map(F, ZZ) == f


def test_collapsing_the_arrow_kills_it():
    X, P = representable(1), representable(0, truncation=1)
    F = GlobularMap(X, P, {"s0": "x", "t0": "x", "x": "i(x)", "i(s0)": "i(x)", "i(t0)": "i(x)"})
    f = chains_of_map(F, ZZ)
    assert not f("x")
    assert reconstruct_map(f, X, P) == F


def test_reconstruct_rejects_non_chain_maps():
    X = representable(1)
    C = globular_coalgebra(X, ZZ)
    K = C.complex
    f = CoalgebraMap(C, C, {"s0": K.basis_chain("s0"), "t0": K.basis_chain("s0"), "x": K.basis_chain("x")})
    assert not validate_coalgebra_map(f).passed
    with pytest.raises(ContractError):
        reconstruct_map(f, X, X)


def test_json_round_trip():
    X = random_globular_set(random.Random(3))
    Y = GlobularSet.from_json(X.to_json())
    assert Y == X
    F = GlobularMap.identity(X)
    assert GlobularMap.from_json(F.to_json(), X, X) == F


def test_enumerates_all_maps_from_the_arrow():
    # arrows of ∂𝔾₂ plus identities on its two points
    X, Y = representable(1), boundary_representable(1)
    maps = list(iter_globular_maps(X, Y))
    assert len(maps) == 4
    assert all(F.validate().passed for F in maps)


seeds = st.integers(0, 2 ** 32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from([ZZ, F2]))
def test_random_sets_are_valid_cosymmetric_coalgebras(seed, ring):
    X = random_globular_set(random.Random(seed))
    assert validate_globular(X).passed
    assert validate_cosymmetric(globular_coalgebra(X, ring)).passed


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from([ZZ, F2]))
def test_chains_functor_round_trips(seed, ring):
    rng = random.Random(seed)
    X = random_globular_set(rng, max_dim=3, max_cells=3)
    Y = random_globular_set(rng, max_dim=3, max_cells=4, extra_truncation=X.truncation)
    F = random_globular_map(rng, X, Y)
    if F is None:
        return
    f = chains_of_map(F, ring)
    assert validate_coalgebra_map(f).passed
    assert reconstruct_map(f, X, Y) == F


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_chains_functor_preserves_composition(seed):
    rng = random.Random(seed)
    X = random_globular_set(rng, max_dim=2, max_cells=3)
    Y = random_globular_set(rng, max_dim=2, max_cells=3, extra_truncation=X.truncation)
    Z = random_globular_set(rng, max_dim=2, max_cells=3, extra_truncation=Y.truncation)
    F, G = random_globular_map(rng, X, Y), random_globular_map(rng, Y, Z)
    if F is None or G is None:
        return
    assert chains_of_map(G.compose(F), ZZ) == chains_of_map(G, ZZ).compose(chains_of_map(F, ZZ))
