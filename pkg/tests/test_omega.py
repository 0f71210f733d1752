import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from globcoalg import (
    ZZ, BoundExceeded, Bounds, Chain, ContractError, GlobularMap, MuElement, atom, check_omega_axioms,
    chains_of_map, compare_atoms, compose, generate_omega, globular_coalgebra, induced_atom_map,
    iter_globular_maps, mu_apply, mu_source, mu_target, mu_validate, oriental, representable, standard_simplex,
    steenrod_coalgebra, steiner_atom, validate_sadc, xi,
)
from globcoalg.acceptance import circle_complex, loop_complex, recorded_oriental_counts
from globcoalg.oracles import as_oracle_element, closure_oracle, steiner_atom_oracle


@pytest.mark.parametrize("n", range(4))
def test_orientals_match_the_closure_oracle(n):
    O = oriental(n)
    ref = closure_oracle(steiner_atom_oracle(b) for b in O.complex.cells())
    assert {as_oracle_element(m) for m in O} == ref
    assert len(O) == recorded_oriental_counts()[n]


def test_recorded_counts():
    assert [recorded_oriental_counts()[n] for n in range(3)] == [1, 3, 8]


@pytest.mark.parametrize("n", range(4))
def test_oriental_entries_are_zero_one(n):
    assert all(m.max_coefficient() <= 1 for m in oriental(n))


def test_triangle_closure_adds_the_composite_arrow():
    O = oriental(2)
    atoms = set(O.generators)
    assert len(atoms) == 7
    (extra,) = [m for m in O if m not in atoms]
    assert extra == compose(steiner_atom(O.complex, (1, 2)), steiner_atom(O.complex, (0, 1)), 0)


def test_bounds_are_enforced():
    with pytest.raises(BoundExceeded, match="max_elements"):
        oriental(3, Bounds(max_elements=10))
    assert Bounds.parse("5,7") == Bounds(5, 7)


@pytest.mark.parametrize("n", range(4))
def test_orientals_satisfy_the_axioms_exhaustively(n):
    rep = check_omega_axioms(oriental(n))
    assert rep.passed, str(rep)


def test_interchange_is_exercised():
    assert check_omega_axioms(oriental(3)).stats["interchange"] > 0
    sampled = check_omega_axioms(oriental(3), samples=500, seed=7)
    assert sampled.passed and sampled.stats["triples"] == 500


O3 = oriental(3)
ELEMENTS = list(O3)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ELEMENTS), st.sampled_from(ELEMENTS), st.integers(0, 2))
def test_composition_stays_in_mu(b, a, m):
    if mu_source(b, m) != mu_target(a, m):
        return
    c = compose(b, a, m)
    assert mu_validate(c, O3.complex).passed
    assert c in O3


@pytest.mark.parametrize("n", range(5))
def test_steenrod_atoms_equal_steiner_atoms(n):
    rep = compare_atoms(n)
    assert rep.passed, str(rep)
    assert rep.stats["cells"] == 2 ** (n + 1) - 1


@pytest.mark.parametrize("n", range(6))
def test_simplices_are_strong_directed_complexes(n):
    assert validate_sadc(standard_simplex(n)).passed


@pytest.mark.parametrize("n", range(4))
def test_globes_are_strong_directed_complexes(n):
    assert validate_sadc(globular_coalgebra(representable(n), ZZ).complex).passed


def test_planted_sadc_defects():
    rep = validate_sadc(loop_complex())
    assert [(v.kind, v.cell) for v in rep.violations] == [("unitality", "e"), ("unitality", "e")]
    rep = validate_sadc(circle_complex())
    assert [v.kind for v in rep.violations] == ["order-cycle"]
    assert set(rep.first.cell) == {"a", "b", "e", "f"}


@pytest.mark.parametrize("n", range(4))
def test_xi_of_a_globe_is_its_atoms(n):
    O = xi(globular_coalgebra(representable(n), ZZ))
    assert len(O) == 2 * n + 1
    assert set(O) == set(O.generators)


def test_xi_of_the_triangle_is_the_oriental():
    S = steenrod_coalgebra(2)
    O = xi(S, lift=standard_simplex(2, ZZ))
    assert O.element_set() == oriental(2).element_set()


def test_induced_atom_maps_send_generators_to_generators_or_identities():
    rng = random.Random(5)
    X, Y = representable(2), representable(2, truncation=3)
    for F in list(iter_globular_maps(X, Y, rng))[:10]:
        f = chains_of_map(F, ZZ)
        target_cells = xi(f.target).element_set()
        for a, (label, image) in induced_atom_map(f).items():
            if label is not None:
                assert image == atom(f.target, label)
            else:
                assert image in target_cells and image.top < X.dim[a]
            source_atom = atom(f.source, a)
            for k in range(source_atom.top):
                assert mu_source(image, k) == mu_apply(f, mu_source(source_atom, k))
                assert mu_target(image, k) == mu_apply(f, mu_target(source_atom, k))


def test_omega_json_is_deterministic():
    a = json.dumps(oriental(2).to_json())
    b = json.dumps(oriental(2).to_json())
    assert a == b
    assert json.loads(a)["count"] == 8


def test_generate_rejects_non_elements():
    bad = MuElement([Chain({(0,): 1}, ZZ), Chain({(0, 1): 1}, ZZ)], [Chain({(0,): 1}, ZZ), Chain({(0, 1): 1}, ZZ)])
    with pytest.raises(ContractError):
        generate_omega([bad], standard_simplex(1))


def test_identity_map_induces_identity_on_atoms():
    X = representable(2)
    f = chains_of_map(GlobularMap.identity(X), ZZ)
    for a, (label, image) in induced_atom_map(f).items():
        assert label == a
        assert image == atom(f.source, a)
