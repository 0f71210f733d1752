import pytest

from globcoalg import (
    F2, ZZ, Chain, CoalgebraMap, CoalgebraStructure, ComposabilityError, ContractError, MuElement, Tensor, atom,
    classify_basis_image, compose, globular_coalgebra, is_group_like, mu_source, mu_target, mu_validate, project,
    representable, standard_simplex, steenrod_coalgebra, steiner_atom, validate_coalgebra_map,
)
from globcoalg.globular import GlobularMap, chains_of_map


def z(d):
    return Chain(d, ZZ)


D2 = standard_simplex(2)
E01 = steiner_atom(D2, (0, 1))
E12 = steiner_atom(D2, (1, 2))
T012 = steiner_atom(D2, (0, 1, 2))


def test_projections_of_a_globular_coproduct():
    X = representable(2)
    K = globular_coalgebra(X, ZZ).complex
    t = Tensor({("t0", "x"): 1, ("x", "s0"): 1}, ZZ)
    assert project("x", "+", t, K) == z({"t0": 1})
    assert project("x", "-", t, K) == z({"s0": 1})
    assert not project("x", "+", Tensor.zero(ZZ), K)


def test_degree_zero_atom():
    C = steenrod_coalgebra(2)
    a = atom(C, (1,))
    assert a.top == 0 and a.entry(0, "-") == a.entry(0, "+") == Chain({(1,): 1}, F2)


def test_group_like_cells():
    C = globular_coalgebra(representable(3), ZZ)
    assert all(is_group_like(C, b) for b in C.complex.cells())
    S = steenrod_coalgebra(3)
    assert all(is_group_like(S, b) for b in S.complex.cells())


def test_planted_non_group_like_cell():
    K = D2

    def delta(b, k):
        if b == (0, 1) and k == 1:
            return Tensor({((0, 1), (0, 1)): 1, ((0, 2), (0, 2)): 1}, ZZ)
        n = K.degree(b)
        return Tensor({(b, b): 1}, ZZ) if k == n else Tensor.zero(ZZ)

    C = CoalgebraStructure(K, delta)
    assert not is_group_like(C, (0, 1))
    assert is_group_like(C, (1, 2))
    with pytest.raises(ContractError):
        atom(C, (0, 1))


def test_identity_map_classifies_every_cell_to_itself():
    C = globular_coalgebra(representable(2), ZZ)
    f = CoalgebraMap.identity(C)
    assert validate_coalgebra_map(f).passed
    assert all(classify_basis_image(f, b) == b for b in C.complex.cells())


def test_collapsing_map_classifies_to_zero():
    X, P = representable(1), representable(0, truncation=1)
    F = GlobularMap(X, P, {"s0": "x", "t0": "x", "x": "i(x)", "i(s0)": "i(x)", "i(t0)": "i(x)"})
    f = chains_of_map(F, ZZ)
    assert classify_basis_image(f, "x") is None
    assert classify_basis_image(f, "s0") == "x"


def test_sum_of_two_cells_is_rejected():
    from globcoalg.acceptance import planted_non_dichotomous_map

    for ring in (ZZ, F2):
        f = planted_non_dichotomous_map(ring)
        with pytest.raises(ContractError, match="not a coalgebra map between group-like coalgebras"):
            classify_basis_image(f, "x")
        assert not validate_coalgebra_map(f).passed


def test_chain_map_defect_has_a_witness():
    C = globular_coalgebra(representable(1), ZZ)
    K = C.complex
    f = CoalgebraMap(C, C, {"s0": K.basis_chain("t0"), "t0": K.basis_chain("t0"), "x": K.basis_chain("x")})
    rep = validate_coalgebra_map(f)
    assert not rep.passed and rep.first.cell == "x"


def test_steiner_atoms_of_simplices():
    assert E01 == MuElement([z({(0,): 1}), z({(0, 1): 1})], [z({(1,): 1}), z({(0, 1): 1})])
    assert T012.entry(0, "-") == z({(0,): 1}) and T012.entry(0, "+") == z({(2,): 1})
    assert T012.entry(1, "-") == z({(0, 2): 1}) and T012.entry(1, "+") == z({(0, 1): 1, (1, 2): 1})
    assert mu_validate(T012, D2).passed


def test_sources_and_targets():
    assert mu_source(E01, 0) == MuElement([z({(0,): 1})], [z({(0,): 1})])
    path = z({(0, 1): 1, (1, 2): 1})
    assert mu_target(T012, 1) == MuElement([z({(0,): 1}), path], [z({(2,): 1}), path])
    assert mu_source(T012, 1) == MuElement([z({(0,): 1}), z({(0, 2): 1})], [z({(2,): 1}), z({(0, 2): 1})])
    assert mu_source(T012, 2) == T012


def test_composing_two_edges():
    got = compose(E12, E01, 0)
    path = z({(0, 1): 1, (1, 2): 1})
    assert got == MuElement([z({(0,): 1}), path], [z({(2,): 1}), path])
    assert mu_validate(got, D2).passed


def test_mismatched_composition_names_the_entry():
    with pytest.raises(ComposabilityError) as info:
        compose(E01, E12, 0)
    assert info.value.witness == 0


def test_planted_boundary_mismatch():
    bad = MuElement([z({(0,): 1}), z({(0, 2): 1})], [z({(1,): 1}), z({(0, 1): 1})])
    rep = mu_validate(bad, D2)
    assert not rep.passed and rep.first.k == 0


@pytest.mark.parametrize("n", range(5))
def test_globularity_of_sources_and_targets(n):
    K = standard_simplex(n)
    for b in K.cells():
        m = steiner_atom(K, b)
        for k in range(m.top + 1):
            for j in range(k):
                assert mu_source(mu_source(m, k), j) == mu_source(mu_target(m, k), j)
                assert mu_target(mu_target(m, k), j) == mu_target(mu_source(m, k), j)
            assert mu_validate(mu_source(m, k), K).passed
