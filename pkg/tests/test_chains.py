import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from globcoalg import (
    F2, ZZ, BasedComplex, Chain, RingCapabilityError, StructuralError, Tensor, cell_name, chain_from_json,
    chain_to_json, complex_from_json, complex_to_json, parse_cell_name, positive_negative_parts,
    standard_simplex, tensor,
)
from globcoalg.oracles import simplex_boundary

D2 = standard_simplex(2)


def test_boundary_of_triangle_matches_face_oracle():
    got = D2.boundary((0, 1, 2))
    assert got == Chain(simplex_boundary((0, 1, 2)), ZZ)
    assert got == Chain({(1, 2): 1, (0, 2): -1, (0, 1): 1}, ZZ)


@pytest.mark.parametrize("n", range(6))
def test_simplex_boundaries_match_face_oracle(n):
    K = standard_simplex(n)
    for x in K.cells():
        assert K.boundary(x) == Chain(simplex_boundary(x), ZZ)


def test_boundary_of_zero_and_unknown_cell():
    assert D2.boundary(Chain.zero(ZZ)) == Chain.zero(ZZ)
    with pytest.raises(StructuralError):
        D2.boundary((0, 3))


def test_canonical_form_is_syntactic():
    a = Chain({(0, 1): 1, (1, 2): 0}, ZZ)
    b = Chain({(0, 1): 2}, ZZ) - Chain({(0, 1): 1}, ZZ)
    assert a == b and hash(a) == hash(b)
    assert Chain({(0,): 3}, F2) == Chain({(0,): 1}, F2)
    assert Chain({(0,): 2}, F2) == Chain.zero(F2)
    assert Chain({(0,): 1}, F2) != Chain({(0,): 1}, ZZ)


def test_repr_orders_cells():
    assert repr(D2.boundary((0, 1, 2))) == "[0,1] - [0,2] + [1,2]"


def test_tensor_boundary_leibniz_sign():
    D1 = standard_simplex(1)
    e = Chain({(0, 1): 1}, ZZ)
    de = Chain({(1,): 1, (0,): -1}, ZZ)
    got = D1.tensor_boundary(tensor(e, e))
    assert got == tensor(de, e) - tensor(e, de)


def test_tensor_boundary_degree_zero_left_factor():
    D1 = standard_simplex(1)
    v, e = Chain({(0,): 1}, ZZ), Chain({(0, 1): 1}, ZZ)
    assert D1.tensor_boundary(tensor(v, e)) == tensor(v, D1.boundary(e))


def test_koszul_swap_signs():
    t = Tensor({((0, 1), (1, 2)): 1}, ZZ)
    assert D2.koszul_swap(t) == Tensor({((1, 2), (0, 1)): -1}, ZZ)
    t = Tensor({((0,), (0, 1, 2)): 1}, ZZ)
    assert D2.koszul_swap(t) == Tensor({((0, 1, 2), (0,)): 1}, ZZ)


def test_positive_negative_parts():
    plus, minus = positive_negative_parts(D2.boundary((0, 1, 2)))
    assert plus == Chain({(1, 2): 1, (0, 1): 1}, ZZ)
    assert minus == Chain({(0, 2): 1}, ZZ)
    assert positive_negative_parts(Chain.zero(ZZ)) == (Chain.zero(ZZ), Chain.zero(ZZ))
    three = Chain({"a": 3}, ZZ)
    assert positive_negative_parts(three) == (three, Chain.zero(ZZ))
    with pytest.raises(RingCapabilityError):
        positive_negative_parts(Chain({"a": 1}, F2))


def test_augmentation():
    D1 = standard_simplex(1)
    assert D1.augment(Chain({(0,): 1, (1,): 1}, ZZ)) == 2
    assert D1.augment(Chain({(0, 1): 1}, ZZ)) == 0
    assert D1.augment(Chain.zero(ZZ)) == 0


def test_complex_validation_rejects_bad_data():
    with pytest.raises(StructuralError):
        BasedComplex(ZZ, {0: ["a"], 1: ["a"]}, {}, {"a": 1})
    with pytest.raises(StructuralError):
        BasedComplex(ZZ, {0: ["a"], 1: ["e"]}, {"e": Chain({"e": 1}, ZZ)}, {"a": 1})


def test_validate_reports_nonzero_square():
    bad = BasedComplex(
        ZZ, {0: ["a", "b"], 1: ["e"], 2: ["f"]},
        {"e": Chain({"b": 1, "a": -1}, ZZ), "f": Chain({"e": 1}, ZZ)}, {"a": 1, "b": 1},
    )
    rep = bad.validate()
    assert not rep.passed
    assert rep.first.cell == "f"


def test_json_round_trips():
    c = D2.boundary((0, 1, 2))
    assert chain_from_json(chain_to_json(c, D2), ZZ, D2) == c
    back = complex_from_json(complex_to_json(D2))
    assert back.basis == D2.basis and back.boundary_table == D2.boundary_table
    assert back.augmentation_table == D2.augmentation_table
    for x in D2.cells():
        assert parse_cell_name(cell_name(x)) == x


cells = st.sampled_from(standard_simplex(3).cells())
chains_zz = st.dictionaries(cells, st.integers(-5, 5), max_size=6).map(lambda d: Chain(d, ZZ))


@settings(max_examples=200, deadline=None)
@given(chains_zz, chains_zz)
def test_boundary_squares_to_zero_on_tensors(a, b):
    K = standard_simplex(3)
    t = tensor(a, b)
    assert not K.tensor_boundary(K.tensor_boundary(t))
    assert K.koszul_swap(K.koszul_swap(t)) == t


@settings(max_examples=200, deadline=None)
@given(chains_zz, chains_zz)
def test_boundary_is_linear_and_swap_commutes_with_boundary(a, b):
    K = standard_simplex(3)
    assert K.boundary(a + b) == K.boundary(a) + K.boundary(b)
    assert not K.boundary(K.boundary(a))
    t = tensor(a, b)
    assert K.tensor_boundary(K.koszul_swap(t)) == K.koszul_swap(K.tensor_boundary(t))
