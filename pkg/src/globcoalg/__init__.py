"""Exact chain-level algebra of globular sets, cup-i coalgebras and orientals."""
from .chains import (
    BasedComplex, Chain, Tensor, augment, boundary, cell_name, chain_from_json, chain_to_json,
    complex_from_json, complex_to_json, koszul_swap, parse_cell_name, positive_negative_parts, tensor,
    tensor_boundary,
)
from .coalgebra import (
    CoalgebraMap, CoalgebraStructure, atom, classify_basis_image, is_group_like, project,
    validate_coalgebra_map, validate_cosymmetric,
)
from .errors import (
    BoundExceeded, ComposabilityError, ContractError, GlobcoalgError, RingCapabilityError, StructuralError,
)
from .globular import (
    GlobularMap, GlobularSet, boundary_representable, chains, chains_of_map, globular_coalgebra,
    globular_coproduct, iter_globular_maps, random_globular_map, random_globular_set, reconstruct_map,
    representable, validate_globular,
)
from .mu import MuElement, compose, composable, mu_apply, mu_identity, mu_source, mu_target, mu_validate
from .omega import (
    DEFAULT_BOUNDS, Bounds, OmegaCat, check_omega_axioms, compare_atoms, generate_omega, induced_atom_map,
    oriental, sadc_order, steiner_atom, validate_sadc, xi,
)
from .report import Report, Violation
from .rings import F2, ZZ, Ring, ring_by_name
from .simplicial import (
    Cochain, CohomologyF2, SimplicialComplex, coboundary, cohomology_f2, cup_i, cup_product, is_cocycle,
    random_subcomplex, rp2, simplex, standard_simplex, steenrod_coalgebra, steenrod_square,
)

__version__ = "0.1.0"

__all__ = [
    "atom", "augment", "BasedComplex", "boundary", "boundary_representable", "BoundExceeded",
    "Bounds", "cell_name", "Chain", "chain_from_json", "chain_to_json", "chains", "chains_of_map",
    "check_omega_axioms", "classify_basis_image", "CoalgebraMap", "CoalgebraStructure",
    "coboundary", "Cochain", "cohomology_f2", "CohomologyF2", "compare_atoms", "complex_from_json",
    "complex_to_json", "ComposabilityError", "composable", "compose", "ContractError", "cup_i",
    "cup_product", "DEFAULT_BOUNDS", "F2", "generate_omega", "GlobcoalgError", "globular_coalgebra",
    "globular_coproduct", "GlobularMap", "GlobularSet", "induced_atom_map", "is_cocycle",
    "is_group_like", "iter_globular_maps", "koszul_swap", "mu_apply", "mu_identity", "mu_source",
    "mu_target", "mu_validate", "MuElement", "OmegaCat", "oriental", "parse_cell_name",
    "positive_negative_parts", "project", "random_globular_map", "random_globular_set",
    "random_subcomplex", "reconstruct_map", "Report", "representable", "Ring", "ring_by_name",
    "RingCapabilityError", "rp2", "sadc_order", "simplex", "SimplicialComplex", "standard_simplex",
    "steenrod_coalgebra", "steenrod_square", "steiner_atom", "StructuralError", "tensor", "Tensor",
    "tensor_boundary", "validate_coalgebra_map", "validate_cosymmetric", "validate_globular",
    "validate_sadc", "Violation", "xi", "ZZ",
]
