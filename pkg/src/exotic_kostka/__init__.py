"""Exact Kostka polynomials for double partitions and Green-function tables.

The package computes, in exact rational arithmetic, the modified
Kostka polynomials attached to double partitions by the triangular
matrix equation P Lambda tP = Omega, derives Green-function and
intersection-cohomology stalk tables for the exotic nilpotent cone
and the symplectic symmetric space, verifies the orthogonality
relations as polynomial identities, and cross-validates everything
against brute-force finite-field orbit counts at small rank.
"""

__version__ = "0.1.0"

from .polynomials import Poly, RatFunc, PolyMatrix, poly_gcd, triple_product
from .partitions import (
    a_value,
    bipartition_count,
    bipartitions_of,
    dominance_le,
    exotic_le,
    kostka_charge,
    modified_kostka_charge,
    n_value,
    partitions_of,
    phi_count,
    transpose,
)
from .characters import (
    CharTable,
    character_table,
    conjugacy_classes,
    gl_order,
    group_orders,
    psi_poly,
    reflection_charpoly,
    sign_value,
    sp_order,
    torus_order,
)
from .fake_degrees import OmegaMatrix, fake_degree, omega_matrix, omega_via_torus
from .solver import KostkaSolution, evenness_check, modified_kostka, orbit_size_polys, solve
from .green import (
    GreenTable,
    ICTable,
    green_table,
    ic_table,
    springer_dimension_check,
    verify_orthogonality_exotic,
    verify_orthogonality_symmetric,
)
from .oracle import (
    OrbitCensus,
    enumerate_exotic_cone,
    full_space_orbit_count,
    normal_form,
    orbit_decompose,
    setup_symplectic,
    slice_check,
    split_green_count,
)

__all__ = [name for name in dir() if not name.startswith("_")]
