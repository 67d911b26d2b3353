from abelzeta.utils.numbers import mobius

from .fields import (
    Embedding,
    FieldCtx,
    FieldElement,
    canonical_embedding,
    extension_ctx,
    field_ctx,
    rth_power_residue_degree,
    trace_to_prime,
)
from .orbits import frobenius_orbits, minimal_polynomial
from .polynomials import (
    Poly,
    count_monic_irreducibles,
    distinct_degree_parts,
    enumerate_monic_irreducibles,
    find_roots,
    format_poly,
    irreducible_factors,
    is_irreducible,
    is_squarefree,
    parse_poly,
    poly_gcd,
)

__all__ = [
    Embedding,
    FieldCtx,
    FieldElement,
    Poly,
    canonical_embedding,
    count_monic_irreducibles,
    enumerate_monic_irreducibles,
    extension_ctx,
    field_ctx,
    find_roots,
    format_poly,
    frobenius_orbits,
    is_irreducible,
    is_squarefree,
    minimal_polynomial,
    mobius,
    parse_poly,
    poly_gcd,
    rth_power_residue_degree,
    trace_to_prime,
]
