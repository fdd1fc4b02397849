"""Exact arithmetic in the local rings K[X]/(P^n)."""

from ._locring import (
    Field,
    LiftReport,
    LocringError,
    Morphism,
    Poly,
    QuotientElement,
    QuotientRing,
    RootSeries,
    certify_isomorphism,
    embed_residue_field,
    enumerate_irreducibles,
    exhaustive_morphism_check,
    find_residue_isomorphisms,
    gcd,
    hensel_root_series,
    induced_residue_morphism,
    is_irreducible,
    kernel_dimension,
    kernel_witness,
    lift_is_isomorphism,
    lift_morphism,
    morphism_matrix,
    residue_morphism_from_q,
    rings_isomorphic_separable,
    roots_bijection_check,
    structure_isomorphism_check,
    survey,
    to_digits,
)


def poly(field, text):
    """Parse `text` as a polynomial in x over `field` (a Field or a descriptor)."""
    if not isinstance(field, Field):
        field = Field(field)
    return Poly(field, text)


__all__ = [name for name in dir() if not name.startswith("_")]
