"""Outer and inner approximation of operators into a context.

A projection is approximated from above by the smallest projection of the
context dominating it (outer) and from below by the largest projection it
dominates (inner).  A self-adjoint operator is approximated in the spectral
order by daseinising its cumulative spectral family pointwise and rebuilding
the operator from the jumps; because the spectrum is finite the integral over
the family collapses to an exact finite sum over the eigenvalue grid, and the
daseinised family is constant between grid points, hence right-continuous
as it stands.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contexts import Context, ContextPoset
from .operators import (
    TAU,
    TAU_EIG,
    projector_leq,
    require_projector,
    require_self_adjoint,
    spectral_decomposition,
    spectral_family_at,
    zero,
)
from .presheaf import ClopenSubobject, subobject_of_projector


def outer_daseinise_projection(P, context: Context, tau: float = TAU) -> np.ndarray:
    """Smallest projection of the context dominating P.

    Equals the sum of the atoms that P touches (a P != 0); the identity when
    every atom is touched, zero only for P = 0.
    """
    P = require_projector(P, tau)
    out = zero(context.dim)
    for a in context.atoms:
        if float(np.linalg.norm(a @ P)) > tau:
            out += a
    return out


def inner_daseinise_projection(P, context: Context, tau: float = TAU) -> np.ndarray:
    """Largest projection of the context dominated by P: the sum of atoms <= P."""
    P = require_projector(P, tau)
    out = zero(context.dim)
    for a in context.atoms:
        if projector_leq(a, P, tau):
            out += a
    return out


@dataclass(frozen=True)
class DaseinisedProposition:
    """A projection together with its per-context approximations and their
    character sets (one clopen subobject of the spectral presheaf)."""

    source: np.ndarray
    per_context_projector: dict[str, np.ndarray]
    subobject: ClopenSubobject


def daseinise_proposition(poset: ContextPoset, P, tau: float = TAU) -> DaseinisedProposition:
    """Outer-daseinise a projection over every context of the poset."""
    P = require_projector(P, tau)
    projectors: dict[str, np.ndarray] = {}
    selection: dict[str, frozenset[int]] = {}
    for context in poset:
        approx = outer_daseinise_projection(P, context, tau)
        projectors[context.id] = approx
        selection[context.id] = subobject_of_projector(context, approx, tau)
    return DaseinisedProposition(P, projectors, ClopenSubobject(selection))


def _operator_from_family(grid, family, dim: int) -> np.ndarray:
    out = zero(dim)
    previous = zero(dim)
    for r, proj in zip(grid, family):
        out += r * (proj - previous)
        previous = proj
    return out


def outer_daseinise_selfadjoint(
    A, context: Context, tau: float = TAU, tau_eig: float = TAU_EIG
) -> np.ndarray:
    """Smallest member of the context spectrally above A.

    Inner-daseinises each cumulative spectral projection of A and rebuilds
    the operator from the jumps of the resulting family on A's eigenvalue
    grid.  The result lies in the context, is spectrally above A, and its
    spectrum is contained in A's.
    """
    A = require_self_adjoint(A, tau)
    decomp = spectral_decomposition(A, tau, tau_eig)
    family = [
        inner_daseinise_projection(spectral_family_at(decomp, r, tau_eig), context, tau)
        for r in decomp.eigenvalues
    ]
    return _operator_from_family(decomp.eigenvalues, family, context.dim)


def inner_daseinise_selfadjoint(
    A, context: Context, tau: float = TAU, tau_eig: float = TAU_EIG
) -> np.ndarray:
    """Largest member of the context spectrally below A.

    Outer-daseinises each cumulative spectral projection of A.  On a finite
    grid the resulting family is constant on the half-open intervals between
    consecutive eigenvalues, so it is already right-continuous and the meet
    over strictly larger parameters equals the pointwise value.
    """
    A = require_self_adjoint(A, tau)
    decomp = spectral_decomposition(A, tau, tau_eig)
    family = [
        outer_daseinise_projection(spectral_family_at(decomp, r, tau_eig), context, tau)
        for r in decomp.eigenvalues
    ]
    return _operator_from_family(decomp.eigenvalues, family, context.dim)
