"""The spectral presheaf: Gelfand spectra, restriction maps, clopen subobjects.

Per context the Gelfand spectrum is finite and discrete: each multiplicative
unital functional sends exactly one atom to 1, so a character is stored as an
atom index.  Evaluation is coefficient lookup, restriction follows atom
domination, and a clopen subobject is a per-context subset of atom indices
that is compatible with every restriction map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .contexts import Context, ContextPoset, is_subcontext
from .errors import IncompleteAssignment, NotASubcontext, NotInAlgebra, UnknownCharacter
from .operators import TAU, as_operator, projector_leq, zero


@dataclass(frozen=True)
class Character:
    """A point of a context's Gelfand spectrum: the atom sent to 1."""

    context_id: str
    atom_index: int


def gelfand_spectrum(context: Context) -> tuple[Character, ...]:
    """One character per atom, in canonical atom order."""
    return tuple(Character(context.id, i) for i in range(context.n_atoms))


def coefficients_in(context: Context, A, tau: float = TAU) -> np.ndarray:
    """Atom coefficients of an algebra member, c_a = tr(A a) / tr(a).

    Raises ``NotInAlgebra`` when the residual of the atom expansion exceeds
    ``tau``.
    """
    A = as_operator(A)
    coeffs = np.array(
        [np.trace(A @ a) / np.trace(a) for a in context.atoms], dtype=complex
    )
    residual = A - sum(c * a for c, a in zip(coeffs, context.atoms))
    if float(np.linalg.norm(residual)) > tau:
        raise NotInAlgebra("operator is not a combination of the context's atoms")
    return coeffs


def evaluate_character(context: Context, character: Character, A, tau: float = TAU) -> float:
    """Gelfand transform: the value of the character on an algebra member."""
    _require_member(context, character)
    coeffs = coefficients_in(context, A, tau)
    return float(coeffs[character.atom_index].real)


def restrict_character(
    context: Context, character: Character, sub: Context, tau: float = TAU
) -> Character:
    """Restriction along an inclusion: the unique coarse atom dominating ours."""
    _require_member(context, character)
    if sub.id == context.id:
        return Character(sub.id, character.atom_index)
    if not is_subcontext(sub, context, tau):
        raise NotASubcontext(f"{sub.id!r} is not a subcontext of {context.id!r}")
    atom = context.atoms[character.atom_index]
    for j, coarse in enumerate(sub.atoms):
        if projector_leq(atom, coarse, tau):
            return Character(sub.id, j)
    raise NotASubcontext("no coarse atom dominates the character's atom")


def _require_member(context: Context, character: Character) -> None:
    if character.context_id != context.id:
        raise UnknownCharacter(
            f"character belongs to {character.context_id!r}, not {context.id!r}"
        )
    if not 0 <= character.atom_index < context.n_atoms:
        raise UnknownCharacter(f"atom index {character.atom_index} out of range")


class ClopenSubobject:
    """Per-context subsets of the spectrum (all subsets are clopen here).

    ``selection`` maps context id to the chosen atom indices.  Functoriality
    (restrictions stay inside the selection) is checked by
    :func:`is_clopen_subobject`, not enforced on construction.
    """

    __slots__ = ("selection",)

    def __init__(self, selection: Mapping[str, frozenset[int]]) -> None:
        self.selection: dict[str, frozenset[int]] = {
            cid: frozenset(indices) for cid, indices in selection.items()
        }

    def at(self, context_id: str) -> frozenset[int]:
        return self.selection[context_id]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClopenSubobject):
            return NotImplemented
        return self.selection == other.selection

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        parts = ", ".join(f"{cid}:{sorted(v)}" for cid, v in sorted(self.selection.items()))
        return f"ClopenSubobject({parts})"


def full_subobject(poset: ContextPoset) -> ClopenSubobject:
    """The maximal subobject: the whole spectrum at every context."""
    return ClopenSubobject(
        {c.id: frozenset(range(c.n_atoms)) for c in poset}
    )


def empty_subobject(poset: ContextPoset) -> ClopenSubobject:
    """The minimal subobject: empty at every context."""
    return ClopenSubobject({c.id: frozenset() for c in poset})


def is_clopen_subobject(poset: ContextPoset, subobject: ClopenSubobject) -> bool:
    """True iff every restriction maps the selection into the selection below."""
    keys = set(subobject.selection.keys())
    if keys != set(poset.ids):
        raise IncompleteAssignment("subobject must assign a subset to every poset context")
    for sup in poset:
        chosen = subobject.at(sup.id)
        for sub_id in poset.down_ids(sup.id):
            if sub_id == sup.id:
                continue
            table = poset.restriction_indices(sup.id, sub_id)
            target = subobject.at(sub_id)
            if any(table[i] not in target for i in chosen):
                return False
    return True


def subobject_leq(poset: ContextPoset, s1: ClopenSubobject, s2: ClopenSubobject) -> bool:
    """Contextwise inclusion of subobjects."""
    return all(s1.at(cid) <= s2.at(cid) for cid in poset.ids)


def subobject_of_projector(context: Context, projector, tau: float = TAU) -> frozenset[int]:
    """Atom indices where a projection member of the context evaluates to 1."""
    P = as_operator(projector)
    if float(np.linalg.norm(P - zero(context.dim))) <= tau:
        return frozenset()
    return frozenset(
        i for i, a in enumerate(context.atoms) if projector_leq(a, P, tau)
    )
