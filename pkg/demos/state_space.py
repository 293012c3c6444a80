"""Walkthrough: the context poset of C^4 and its spectral presheaf.

Builds the poset generated by the standard basis, lists the Gelfand spectrum
of each context, and prints the restriction table from the maximal context
down to the subalgebra spanned by the first two rays.

Run with:
    python demos/state_space.py
"""

from __future__ import annotations

import numpy as np

from toposqt import (
    build_poset,
    context_from_basis,
    down_set,
    gelfand_spectrum,
    restrict_character,
)


def main() -> None:
    np.set_printoptions(precision=3, suppress=True)
    e = np.eye(4, dtype=complex)
    p = [np.outer(e[i], e[i]) for i in range(4)]

    # ------------------------------------------------------------------
    # 1) One orthonormal basis generates a maximal abelian algebra; its
    #    subalgebras spanned by subsets of the rays fill out the poset.
    # ------------------------------------------------------------------
    maximal = context_from_basis(e)
    poset = build_poset([maximal])
    print(f"contexts generated by the standard basis: {len(poset)}")
    for context in poset:
        ranks = [int(round(a.trace().real)) for a in context.atoms]
        print(f"  {context.id}  atoms with ranks {ranks}")

    # ------------------------------------------------------------------
    # 2) Each context carries a finite Gelfand spectrum: one character
    #    (multiplicative functional) per atom.
    # ------------------------------------------------------------------
    print("\nspectrum sizes:")
    for context in poset:
        print(f"  {context.id}: {len(gelfand_spectrum(context))} characters")

    # ------------------------------------------------------------------
    # 3) Restriction along an inclusion merges characters whose atoms fuse.
    #    From the maximal context to lin(p1, p2, p3+p4) the last two
    #    characters collapse onto the coarse atom p3+p4.
    # ------------------------------------------------------------------
    v12 = poset.find([p[0], p[1], p[2] + p[3]])
    print(f"\nrestriction from {maximal.id} to {v12.id}:")
    for i, ch in enumerate(gelfand_spectrum(maximal)):
        target = restrict_character(maximal, ch, v12)
        print(f"  character {i} (ray {i + 1})  ->  coarse atom index {target.atom_index}")

    # ------------------------------------------------------------------
    # 4) Down-sets are the stages a context can be coarsened through.
    # ------------------------------------------------------------------
    print(f"\ndown-set of {v12.id}:")
    for context in down_set(poset, v12):
        print(f"  {context.id}")


if __name__ == "__main__":
    main()
