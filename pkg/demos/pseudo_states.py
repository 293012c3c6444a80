"""Walkthrough: pseudo-states, the contextual stand-in for a point.

The spectral presheaf has no global points, so a pure state enters the
picture as the smallest clopen subobject certain in that state: the outer
daseinisation of its rank-one projector, context by context.

Run with:
    python demos/pseudo_states.py
"""

from __future__ import annotations

import numpy as np

from toposqt import build_poset, context_from_basis, pseudo_state


def main() -> None:
    np.set_printoptions(precision=3, suppress=True)
    e = np.eye(4, dtype=complex)
    poset = build_poset([context_from_basis(e)])

    psi = np.array([0, 1, 0, 0], dtype=complex)
    w = pseudo_state(poset, psi)

    # ------------------------------------------------------------------
    # 1) Per context: the smallest projection certain in the state.
    # ------------------------------------------------------------------
    print("pseudo-state of (0, 1, 0, 0):")
    for cid in poset.ids:
        projector = w.per_context_projector[cid]
        rank = int(round(projector.trace().real))
        certain = float(np.real(psi.conj() @ (projector @ psi)))
        print(f"  {cid}: rank {rank}, diagonal {np.diag(projector.real)}, "
              f"expectation {certain:.0f}")

    # ------------------------------------------------------------------
    # 2) The finer the context, the sharper the pseudo-state; a context
    #    that contains the ray pins it down exactly (rank one).
    # ------------------------------------------------------------------
    ranks = sorted(
        int(round(w.per_context_projector[cid].trace().real)) for cid in poset.ids
    )
    print("\nranks across contexts:", ranks)


if __name__ == "__main__":
    main()
