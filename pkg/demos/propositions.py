"""Walkthrough: coarse-graining a proposition into every context.

The spin observable diag(2, 0, 0, -2) can only take the value 2 inside
[1.3, 2.3], so the proposition "spin in [1.3, 2.3]" is the projection onto
the first standard ray.  Outer daseinisation approximates that projection
from above in each context of the poset; the result depends on how much of
the ray the context can resolve.

Run with:
    python demos/propositions.py
"""

from __future__ import annotations

import numpy as np

from toposqt import (
    build_poset,
    context_from_basis,
    daseinise_proposition,
    is_clopen_subobject,
    outer_daseinise_projection,
    proposition_projector,
)


def main() -> None:
    np.set_printoptions(precision=3, suppress=True)
    e = np.eye(4, dtype=complex)
    sz = np.diag([2.0, 0.0, 0.0, -2.0]).astype(complex)

    # ------------------------------------------------------------------
    # 1) From observable and interval to a projection.
    # ------------------------------------------------------------------
    P = proposition_projector(sz, (1.3, 2.3))
    print("projection of the proposition 'spin in [1.3, 2.3]':")
    print(P.real)

    # ------------------------------------------------------------------
    # 2) Outer daseinisation across representative contexts.
    # ------------------------------------------------------------------
    maximal = context_from_basis(e)
    poset = build_poset([maximal])
    p = [np.outer(e[i], e[i]) for i in range(4)]

    cases = {
        "context containing the ray": poset.find([p[0], p[1], p[2] + p[3]]),
        "context separating rays 2,3": poset.find([p[1], p[2], p[0] + p[3]]),
        "two-atom context on ray 2": poset.find([p[1], np.eye(4) - p[1]]),
    }
    for description, context in cases.items():
        approx = outer_daseinise_projection(P, context)
        print(f"\n{description} ({context.id}):")
        print(approx.real)

    # a context that only sees the plane spanned by rays 1 and 2
    up = (e[0] + e[1]) / np.sqrt(2)
    um = (e[0] - e[1]) / np.sqrt(2)
    slanted = context_from_basis([up, um, e[2], e[3]])
    print("\ncontext with a dominating plane but not the ray itself:")
    print(outer_daseinise_projection(P, slanted).real)

    # a context none of whose atoms avoids the ray: only the identity is left
    h = np.array(
        [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], dtype=float
    ).T / 2.0
    unrelated = context_from_basis([h[:, i] for i in range(4)])
    print("\ncontext unrelated to the ray (coarsest possible answer):")
    print(outer_daseinise_projection(P, unrelated).real)

    # ------------------------------------------------------------------
    # 3) All the local approximations together form one clopen subobject
    #    of the spectral presheaf: the global face of the proposition.
    # ------------------------------------------------------------------
    result = daseinise_proposition(poset, P)
    print("\ncharacter sets of the daseinised proposition:")
    for cid in poset.ids:
        print(f"  {cid}: atoms {sorted(result.subobject.at(cid))}")
    print("functorial (clopen subobject):", is_clopen_subobject(poset, result.subobject))


if __name__ == "__main__":
    main()
