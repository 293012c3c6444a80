"""Walkthrough: sieve-valued truth of a proposition in a pure state.

In state (1, 0, 0, 0) the proposition "spin in [-3, -1]" (the projection
onto the fourth ray) is plainly false in the maximal context, yet it is not
false everywhere: coarser contexts that cannot separate the first and fourth
rays assign it partial truth.  The full answer is one sieve per context.

Run with:
    python demos/truth_values.py
"""

from __future__ import annotations

import numpy as np

from toposqt import (
    build_poset,
    check_global_element,
    context_from_basis,
    principal_sieve,
    proposition_projector,
    truth_value,
)


def main() -> None:
    e = np.eye(4, dtype=complex)
    sz = np.diag([2.0, 0.0, 0.0, -2.0]).astype(complex)
    poset = build_poset([context_from_basis(e)])

    psi = np.array([1, 0, 0, 0], dtype=complex)
    P = proposition_projector(sz, (-3.0, -1.0))

    element = truth_value(poset, P, psi)
    print("truth value of 'spin in [-3, -1]' in state (1,0,0,0):")
    for cid in poset.ids:
        sieve = element.at(cid)
        if sieve == principal_sieve(poset, cid):
            verdict = "totally true here"
        elif not sieve.members:
            verdict = "totally false here"
        else:
            verdict = "partially true"
        members = ", ".join(sorted(sieve.members)) or "-"
        print(f"  {cid}: {{{members}}}  ({verdict})")

    # ------------------------------------------------------------------
    # The sieves automatically satisfy the matching condition, so they
    # form one global truth value, not eleven unrelated verdicts.
    # ------------------------------------------------------------------
    print("\nassembles into a global element:", check_global_element(poset, element))


if __name__ == "__main__":
    main()
