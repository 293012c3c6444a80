"""Walkthrough: interval-valued readings of a physical quantity.

A quantity evaluated along a character yields a pair of functions on the
down-set: the inner approximation's value (lower end) and the outer
approximation's value (upper end).  At contexts containing the observable
the interval collapses to the sharp eigenvalue; coarsening a context can
only widen it.

Run with:
    python demos/physical_quantities.py
"""

from __future__ import annotations

import numpy as np

from toposqt import (
    build_poset,
    context_from_basis,
    gelfand_spectrum,
    quantity_value_arrow,
)


def main() -> None:
    e = np.eye(4, dtype=complex)
    sz = np.diag([2.0, 0.0, 0.0, -2.0]).astype(complex)
    maximal = context_from_basis(e)
    poset = build_poset([maximal])

    # ------------------------------------------------------------------
    # 1) Along an eigencharacter at the maximal context the spin is sharp.
    # ------------------------------------------------------------------
    print("intervals for the spin observable, maximal context:")
    for ch in gelfand_spectrum(maximal):
        pair = quantity_value_arrow(poset, sz, maximal, ch)
        lo, hi = pair.mu[maximal.id], pair.nu[maximal.id]
        print(f"  character {ch.atom_index}: [{lo:+.0f}, {hi:+.0f}]")

    # ------------------------------------------------------------------
    # 2) At a two-atom context the complement character cannot resolve
    #    the three fused rays: it reports an honest interval.
    # ------------------------------------------------------------------
    p1 = np.outer(e[0], e[0])
    v1 = poset.find([p1, np.eye(4) - p1])
    print(f"\ntwo-atom context {v1.id}:")
    for ch in gelfand_spectrum(v1):
        pair = quantity_value_arrow(poset, sz, v1, ch)
        lo, hi = pair.mu[v1.id], pair.nu[v1.id]
        print(f"  character {ch.atom_index}: [{lo:+.0f}, {hi:+.0f}]")

    # ------------------------------------------------------------------
    # 3) Following one character of the maximal context down the poset:
    #    endpoints are monotone, so intervals only widen.
    # ------------------------------------------------------------------
    lam4 = gelfand_spectrum(maximal)[3]
    pair = quantity_value_arrow(poset, sz, maximal, lam4)
    print(f"\ncharacter {lam4.atom_index} of the maximal context, down the poset:")
    for cid in poset.down_ids(maximal.id):
        print(f"  {cid}: [{pair.mu[cid]:+.0f}, {pair.nu[cid]:+.0f}]")


if __name__ == "__main__":
    main()
