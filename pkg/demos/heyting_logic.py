"""Walkthrough: the intuitionistic logic carried by sieves and subobjects.

Sieves on a context form a Heyting algebra: conjunction and disjunction are
set operations, implication quantifies over subcontexts, and negation can
fail the law of excluded middle whenever the context has two incomparable
coarsenings.

Run with:
    python demos/heyting_logic.py
"""

from __future__ import annotations

import numpy as np

from toposqt import (
    Sieve,
    build_poset,
    context_from_basis,
    daseinise_proposition,
    enumerate_sieves,
    principal_sieve,
    sieve_connective,
    subobject_connective,
)


def main() -> None:
    e = np.eye(4, dtype=complex)
    p = [np.outer(e[i], e[i]) for i in range(4)]
    poset = build_poset([context_from_basis(e)])

    v12 = poset.find([p[0], p[1], p[2] + p[3]])
    v1 = poset.find([p[0], np.eye(4) - p[0]])
    v2 = poset.find([p[1], np.eye(4) - p[1]])

    # ------------------------------------------------------------------
    # 1) All sieves on a three-element down-set.
    # ------------------------------------------------------------------
    sieves = enumerate_sieves(poset, v12)
    print(f"sieves on {v12.id}: {len(sieves)}")
    for s in sieves:
        print(f"  {{{', '.join(sorted(s.members)) or '-'}}}")

    # ------------------------------------------------------------------
    # 2) Excluded middle fails: the sieve picking out one minimal
    #    coarsening has a negation picking the other; their join misses
    #    the base context itself.
    # ------------------------------------------------------------------
    s1 = Sieve(v12.id, frozenset({v1.id}))
    negation = sieve_connective(poset, "not", s1)
    joined = sieve_connective(poset, "or", s1, negation)
    top = principal_sieve(poset, v12.id)
    print(f"\nnot {{{v1.id}}} = {{{', '.join(sorted(negation.members))}}}")
    print("s or not s == top?", joined == top)
    print("s and not s is empty?",
          not sieve_connective(poset, "and", s1, negation).members)

    # ------------------------------------------------------------------
    # 3) The same algebra at the level of clopen subobjects: negating the
    #    daseinised first ray keeps exactly the characters that never
    #    restrict into it.
    # ------------------------------------------------------------------
    s = daseinise_proposition(poset, p[0]).subobject
    complement = subobject_connective(poset, "not", s)
    print(f"\nnegation of the daseinised first ray, at {v1.id}:",
          sorted(complement.at(v1.id)))
    lem = subobject_connective(poset, "or", s, complement)
    full = all(len(lem.at(c.id)) == c.n_atoms for c in poset)
    print("subobject excluded middle holds?", full)


if __name__ == "__main__":
    main()
