"""Spectral decompositions, spectral families, projector and spectral orders."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_self_adjoint, random_unit_vector
from toposqt.errors import DimensionMismatch, NotProjector, NotSelfAdjoint
from toposqt.operators import (
    is_projector,
    is_self_adjoint,
    projector_leq,
    spectral_decomposition,
    spectral_family,
    spectral_family_at,
    spectral_order_leq,
)


def test_predicates():
    assert is_self_adjoint(np.diag([1.0, 2.0]))
    assert not is_self_adjoint(np.array([[0, 1], [0, 0]], dtype=complex))
    assert is_projector(np.diag([1.0, 0.0]))
    assert not is_projector(np.diag([1.0, 0.5]))


def test_decomposition_identity_is_single_cluster():
    decomp = spectral_decomposition(np.eye(4, dtype=complex))
    assert decomp.eigenvalues == (1.0,)
    assert np.allclose(decomp.projectors[0], np.eye(4))


def test_decomposition_sz(sz, std_projectors):
    p1, p2, p3, p4 = std_projectors
    decomp = spectral_decomposition(sz)
    assert np.allclose(decomp.eigenvalues, [-2.0, 0.0, 2.0])
    assert np.allclose(decomp.projectors[0], p4)
    assert np.allclose(decomp.projectors[1], p2 + p3)
    assert np.allclose(decomp.projectors[2], p1)


def test_decomposition_degenerate_ranks_and_reconstruction():
    A = np.diag([1.0, 1.0, 2.0, 3.0]).astype(complex)
    decomp = spectral_decomposition(A)
    assert np.allclose(decomp.eigenvalues, [1.0, 2.0, 3.0])
    ranks = [int(round(np.trace(p).real)) for p in decomp.projectors]
    assert ranks == [2, 1, 1]
    assert np.allclose(decomp.reconstruct(), A)


def test_decomposition_rejects_non_self_adjoint():
    with pytest.raises(NotSelfAdjoint):
        spectral_decomposition(np.array([[0, 1], [0, 0]], dtype=complex))


def test_spectral_family_at_sz(sz):
    decomp = spectral_decomposition(sz)
    assert np.allclose(spectral_family_at(decomp, -3.0), np.zeros((4, 4)))
    assert np.allclose(spectral_family_at(decomp, 0.0), np.diag([0.0, 1.0, 1.0, 1.0]))
    assert np.allclose(spectral_family_at(decomp, 2.0), np.eye(4))


def test_spectral_family_monotone_and_tops_out(sz):
    decomp = spectral_decomposition(sz)
    grid = [-5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 7.0]
    previous = np.zeros((4, 4), dtype=complex)
    for r in grid:
        current = spectral_family_at(decomp, r)
        assert projector_leq(previous, current)
        previous = current
    assert np.allclose(spectral_family_at(decomp, max(decomp.eigenvalues)), np.eye(4))


def test_spectral_family_object_matches_pointwise(sz):
    decomp = spectral_decomposition(sz)
    family = spectral_family(decomp)
    for r in (-3.0, -2.0, -0.5, 0.0, 1.9, 2.0, 10.0):
        assert np.allclose(family.at(r), spectral_family_at(decomp, r))


def test_projector_leq_examples(std_projectors):
    p1, p2, _, p4 = std_projectors
    zero = np.zeros((4, 4), dtype=complex)
    assert projector_leq(zero, p2)
    assert projector_leq(p1, p1 + p4)
    assert not projector_leq(p1, p2)
    # orthogonal rays: the excluded part has full norm
    assert abs(np.linalg.norm((np.eye(4) - p2) @ p1) - 1.0) < 1e-12


def test_projector_leq_rejects_non_projectors():
    with pytest.raises(NotProjector):
        projector_leq(np.diag([0.5, 0.0]), np.eye(2, dtype=complex))


def test_spectral_order_reflexive(sz):
    for A in (sz, np.eye(4, dtype=complex), np.diag([1.0, 1.0, 2.0, 3.0]).astype(complex)):
        assert spectral_order_leq(A, A)


def test_spectral_order_on_projectors_matches_projector_order(std_projectors):
    p1, p2, _, _ = std_projectors
    assert spectral_order_leq(p1, p1 + p2)
    assert not spectral_order_leq(p1 + p2, p1)


def test_spectral_order_dominated_by_scaled_identity(sz):
    two = 2.0 * np.eye(4, dtype=complex)
    assert spectral_order_leq(sz, two)
    assert not spectral_order_leq(two, sz)
    # brute-force oracle on a dense r grid, from scratch via eigh
    for r in np.linspace(-4.0, 4.0, 33):
        ea = _family_by_hand(sz, r)
        eb = _family_by_hand(two, r)
        assert projector_leq(eb, ea)


def _family_by_hand(A, r):
    vals, vecs = np.linalg.eigh(A)
    keep = vecs[:, vals <= r + 1e-8]
    return keep @ keep.conj().T


def test_spectral_order_agrees_with_projector_order_on_lattices(poset11):
    for context in poset11:
        projections = _lattice(context)
        for P in projections:
            for Q in projections:
                assert spectral_order_leq(P, Q) == projector_leq(P, Q)


def _lattice(context):
    from itertools import combinations

    out = []
    for r in range(len(context.atoms) + 1):
        for subset in combinations(range(len(context.atoms)), r):
            total = np.zeros((context.dim, context.dim), dtype=complex)
            for i in subset:
                total += context.atoms[i]
            out.append(total)
    return out


def test_spectral_order_partial_order_properties(sz):
    pool = [
        np.zeros((4, 4), dtype=complex),
        np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex),
        np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex),
        np.eye(4, dtype=complex),
        sz,
        2.0 * np.eye(4, dtype=complex),
        np.diag([1.0, 1.0, 2.0, 3.0]).astype(complex),
    ]
    for A in pool:
        assert spectral_order_leq(A, A)
    for A in pool:
        for B in pool:
            if spectral_order_leq(A, B) and spectral_order_leq(B, A):
                assert np.allclose(A, B, atol=1e-9)
            for C in pool:
                if spectral_order_leq(A, B) and spectral_order_leq(B, C):
                    assert spectral_order_leq(A, C)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_spectral_order_implies_expectation_order(seed):
    rng = np.random.default_rng(seed)
    A = random_self_adjoint(rng, 4)
    shift = rng.uniform(0.1, 2.0)
    B = A + shift * np.eye(4)  # same eigenbasis, strictly larger spectrum
    assert spectral_order_leq(A, B)
    for _ in range(8):
        psi = random_unit_vector(rng, 4)
        ea = float(np.real(psi.conj() @ (A @ psi)))
        eb = float(np.real(psi.conj() @ (B @ psi)))
        assert ea <= eb + 1e-9


def test_dimension_mismatch_raises(sz):
    with pytest.raises(DimensionMismatch):
        spectral_order_leq(sz, np.eye(2, dtype=complex))
    with pytest.raises(DimensionMismatch):
        projector_leq(np.eye(2, dtype=complex), np.eye(4, dtype=complex))


def test_decomposition_projectors_are_orthogonal_resolution():
    rng = np.random.default_rng(5)
    gauss = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    A = (gauss + gauss.conj().T) / 2.0
    decomp = spectral_decomposition(A)
    total = np.zeros((4, 4), dtype=complex)
    for i, p in enumerate(decomp.projectors):
        assert is_projector(p, 1e-9)
        total += p
        for q in decomp.projectors[i + 1 :]:
            assert np.linalg.norm(p @ q) <= 1e-9
    assert np.allclose(total, np.eye(4))
    assert all(a < b for a, b in zip(decomp.eigenvalues, decomp.eigenvalues[1:]))
