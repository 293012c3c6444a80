"""Problem files: named states, observables and propositions over seed bases.

The on-disk format is a single JSON object::

    {"dim": int,
     "bases": [[[ [re, im], ... ], ...], ...],
     "projector_sets": [[matrix, ...], ...],
     "states": {name: [[re, im], ...]},
     "observables": {name: matrix},
     "propositions": {name: {"observable": name, "interval": [lo, hi]}
                          | {"projector": matrix}},
     "tolerances": {"tau": num, "tau_eig": num}}

with complex matrices as row-major nested arrays of [re, im] pairs.  All
referenced names must resolve and every invariant (orthonormal bases, unit
states, self-adjoint observables, projection propositions) is checked when
the file is loaded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._json import matrix_from_json, matrix_to_json, vector_from_json, vector_to_json
from .contexts import Context, ContextPoset, build_poset, context_from_basis, context_from_projectors
from .errors import ParseError, ValidationError
from .operators import TAU, TAU_EIG, is_projector, is_self_adjoint
from .valuation import proposition_projector


@dataclass(frozen=True)
class Tolerances:
    tau: float = TAU
    tau_eig: float = TAU_EIG


@dataclass(frozen=True)
class IntervalProposition:
    """Proposition "observable takes a value in the closed interval"."""

    observable: str
    interval: tuple[float, float]


@dataclass(frozen=True)
class ProjectorProposition:
    """Proposition given directly by a projection operator."""

    projector: np.ndarray


@dataclass(frozen=True, eq=False)
class Problem:
    dim: int
    bases: tuple[tuple[np.ndarray, ...], ...]
    projector_sets: tuple[tuple[np.ndarray, ...], ...]
    states: dict[str, np.ndarray]
    observables: dict[str, np.ndarray]
    propositions: dict[str, IntervalProposition | ProjectorProposition]
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Problem):
            return NotImplemented
        if self.dim != other.dim or self.tolerances != other.tolerances:
            return False
        if len(self.bases) != len(other.bases) or len(self.projector_sets) != len(other.projector_sets):
            return False
        for mine, theirs in zip(self.bases, other.bases):
            if len(mine) != len(theirs) or any(
                not np.array_equal(v, w) for v, w in zip(mine, theirs)
            ):
                return False
        for mine, theirs in zip(self.projector_sets, other.projector_sets):
            if len(mine) != len(theirs) or any(
                not np.array_equal(p, q) for p, q in zip(mine, theirs)
            ):
                return False
        if set(self.states) != set(other.states) or any(
            not np.array_equal(self.states[k], other.states[k]) for k in self.states
        ):
            return False
        if set(self.observables) != set(other.observables) or any(
            not np.array_equal(self.observables[k], other.observables[k])
            for k in self.observables
        ):
            return False
        if set(self.propositions) != set(other.propositions):
            return False
        for k, mine in self.propositions.items():
            theirs = other.propositions[k]
            if type(mine) is not type(theirs):
                return False
            if isinstance(mine, IntervalProposition):
                if mine != theirs:
                    return False
            elif not np.array_equal(mine.projector, theirs.projector):
                return False
        return True


def problem_from_dict(raw: dict) -> Problem:
    """Validate a parsed problem dictionary; every invariant checked eagerly."""
    if not isinstance(raw, dict):
        raise ParseError("problem file must contain a JSON object")
    if "dim" not in raw or not isinstance(raw["dim"], int) or raw["dim"] < 2:
        raise ValidationError("dim must be an integer >= 2")
    dim = raw["dim"]
    tau = TAU
    tau_eig = TAU_EIG
    tol_raw = raw.get("tolerances", {})
    if not isinstance(tol_raw, dict):
        raise ParseError("tolerances: expected an object")
    if "tau" in tol_raw:
        tau = float(tol_raw["tau"])
    if "tau_eig" in tol_raw:
        tau_eig = float(tol_raw["tau_eig"])
    if tau <= 0 or tau_eig <= 0:
        raise ValidationError("tolerances must be positive")

    bases = []
    for b, basis_raw in enumerate(raw.get("bases", [])):
        if not isinstance(basis_raw, list):
            raise ParseError(f"bases[{b}]: expected a list of vectors")
        vectors = tuple(
            vector_from_json(v, f"bases[{b}][{i}]") for i, v in enumerate(basis_raw)
        )
        if len(vectors) != dim or any(v.shape != (dim,) for v in vectors):
            raise ValidationError(f"bases[{b}]: expected {dim} vectors of length {dim}")
        gram = np.array([[np.vdot(v, w) for w in vectors] for v in vectors])
        if np.linalg.norm(gram - np.eye(dim)) > 1e-9:
            raise ValidationError("basis not orthonormal")
        bases.append(vectors)

    projector_sets = []
    for s, set_raw in enumerate(raw.get("projector_sets", [])):
        if not isinstance(set_raw, list) or not set_raw:
            raise ParseError(f"projector_sets[{s}]: expected a nonempty list of matrices")
        mats = tuple(
            matrix_from_json(m, f"projector_sets[{s}][{i}]") for i, m in enumerate(set_raw)
        )
        for i, m in enumerate(mats):
            if m.shape != (dim, dim):
                raise ValidationError(f"projector_sets[{s}][{i}]: dimension mismatch")
            if not is_projector(m, tau):
                raise ValidationError(f"projector_sets[{s}][{i}]: not a projection")
        projector_sets.append(mats)

    states = {}
    for name, vec_raw in raw.get("states", {}).items():
        vec = vector_from_json(vec_raw, f"states.{name}")
        if vec.shape != (dim,):
            raise ValidationError(f"states.{name}: dimension mismatch")
        if abs(np.linalg.norm(vec) - 1.0) > 1e-9:
            raise ValidationError(f"states.{name}: state not unit norm")
        states[name] = vec

    observables = {}
    for name, mat_raw in raw.get("observables", {}).items():
        mat = matrix_from_json(mat_raw, f"observables.{name}")
        if mat.shape != (dim, dim):
            raise ValidationError(f"observables.{name}: dimension mismatch")
        if not is_self_adjoint(mat, tau):
            raise ValidationError(f"observables.{name}: observable not self-adjoint")
        observables[name] = mat

    propositions: dict[str, IntervalProposition | ProjectorProposition] = {}
    for name, prop_raw in raw.get("propositions", {}).items():
        if not isinstance(prop_raw, dict):
            raise ParseError(f"propositions.{name}: expected an object")
        if "projector" in prop_raw:
            mat = matrix_from_json(prop_raw["projector"], f"propositions.{name}.projector")
            if mat.shape != (dim, dim):
                raise ValidationError(f"propositions.{name}: dimension mismatch")
            if not is_projector(mat, tau):
                raise ValidationError(f"propositions.{name}: not a projection")
            propositions[name] = ProjectorProposition(mat)
        elif "observable" in prop_raw and "interval" in prop_raw:
            obs = prop_raw["observable"]
            if obs not in observables:
                raise ValidationError(f"propositions.{name}: unknown observable {obs!r}")
            interval = prop_raw["interval"]
            if (
                not isinstance(interval, list)
                or len(interval) != 2
                or not all(isinstance(x, (int, float)) for x in interval)
            ):
                raise ParseError(f"propositions.{name}.interval: expected [lo, hi]")
            lo, hi = float(interval[0]), float(interval[1])
            if lo > hi:
                raise ValidationError(f"propositions.{name}: interval lo > hi")
            propositions[name] = IntervalProposition(obs, (lo, hi))
        else:
            raise ParseError(
                f"propositions.{name}: expected a 'projector' or an "
                f"'observable'/'interval' pair"
            )

    if not bases and not projector_sets:
        raise ValidationError("problem needs at least one basis or projector set")
    return Problem(
        dim=dim,
        bases=tuple(bases),
        projector_sets=tuple(projector_sets),
        states=states,
        observables=observables,
        propositions=propositions,
        tolerances=Tolerances(tau, tau_eig),
    )


def load_problem(path) -> Problem:
    """Read and validate a problem file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return problem_from_dict(raw)


def problem_to_dict(problem: Problem) -> dict:
    """Inverse of :func:`problem_from_dict`; floats are kept exact."""
    return {
        "dim": problem.dim,
        "bases": [[vector_to_json(v) for v in basis] for basis in problem.bases],
        "projector_sets": [
            [matrix_to_json(p) for p in pset] for pset in problem.projector_sets
        ],
        "states": {name: vector_to_json(v) for name, v in sorted(problem.states.items())},
        "observables": {
            name: matrix_to_json(m) for name, m in sorted(problem.observables.items())
        },
        "propositions": {
            name: (
                {"projector": matrix_to_json(p.projector)}
                if isinstance(p, ProjectorProposition)
                else {"observable": p.observable, "interval": [p.interval[0], p.interval[1]]}
            )
            for name, p in sorted(problem.propositions.items())
        },
        "tolerances": {"tau": problem.tolerances.tau, "tau_eig": problem.tolerances.tau_eig},
    }


def serialize_problem(problem: Problem) -> str:
    return json.dumps(problem_to_dict(problem), indent=2, sort_keys=True) + "\n"


def problem_seed_contexts(problem: Problem) -> list[Context]:
    """Seed contexts: one maximal context per basis, one generated context
    per projector set."""
    tau = problem.tolerances.tau
    seeds = [context_from_basis(basis, tau) for basis in problem.bases]
    seeds += [context_from_projectors(pset, tau) for pset in problem.projector_sets]
    return seeds


def problem_poset(problem: Problem) -> ContextPoset:
    return build_poset(problem_seed_contexts(problem), problem.tolerances.tau)


def resolve_proposition(problem: Problem, name: str) -> np.ndarray:
    """Projection operator of a named proposition."""
    if name not in problem.propositions:
        raise ValidationError(f"unknown proposition {name!r}")
    prop = problem.propositions[name]
    if isinstance(prop, ProjectorProposition):
        return prop.projector
    observable = problem.observables[prop.observable]
    return proposition_projector(
        observable, prop.interval, problem.tolerances.tau, problem.tolerances.tau_eig
    )
