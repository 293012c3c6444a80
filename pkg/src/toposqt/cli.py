"""Command-line interface: problem ingestion, dispatch, deterministic reports.

Every command reads a problem file, builds its context poset and prints one
JSON document (or a human-readable table with ``--format table``).  Output
ordering is canonical throughout, so identical inputs produce byte-identical
reports.  Exit status: 0 on success, 1 on a domain error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice, product
from typing import Mapping

import numpy as np

from ._json import matrix_to_json, round_real, vector_to_json
from .contexts import ContextPoset
from .daseinisation import daseinise_proposition, inner_daseinise_projection
from .errors import ToposError, ValidationError
from .logic import Sieve, enumerate_sieves, principal_sieve, sieve_connective
from .operators import projector_rank
from .presheaf import gelfand_spectrum, subobject_of_projector
from .problems import Problem, load_problem, problem_poset, resolve_proposition
from .valuation import (
    DEFAULT_SEARCH_BUDGET,
    global_sections,
    pseudo_state,
    quantity_value_arrow,
    truth_value,
)

COMMANDS = (
    "contexts",
    "spectrum",
    "daseinize",
    "pseudo-state",
    "truth",
    "value",
    "heyting-check",
    "sections",
)

#: Most sieve triples checked per context by ``heyting-check``.
HEYTING_TRIPLE_CAP = 200_000


def _ranks(context) -> list[int]:
    return [projector_rank(a) for a in context.atoms]


def _context_entry(context) -> dict:
    return {
        "id": context.id,
        "atom_count": context.n_atoms,
        "atom_ranks": _ranks(context),
        "atoms": [matrix_to_json(a, 12) for a in context.atoms],
    }


def _select_contexts(poset: ContextPoset, options: Mapping) -> list:
    wanted = options.get("context")
    if wanted is None:
        return list(poset)
    return [poset.get(wanted)]


def _sieve_json(sieve: Sieve) -> dict:
    return {"base": sieve.base, "members": sorted(sieve.members)}


def run_command(command: str, problem: Problem, options: Mapping) -> dict:
    """Execute one CLI command against a loaded problem; returns the report."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    poset = problem_poset(problem)
    tau = problem.tolerances.tau
    tau_eig = problem.tolerances.tau_eig

    if command == "contexts":
        pairs = [
            [sub, sup.id]
            for sup in poset
            for sub in poset.down_ids(sup.id)
            if sub != sup.id
        ]
        return {
            "dim": poset.dim,
            "count": len(poset),
            "contexts": [_context_entry(c) for c in poset],
            "leq": sorted(pairs),
        }

    if command == "spectrum":
        report = {}
        for context in _select_contexts(poset, options):
            report[context.id] = {
                "characters": [
                    {"context": ch.context_id, "atom": ch.atom_index}
                    for ch in gelfand_spectrum(context)
                ],
                "atom_ranks": _ranks(context),
            }
        return {"contexts": report}

    if command == "daseinize":
        name = _require_option(options, "prop")
        mode = options.get("mode") or "outer"
        projector = resolve_proposition(problem, name)
        if mode == "outer":
            result = daseinise_proposition(poset, projector, tau)
            per_context = result.per_context_projector
            selection = {cid: result.subobject.at(cid) for cid in poset.ids}
        else:
            per_context = {
                c.id: inner_daseinise_projection(projector, c, tau) for c in poset
            }
            selection = {
                c.id: subobject_of_projector(c, per_context[c.id], tau) for c in poset
            }
        contexts = {
            cid: {
                "projector": matrix_to_json(per_context[cid], 12),
                "characters": sorted(selection[cid]),
            }
            for cid in poset.ids
        }
        return {
            "proposition": name,
            "mode": mode,
            "projector": matrix_to_json(projector, 12),
            "contexts": contexts,
        }

    if command == "pseudo-state":
        name = _require_option(options, "state")
        psi = _resolve_state(problem, name)
        ps = pseudo_state(poset, psi, tau)
        return {
            "state": name,
            "vector": vector_to_json(psi, 12),
            "contexts": {
                cid: {
                    "projector": matrix_to_json(ps.per_context_projector[cid], 12),
                    "characters": sorted(ps.subobject.at(cid)),
                }
                for cid in poset.ids
            },
        }

    if command == "truth":
        prop_name = _require_option(options, "prop")
        state_name = _require_option(options, "state")
        projector = resolve_proposition(problem, prop_name)
        psi = _resolve_state(problem, state_name)
        element = truth_value(poset, projector, psi, tau)
        return {
            "proposition": prop_name,
            "state": state_name,
            "sieves": {cid: _sieve_json(element.at(cid)) for cid in poset.ids},
        }

    if command == "value":
        name = _require_option(options, "observable")
        if name not in problem.observables:
            raise ValidationError(f"unknown observable {name!r}")
        A = problem.observables[name]
        intervals = []
        for context in _select_contexts(poset, options):
            for ch in gelfand_spectrum(context):
                pair = quantity_value_arrow(poset, A, context, ch, tau, tau_eig)
                intervals.append(
                    {
                        "context": context.id,
                        "character_atom": ch.atom_index,
                        "mu": {cid: round_real(x) for cid, x in sorted(pair.mu.items())},
                        "nu": {cid: round_real(x) for cid, x in sorted(pair.nu.items())},
                    }
                )
        return {"observable": name, "intervals": intervals}

    if command == "heyting-check":
        report = {}
        for context in _select_contexts(poset, options):
            sieves = enumerate_sieves(poset, context)
            report[context.id] = _check_sieve_laws(poset, context.id, sieves)
        return {"contexts": report}

    # sections
    budget = options.get("budget") or DEFAULT_SEARCH_BUDGET
    found = global_sections(poset, budget)
    return {
        "count": len(found),
        "sections": [{"assignment": dict(sorted(s.assignment.items()))} for s in found],
    }


def _check_sieve_laws(poset: ContextPoset, base: str, sieves) -> dict:
    top = principal_sieve(poset, base)
    violations = 0
    witness = None
    for s in sieves:
        negation = sieve_connective(poset, "not", s)
        if sieve_connective(poset, "and", s, negation).members:
            violations += 1
        if witness is None and sieve_connective(poset, "or", s, negation) != top:
            witness = sorted(s.members)
    triples = islice(product(sieves, repeat=3), HEYTING_TRIPLE_CAP)
    checked = 0
    for a, b, c in triples:
        checked += 1
        conj = sieve_connective(poset, "and", a, b)
        disj = sieve_connective(poset, "or", b, c)
        if sieve_connective(poset, "and", a, disj) != sieve_connective(
            poset, "or", conj, sieve_connective(poset, "and", a, c)
        ):
            violations += 1
        implication = sieve_connective(poset, "implies", b, c)
        if (conj.members <= c.members) != (a.members <= implication.members):
            violations += 1
    return {
        "sieve_count": len(sieves),
        "triples_checked": checked,
        "violations": violations,
        "excluded_middle_witness": witness,
    }


def _require_option(options: Mapping, key: str) -> str:
    value = options.get(key)
    if not value:
        raise ValidationError(f"command requires --{key}")
    return value


def _resolve_state(problem: Problem, name: str) -> np.ndarray:
    if name not in problem.states:
        raise ValidationError(f"unknown state {name!r}")
    return problem.states[name]


# -- rendering ---------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_table(command: str, report: dict) -> str:
    lines: list[str] = []
    if command == "contexts":
        lines.append(f"dim {report['dim']}, {report['count']} contexts")
        lines.append(f"{'context':<18} {'atoms':>5}  ranks")
        for entry in report["contexts"]:
            ranks = "|".join(str(r) for r in entry["atom_ranks"])
            lines.append(f"{entry['id']:<18} {entry['atom_count']:>5}  [{ranks}]")
    elif command == "spectrum":
        lines.append(f"{'context':<18} {'points':>6}  ranks")
        for cid, entry in sorted(report["contexts"].items()):
            ranks = "|".join(str(r) for r in entry["atom_ranks"])
            lines.append(f"{cid:<18} {len(entry['characters']):>6}  [{ranks}]")
    elif command in ("daseinize", "pseudo-state"):
        head = report.get("proposition") or report.get("state")
        lines.append(f"{command} {head}")
        lines.append(f"{'context':<18} characters  projector diagonal")
        for cid, entry in sorted(report["contexts"].items()):
            chars = ",".join(str(i) for i in entry["characters"])
            diag = ", ".join(
                f"{row[i][0]:g}" for i, row in enumerate(entry["projector"])
            )
            lines.append(f"{cid:<18} {{{chars}}}        [{diag}]")
    elif command == "truth":
        lines.append(f"truth of {report['proposition']} in state {report['state']}")
        lines.append(f"{'context':<18} sieve")
        for cid, sieve in sorted(report["sieves"].items()):
            members = ", ".join(sieve["members"]) if sieve["members"] else "(empty)"
            lines.append(f"{cid:<18} {members}")
    elif command == "value":
        lines.append(f"interval values of {report['observable']}")
        lines.append(f"{'context':<18} {'atom':>4}  [mu, nu] at the context itself")
        for entry in report["intervals"]:
            cid = entry["context"]
            mu = entry["mu"][cid]
            nu = entry["nu"][cid]
            lines.append(f"{cid:<18} {entry['character_atom']:>4}  [{mu:g}, {nu:g}]")
    elif command == "heyting-check":
        lines.append(f"{'context':<18} {'sieves':>6} {'triples':>8} {'violations':>10}  witness")
        for cid, entry in sorted(report["contexts"].items()):
            witness = entry["excluded_middle_witness"]
            shown = "{" + ", ".join(witness) + "}" if witness is not None else "-"
            lines.append(
                f"{cid:<18} {entry['sieve_count']:>6} {entry['triples_checked']:>8} "
                f"{entry['violations']:>10}  {shown}"
            )
    else:  # sections
        lines.append(f"{report['count']} global section(s)")
        for i, section in enumerate(report["sections"]):
            parts = ", ".join(f"{cid}:{atom}" for cid, atom in section["assignment"].items())
            lines.append(f"section {i}: {parts}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toposqt",
        description="Contextual state-space computations over finite operator algebras.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="problem file (JSON)")
        p.add_argument("--format", choices=("json", "table"), default="json")
        if name in ("contexts", "spectrum", "value", "heyting-check"):
            p.add_argument("--context", help="restrict to one context id")
        if name in ("daseinize", "truth"):
            p.add_argument("--prop", help="proposition name")
        if name in ("pseudo-state", "truth"):
            p.add_argument("--state", help="state name")
        if name == "value":
            p.add_argument("--observable", help="observable name")
        if name == "daseinize":
            p.add_argument("--mode", choices=("outer", "inner"), default="outer")
        if name == "sections":
            p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    options = {
        key: getattr(args, key, None)
        for key in ("context", "state", "prop", "observable", "mode", "budget")
    }
    try:
        problem = load_problem(args.input)
        report = run_command(args.command, problem, options)
    except (ToposError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "table":
        sys.stdout.write(render_table(args.command, report))
    else:
        sys.stdout.write(render_json(report))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
