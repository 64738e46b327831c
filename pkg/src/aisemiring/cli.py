"""Command-line surface: deciders, delta computations, witness checks,
axiom-shape checks, derivation verify/search, semiring file validation
and decider-vs-oracle cross-validation. All output is deterministic for
fixed inputs and seed; --json mirrors the text reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    BUILTIN_NAMES,
    AxiomViolation,
    FiniteSemiring,
    builtin,
    semiring_from_json,
    tables_from_json,
    validate_ai_semiring,
)
from .deciders import (
    Verdict,
    cross_validate,
    holds_bruteforce,
    holds_d2,
    holds_s7,
    holds_s7_0,
)
from .derivation import (
    SearchBounds,
    apply_step,
    axioms_from_json,
    chain_from_json,
    chain_to_json,
    search_derivation,
    verify_chain,
)
from .errors import SizeLimitError
from .parsing import parse_identity, parse_term
from .terms import delta_sets, format_word
from .witness import (
    CONDITION_TEXT,
    check_axiom_conditions,
    check_witness_facts,
    make_witness,
)


def _load_semiring(arg: str) -> tuple[FiniteSemiring, str]:
    if arg in BUILTIN_NAMES:
        return builtin(arg), arg
    path = Path(arg)
    if not path.is_file():
        raise ValueError(
            f"unknown semiring {arg!r}: not one of {', '.join(BUILTIN_NAMES)} "
            "and no such file"
        )
    out = semiring_from_json(path.read_text(encoding="utf-8"))
    if isinstance(out, AxiomViolation):
        raise ValueError(f"semiring file {arg}: {out}")
    return out, arg


def _syntactic_decider(name: str):
    if name == "D2":
        return holds_d2
    if name == "S7":
        return holds_s7
    if name == "S7_0":
        return holds_s7_0
    if name == "trivial":
        return lambda ident: Verdict(
            True, reason="the one-element semiring satisfies every identity"
        )
    raise ValueError(
        f"no syntactic decider is defined for semiring {name!r}; use --method oracle"
    )


def _identity_arg(value: str, commutative: bool):
    path = Path(value)
    if path.is_file():
        value = path.read_text(encoding="utf-8").strip()
    return parse_identity(value, commutative)


def _emit(args, lines: list[str], doc: dict) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _verdict_lines(label: str, v: Verdict) -> list[str]:
    lines = [f"{label}: {'holds' if v.holds else 'fails'}"]
    if v.witness:
        pairs = ", ".join(f"{x}={v.witness[x]}" for x in sorted(v.witness))
        lines.append(f"  witness: {pairs}")
    if v.reason:
        lines.append(f"  reason: {v.reason}")
    return lines


def cmd_check(args) -> int:
    s, label = _load_semiring(args.semiring)
    ident = _identity_arg(args.identity, args.commutative)
    results: dict[str, Verdict] = {}
    if args.method in ("oracle", "both"):
        results["oracle"] = holds_bruteforce(s, ident)
    if args.method in ("syntactic", "both"):
        results["syntactic"] = _syntactic_decider(label)(ident)

    lines = [f"identity: {ident}", f"semiring: {label}"]
    for name in ("oracle", "syntactic"):
        if name in results:
            lines.extend(_verdict_lines(name, results[name]))
    doc = {
        "identity": str(ident),
        "semiring": label,
        "method": args.method,
        "results": {name: v.to_dict() for name, v in results.items()},
    }
    agree = True
    if len(results) == 2:
        agree = results["oracle"].holds == results["syntactic"].holds
        lines.append(f"agreement: {'yes' if agree else 'no'}")
        doc["agreement"] = agree
    _emit(args, lines, doc)
    return 0 if agree and all(v.holds for v in results.values()) else 1


def cmd_delta(args) -> int:
    term = parse_term(args.term, args.commutative)
    family = sorted(delta_sets(term), key=lambda z: (len(z), sorted(z)))
    rendered = "; ".join("{" + ",".join(sorted(z)) + "}" for z in family)
    _emit(
        args,
        [rendered if family else "(empty)"],
        {"term": str(term), "delta": [sorted(z) for z in family]},
    )
    return 0


_STATUS = {True: "pass", False: "fail", None: "skipped"}


def cmd_witness(args) -> int:
    pair = make_witness(args.n)
    report = check_witness_facts(pair, force_oracle=args.oracle)
    lines = [
        f"witness n={pair.n}",
        f"u = {pair.u}",
        f"q = {format_word(pair.q)}",
    ]
    for c in report.checks:
        note = f" ({c.note})" if c.note else ""
        lines.append(f"{c.name}: {_STATUS[c.passed]}{note}")
    lines.append(f"overall: {'pass' if report.ok else 'fail'}")
    doc = {"u": str(pair.u), "q": format_word(pair.q)}
    doc.update(report.to_dict())
    _emit(args, lines, doc)
    return 0 if report.ok else 1


def cmd_axiom_check(args) -> int:
    ident = _identity_arg(args.identity, args.commutative)
    report = check_axiom_conditions(ident.lhs, ident.rhs)
    lines = [f"identity: {ident}"]
    for c in report.conditions:
        note = f" ({c.witness})" if c.witness else ""
        lines.append(f"({c.name}) {CONDITION_TEXT[c.name]}: {_STATUS[c.passed]}{note}")
    rendered = "; ".join("{" + ",".join(sorted(z)) + "}" for z in report.delta)
    lines.append(f"delta(A): {rendered if report.delta else '(empty)'}")
    lines.append(
        f"every variable covered: {'yes' if report.every_variable_covered else 'no'}"
    )
    lines.append(f"B within A: {'yes' if report.b_subset_a else 'no'}")
    doc = {"identity": str(ident)}
    doc.update(report.to_dict())
    _emit(args, lines, doc)
    return 0 if report.ok else 1


def cmd_derive_verify(args) -> int:
    sigma = axioms_from_json(Path(args.axioms).read_text(encoding="utf-8"))
    chain = chain_from_json(Path(args.chain).read_text(encoding="utf-8"))
    verdict = verify_chain(chain, sigma)
    if verdict.ok:
        lines = [f"verified: {len(chain.steps)} step(s) from {chain.start} to {chain.end}"]
    else:
        lines = [f"rejected at index {verdict.failing_index}: {verdict.reason}"]
    doc = {
        "ok": verdict.ok,
        "steps": len(chain.steps),
        "failing_index": verdict.failing_index,
        "reason": verdict.reason,
    }
    _emit(args, lines, doc)
    return 0 if verdict.ok else 1


def _chain_lines(chain, sigma) -> list[str]:
    lines = [f"T1 = {chain.start}"]
    t = chain.start
    for i, step in enumerate(chain.steps, start=1):
        phi = ", ".join(f"{x} -> {step.phi[x]}" for x in sorted(step.phi))
        extras = []
        if step.left_context is not None:
            extras.append(f"left {step.left_context}")
        if step.right_context is not None:
            extras.append(f"right {step.right_context}")
        if step.remainder is not None:
            extras.append(f"remainder {step.remainder}")
        tail = f"; {'; '.join(extras)}" if extras else ""
        lines.append(f"  step {i}: [{step.axiom_name} {step.direction}] {phi}{tail}")
        t = apply_step(t, step, sigma)
        lines.append(f"T{i + 1} = {t}")
    return lines


def cmd_derive_search(args) -> int:
    sigma = axioms_from_json(Path(args.axioms).read_text(encoding="utf-8"))
    goal = parse_identity(args.goal, sigma.commutative)
    bounds = SearchBounds(
        max_depth=args.max_depth,
        max_words=args.max_words,
        max_word_len=args.max_len,
        max_image_words=args.max_image_words,
    )
    outcome = search_derivation(sigma, goal, bounds)
    doc = {
        "status": outcome.status,
        "explored": outcome.explored,
        "bounds": {
            "max_depth": bounds.max_depth,
            "max_words": bounds.max_words,
            "max_word_len": bounds.max_word_len,
            "max_image_words": bounds.max_image_words,
        },
        "chain": json.loads(chain_to_json(outcome.chain)) if outcome.found else None,
    }
    if outcome.found:
        lines = [f"found: {len(outcome.chain.steps)} step(s)"]
        lines.extend(_chain_lines(outcome.chain, sigma))
    elif outcome.status == "absent-exhausted":
        lines = [
            "no derivation: candidate space exhausted "
            f"(explored {outcome.explored} term(s))"
        ]
    else:
        lines = [
            "no derivation found: search truncated by bounds "
            f"(explored {outcome.explored} term(s))"
        ]
    _emit(args, lines, doc)
    return 0 if outcome.found else 1


def cmd_validate(args) -> int:
    if args.semiring in BUILTIN_NAMES:
        s = builtin(args.semiring)
        out: FiniteSemiring | AxiomViolation = s
    else:
        text = Path(args.semiring).read_text(encoding="utf-8")
        out = validate_ai_semiring(*tables_from_json(text))
    if isinstance(out, AxiomViolation):
        _emit(
            args,
            [f"invalid: {out}"],
            {"valid": False, "law": out.law, "witness": list(out.witness)},
        )
        return 1
    _emit(
        args,
        [f"valid ai-semiring: {out.size} element(s) ({', '.join(out.elements)})"],
        {"valid": True, "elements": list(out.elements)},
    )
    return 0


def cmd_crossval(args) -> int:
    if args.semiring not in BUILTIN_NAMES:
        raise ValueError(
            f"crossval needs a builtin semiring name, one of {', '.join(BUILTIN_NAMES)}"
        )
    s = builtin(args.semiring)
    syntactic = _syntactic_decider(args.semiring)
    report = cross_validate(
        s,
        syntactic,
        samples=args.samples,
        seed=args.seed,
        max_vars=args.max_vars,
        max_words=args.max_words,
        max_word_len=args.max_len,
        commutative=args.commutative,
        label=args.semiring,
    )
    lines = [
        f"semiring: {report.semiring}",
        f"samples: {report.samples}  seed: {report.seed}",
        "bounds: max_vars={max_vars} max_words={max_words} "
        "max_word_len={max_word_len} commutative={commutative}".format(
            **report.bounds
        ),
        f"disagreements: {len(report.disagreements)}",
    ]
    for d in report.disagreements:
        lines.append(
            f"  {d['identity']}: syntactic={d['syntactic']} oracle={d['oracle']}"
        )
    _emit(args, lines, report.to_dict())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aisemiring",
        description="Decide identities in finite additively idempotent semirings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument(
        "--json", action="store_true", help="emit a JSON report instead of text"
    )
    mode_flag = argparse.ArgumentParser(add_help=False)
    mode_flag.add_argument(
        "--commutative",
        action="store_true",
        help="read words as commutative (letters sorted)",
    )

    p = sub.add_parser(
        "check",
        parents=[json_flag, mode_flag],
        help="decide an identity in a semiring",
    )
    p.add_argument("--semiring", required=True, help="builtin name or JSON file")
    p.add_argument("--identity", required=True, help="identity text or file")
    p.add_argument(
        "--method",
        choices=("oracle", "syntactic", "both"),
        default="oracle",
        help="decision route (default: oracle)",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "delta",
        parents=[json_flag, mode_flag],
        help="compute the delta-set family of a term",
    )
    p.add_argument("--term", required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser(
        "witness",
        parents=[json_flag],
        help="check the facts of the n-th odd-cycle witness pair",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="run the brute-force check even beyond the default size limit",
    )
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser(
        "axiom-check",
        parents=[json_flag, mode_flag],
        help="check a candidate axiom against the structural conditions",
    )
    p.add_argument("--identity", required=True)
    p.set_defaults(func=cmd_axiom_check)

    p = sub.add_parser("derive", help="verify or search derivation chains")
    derive_sub = p.add_subparsers(dest="derive_command", required=True)

    p2 = derive_sub.add_parser(
        "verify", parents=[json_flag], help="replay a chain file against an axiom file"
    )
    p2.add_argument("--axioms", required=True)
    p2.add_argument("--chain", required=True)
    p2.set_defaults(func=cmd_derive_verify)

    p2 = derive_sub.add_parser(
        "search", parents=[json_flag], help="breadth-first search for a derivation"
    )
    p2.add_argument("--axioms", required=True)
    p2.add_argument("--goal", required=True)
    p2.add_argument("--max-depth", type=int, default=4)
    p2.add_argument("--max-words", type=int, default=8)
    p2.add_argument("--max-len", type=int, default=8)
    p2.add_argument("--max-image-words", type=int, default=1)
    p2.set_defaults(func=cmd_derive_search)

    p = sub.add_parser(
        "validate", parents=[json_flag], help="axiom-check a semiring file"
    )
    p.add_argument("--semiring", required=True, help="JSON file or builtin name")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "crossval",
        parents=[json_flag, mode_flag],
        help="compare a syntactic decider against the oracle on random identities",
    )
    p.add_argument("--semiring", required=True, help="builtin name")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--max-words", type=int, default=4)
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(func=cmd_crossval)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, SizeLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
