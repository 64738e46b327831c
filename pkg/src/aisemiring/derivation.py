"""Equational derivations: one step rewrites a substituted axiom side
inside an optional multiplicative context plus an optional additive
remainder. Chains of steps are verified exactly; search enumerates a
bounded candidate space and reports absence as exhausted or truncated.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .parsing import parse_identity, parse_term
from .terms import Identity, Term, content, substitute, word_key

FORWARD = "forward"
BACKWARD = "backward"

# Enumeration guards for search_derivation; hitting one marks the outcome
# truncated rather than exhausted.
SUBSTITUTION_CAP = 20_000
KEEP_SUBSET_LIMIT = 4
IMAGE_POOL_CAP = 5_000


class AxiomSet:
    """Named identities, unique names, one shared commutativity mode."""

    def __init__(self, axioms: Iterable[tuple[str, Identity]] = ()):
        items = tuple(axioms)
        names = [name for name, _ in items]
        if len(set(names)) != len(names):
            raise ValueError("axiom names must be unique")
        modes = {ident.commutative for _, ident in items}
        if len(modes) > 1:
            raise ValueError("axioms must share one commutativity mode")
        self._items = items
        self._by_name = dict(items)

    def get(self, name: str) -> Identity:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"unknown axiom name: {name}") from None

    @property
    def commutative(self) -> bool:
        return self._items[0][1].commutative if self._items else False

    def __iter__(self) -> Iterator[tuple[str, Identity]]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)


@dataclass(frozen=True)
class DerivationStep:
    """One rewrite: the cited axiom side, substituted by phi, wrapped in
    the optional contexts, plus the optional remainder, must equal the
    current term; the result swaps in the other side."""

    axiom_name: str
    direction: str
    phi: Mapping[str, Term]
    left_context: Term | None = None
    right_context: Term | None = None
    remainder: Term | None = None

    def __post_init__(self):
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f"direction must be {FORWARD} or {BACKWARD}")


@dataclass(frozen=True)
class StepMismatch:
    """The step's reconstructed source did not match the current term."""

    expected: Term
    found: Term

    def __str__(self):
        return f"step source is {self.expected}, term is {self.found}"


def _wrap(t: Term, step: DerivationStep) -> Term:
    if step.left_context is not None:
        t = step.left_context * t
    if step.right_context is not None:
        t = t * step.right_context
    return t


def apply_step(t: Term, step: DerivationStep, sigma: AxiomSet) -> Term | StepMismatch:
    """Apply one derivation step to t, or report the mismatch.

    Raises ValueError for an unknown axiom, an uncovered substitution
    domain, or mixed commutativity modes.
    """
    ident = sigma.get(step.axiom_name)
    if step.direction == FORWARD:
        src, dst = ident.lhs, ident.rhs
    else:
        src, dst = ident.rhs, ident.lhs

    parts: list[Term] = [ident.lhs, *step.phi.values()]
    for ctx in (step.left_context, step.right_context, step.remainder):
        if ctx is not None:
            parts.append(ctx)
    for part in parts:
        if part.commutative != t.commutative:
            raise ValueError("step ingredients must share the term's commutativity mode")

    needed = content(src) | content(dst)
    missing = sorted(needed - set(step.phi))
    if missing:
        raise ValueError(
            f"substitution does not cover axiom variables: {', '.join(missing)}"
        )

    expected = _wrap(substitute(step.phi, src), step)
    result = _wrap(substitute(step.phi, dst), step)
    if step.remainder is not None:
        expected = expected + step.remainder
        result = result + step.remainder
    if expected != t:
        return StepMismatch(expected=expected, found=t)
    return result


@dataclass(frozen=True)
class DerivationChain:
    start: Term
    steps: tuple[DerivationStep, ...]
    end: Term


@dataclass(frozen=True)
class ChainVerdict:
    """failing_index counts steps; len(steps) marks the final comparison."""

    ok: bool
    failing_index: int | None = None
    reason: str | None = None


def verify_chain(chain: DerivationChain, sigma: AxiomSet) -> ChainVerdict:
    """Replay every step from chain.start and compare with chain.end."""
    t = chain.start
    for i, step in enumerate(chain.steps):
        out = apply_step(t, step, sigma)
        if isinstance(out, StepMismatch):
            return ChainVerdict(False, i, f"step {i}: {out}")
        t = out
    if t != chain.end:
        return ChainVerdict(
            False,
            len(chain.steps),
            f"derived term {t} differs from the declared end {chain.end}",
        )
    return ChainVerdict(True)


@dataclass(frozen=True)
class SearchBounds:
    max_depth: int = 4
    max_words: int = 8
    max_word_len: int = 8
    max_image_words: int = 1


@dataclass(frozen=True)
class SearchOutcome:
    """status is "found", "absent-exhausted" (candidate space fully
    explored) or "absent-truncated" (some bound cut the enumeration)."""

    status: str
    chain: DerivationChain | None
    explored: int
    bounds: SearchBounds

    @property
    def found(self) -> bool:
        return self.status == "found"


def _candidate_words(goal: Identity, bounds: SearchBounds) -> list:
    words = set()
    for side in (goal.lhs, goal.rhs):
        for w in side.words:
            for i in range(len(w)):
                top = min(i + bounds.max_word_len, len(w))
                for j in range(i + 1, top + 1):
                    words.add(w[i:j])
    return sorted(words, key=word_key)


def search_derivation(
    sigma: AxiomSet, goal: Identity, bounds: SearchBounds = SearchBounds()
) -> SearchOutcome:
    """Breadth-first search for a chain from goal.lhs to goal.rhs.

    Substitution images are terms of at most max_image_words words drawn
    from the contiguous subwords of the goal's own words; contexts are
    absent or single candidate words; remainders keep the unmatched words
    plus any subset of the matched ones. Every returned chain re-verifies.
    """
    mode = goal.commutative
    if sigma.commutative != mode and len(sigma) > 0:
        raise ValueError("axioms and goal must share the commutativity mode")

    start, target = goal.lhs, goal.rhs
    if start == target:
        return SearchOutcome("found", DerivationChain(start, (), target), 0, bounds)

    pool_words = _candidate_words(goal, bounds)
    truncated = False

    images: list[Term] = [Term.single(w, mode) for w in pool_words]
    for size in range(2, bounds.max_image_words + 1):
        for combo in itertools.combinations(pool_words, size):
            images.append(Term(combo, mode))
            if len(images) >= IMAGE_POOL_CAP:
                truncated = True
                break
        if len(images) >= IMAGE_POOL_CAP:
            break
    contexts: list[Term | None] = [None] + [Term.single(w, mode) for w in pool_words]

    def neighbors(t: Term) -> Iterator[tuple[DerivationStep, Term]]:
        nonlocal truncated
        t_words = t.word_set()
        for name, ident in sigma:
            for direction, src, dst in (
                (FORWARD, ident.lhs, ident.rhs),
                (BACKWARD, ident.rhs, ident.lhs),
            ):
                variables = sorted(content(src) | content(dst))
                assignments = itertools.product(images, repeat=len(variables))
                if len(images) ** len(variables) > SUBSTITUTION_CAP:
                    truncated = True
                    assignments = itertools.islice(assignments, SUBSTITUTION_CAP)
                for picks in assignments:
                    phi = dict(zip(variables, picks))
                    img_src = substitute(phi, src)
                    img_dst = substitute(phi, dst)
                    for p in contexts:
                        for q in contexts:
                            w = img_src
                            if p is not None:
                                w = p * w
                            if q is not None:
                                w = w * q
                            matched = w.word_set()
                            if not matched <= t_words:
                                continue
                            base = img_dst
                            if p is not None:
                                base = p * base
                            if q is not None:
                                base = base * q
                            rest = t_words - matched
                            if len(matched) > KEEP_SUBSET_LIMIT:
                                truncated = True
                                keep_space = [frozenset()]
                            else:
                                keep_space = [
                                    frozenset(c)
                                    for size in range(len(matched) + 1)
                                    for c in itertools.combinations(
                                        sorted(matched, key=word_key), size
                                    )
                                ]
                            for keep in keep_space:
                                r_words = rest | keep
                                remainder = Term(r_words, mode) if r_words else None
                                result = base + remainder if remainder else base
                                if len(result) > bounds.max_words or any(
                                    len(rw) > bounds.max_word_len for rw in result
                                ):
                                    truncated = True
                                    continue
                                step = DerivationStep(
                                    name, direction, phi, p, q, remainder
                                )
                                yield step, result

    visited = {start}
    frontier = [start]
    parents: dict[Term, tuple[Term, DerivationStep]] = {}
    explored = 0

    for _ in range(bounds.max_depth):
        next_frontier: list[Term] = []
        for t in frontier:
            explored += 1
            for step, result in neighbors(t):
                if result in visited:
                    continue
                visited.add(result)
                parents[result] = (t, step)
                if result == target:
                    steps = []
                    node = result
                    while node != start:
                        prev, s = parents[node]
                        steps.append(s)
                        node = prev
                    steps.reverse()
                    chain = DerivationChain(start, tuple(steps), target)
                    verdict = verify_chain(chain, sigma)
                    if not verdict.ok:
                        raise RuntimeError(
                            f"search produced an unverifiable chain: {verdict.reason}"
                        )
                    return SearchOutcome("found", chain, explored, bounds)
                next_frontier.append(result)
        frontier = next_frontier
        if not frontier:
            break

    if frontier:
        truncated = True
    status = "absent-truncated" if truncated else "absent-exhausted"
    return SearchOutcome(status, None, explored, bounds)


def axioms_to_json(sigma: AxiomSet) -> str:
    doc = {
        "commutative": sigma.commutative,
        "axioms": [
            {"name": name, "identity": str(ident)} for name, ident in sigma
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def axioms_from_json(text: str) -> AxiomSet:
    doc = json.loads(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("axioms"), list):
        raise ValueError('axioms document must be an object with an "axioms" list')
    commutative = bool(doc.get("commutative", False))
    axioms = []
    for entry in doc["axioms"]:
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("name"), str)
            or not isinstance(entry.get("identity"), str)
        ):
            raise ValueError('each axiom needs string "name" and "identity" fields')
        axioms.append((entry["name"], parse_identity(entry["identity"], commutative)))
    return AxiomSet(axioms)


def _term_or_none(value, commutative: bool) -> Term | None:
    if value is None:
        return None
    if not isinstance(value, str):
        raise ValueError("term fields must be strings or null")
    return parse_term(value, commutative)


def chain_to_json(chain: DerivationChain) -> str:
    def term_str(t: Term | None):
        return None if t is None else str(t)

    doc = {
        "commutative": chain.start.commutative,
        "start": str(chain.start),
        "steps": [
            {
                "axiom": s.axiom_name,
                "direction": s.direction,
                "phi": {x: str(s.phi[x]) for x in sorted(s.phi)},
                "left_context": term_str(s.left_context),
                "right_context": term_str(s.right_context),
                "remainder": term_str(s.remainder),
            }
            for s in chain.steps
        ],
        "end": str(chain.end),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def chain_from_json(text: str) -> DerivationChain:
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("chain document must be an object")
    for key in ("start", "end"):
        if not isinstance(doc.get(key), str):
            raise ValueError(f'chain document needs a string "{key}" field')
    if not isinstance(doc.get("steps"), list):
        raise ValueError('chain document needs a "steps" list')
    commutative = bool(doc.get("commutative", False))
    steps = []
    for entry in doc["steps"]:
        if not isinstance(entry, dict):
            raise ValueError("each step must be an object")
        if not isinstance(entry.get("axiom"), str):
            raise ValueError('each step needs a string "axiom" field')
        phi_doc = entry.get("phi")
        if not isinstance(phi_doc, dict):
            raise ValueError('each step needs a "phi" object')
        phi = {
            x: parse_term(img, commutative) if isinstance(img, str) else None
            for x, img in phi_doc.items()
        }
        if any(v is None for v in phi.values()):
            raise ValueError("phi images must be term strings")
        steps.append(
            DerivationStep(
                axiom_name=entry["axiom"],
                direction=entry.get("direction", FORWARD),
                phi=phi,
                left_context=_term_or_none(entry.get("left_context"), commutative),
                right_context=_term_or_none(entry.get("right_context"), commutative),
                remainder=_term_or_none(entry.get("remainder"), commutative),
            )
        )
    return DerivationChain(
        start=parse_term(doc["start"], commutative),
        steps=tuple(steps),
        end=parse_term(doc["end"], commutative),
    )
