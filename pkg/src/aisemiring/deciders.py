"""Identity deciders: a brute-force oracle plus syntactic criteria.

The oracle works for any finite semiring by enumerating assignments. The
syntactic deciders settle identities in D2, S7, any zero-adjunction S^0
(relative to a decider for S), and S7_0 without evaluating a single
assignment; cross_validate checks the two routes against each other on
randomly generated identities.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

from .algebra import FiniteSemiring
from .errors import SizeLimitError
from .terms import (
    DELTA_VARIABLE_CAP,
    Identity,
    Term,
    components,
    content,
    delta_sets,
    filter_content_subset,
    format_word,
)

BRUTE_FORCE_CAP = 10**8


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decider, with a falsifying assignment or failure reason."""

    holds: bool
    witness: dict[str, str] | None = None
    reason: str | None = None
    details: dict | None = None

    def to_dict(self) -> dict:
        out: dict = {"holds": self.holds}
        if self.witness is not None:
            out["witness"] = dict(self.witness)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.details is not None:
            out["details"] = self.details
        return out


def holds_bruteforce(
    s: FiniteSemiring, ident: Identity, cap: int = BRUTE_FORCE_CAP
) -> Verdict:
    """Decide an identity by evaluating every assignment into s.

    Assignments are enumerated as a mixed-radix counter over the variables
    sorted by name (last variable least significant), digits running in
    element order, so the falsifying witness is deterministic.
    """
    variables = sorted(content(ident.lhs) | content(ident.rhs))
    n = s.size
    total = n ** len(variables)
    if total > cap:
        raise SizeLimitError(
            f"brute force needs {total} assignments, cap is {cap}"
        )
    if ident.lhs.word_set() == ident.rhs.word_set():
        return Verdict(True)
    index = {x: i for i, x in enumerate(variables)}
    lhs_words = [tuple(index[x] for x in w) for w in ident.lhs.words]
    rhs_words = [tuple(index[x] for x in w) for w in ident.rhs.words]
    add, mul = s.add, s.mul

    def eval_words(words, asg):
        total = -1
        for w in words:
            e = asg[w[0]]
            for ix in w[1:]:
                e = mul[e][asg[ix]]
            total = e if total < 0 else add[total][e]
        return total

    for asg in itertools.product(range(n), repeat=len(variables)):
        left = eval_words(lhs_words, asg)
        right = eval_words(rhs_words, asg)
        if left != right:
            witness = {x: s.elements[asg[index[x]]] for x in variables}
            return Verdict(
                False,
                witness=witness,
                reason=(
                    f"sides evaluate to {s.elements[left]} and {s.elements[right]}"
                ),
            )
    return Verdict(True)


def _component_label(base: Term, q) -> str:
    return f"{base} == {base} + {format_word(q)}"


def holds_d2(ident: Identity) -> Verdict:
    """Decide an identity in the 2-element distributive lattice.

    Each component u ≈ u+q holds exactly when some word of u has content
    within the content of q.
    """
    for base, q in components(ident):
        if not filter_content_subset(base, q):
            return Verdict(
                False,
                reason=(
                    f"component {_component_label(base, q)}: no word has "
                    f"content within c({format_word(q)})"
                ),
                details={"component": _component_label(base, q)},
            )
    return Verdict(True)


def holds_s7(ident: Identity, cap: int = DELTA_VARIABLE_CAP) -> Verdict:
    """Decide an identity in S7: contents must match and so must the
    delta-set families of the two sides."""
    cu, cv = content(ident.lhs), content(ident.rhs)
    if cu != cv:
        return Verdict(
            False,
            reason="content mismatch between the two sides",
            details={
                "only_lhs": sorted(cu - cv),
                "only_rhs": sorted(cv - cu),
            },
        )
    du = delta_sets(ident.lhs, cap)
    dv = delta_sets(ident.rhs, cap)
    if du != dv:
        separating = min(du ^ dv, key=lambda z: (len(z), sorted(z)))
        return Verdict(
            False,
            reason=(
                "delta-set mismatch, separating set "
                f"{{{','.join(sorted(separating))}}}"
            ),
            details={
                "separating": sorted(separating),
                "in_lhs": separating in du,
            },
        )
    return Verdict(True)


BaseDecider = Callable[[FiniteSemiring, Identity], Verdict]


def holds_s0_lift(s: FiniteSemiring, base_decider: BaseDecider, ident: Identity) -> Verdict:
    """Decide an identity in the zero-adjunction of s, given a decider for s.

    Each component u ≈ u+q holds in s^0 exactly when the words of u with
    content inside c(q) are nonempty and, writing D for that subset,
    D ≈ D+q holds in s.
    """
    for base, q in components(ident):
        cover = filter_content_subset(base, q)
        if not cover:
            return Verdict(
                False,
                reason=(
                    f"component {_component_label(base, q)}: no word has "
                    f"content within c({format_word(q)})"
                ),
                details={
                    "component": _component_label(base, q),
                    "clause": "empty-cover",
                },
            )
        reduced = Term(cover, base.commutative)
        sub = base_decider(s, Identity(reduced, reduced.add_word(q)))
        if not sub.holds:
            return Verdict(
                False,
                reason=(
                    f"component {_component_label(base, q)}: reduced identity "
                    f"{reduced} == {reduced} + {format_word(q)} fails in the base"
                ),
                details={
                    "component": _component_label(base, q),
                    "clause": "base",
                    "base": sub.to_dict(),
                },
            )
    return Verdict(True)


def holds_s7_0(
    ident: Identity, cap: int = DELTA_VARIABLE_CAP, use_shortcut: bool = True
) -> Verdict:
    """Decide an identity in S7_0 by the three-clause component criterion:
    nonempty content cover, cover content equal to c(q), and equal
    delta-set families of the cover with and without q.

    The shortcut path (component base has full content c(q) and empty
    delta family implies the component holds) is an optimization; both
    paths agree and use_shortcut=False forces the long one.
    """
    for base, q in components(ident):
        if (
            use_shortcut
            and content(base) == frozenset(q)
            and not delta_sets(base, cap)
        ):
            continue
        label = _component_label(base, q)
        cover = filter_content_subset(base, q)
        if not cover:
            return Verdict(
                False,
                reason=f"component {label}: no word has content within c({format_word(q)})",
                details={"component": label, "clause": "empty-cover"},
            )
        covered = Term(cover, base.commutative)
        if content(covered) != frozenset(q):
            missing = sorted(frozenset(q) - content(covered))
            return Verdict(
                False,
                reason=(
                    f"component {label}: cover misses variables "
                    f"{', '.join(missing)} of the added word"
                ),
                details={"component": label, "clause": "content", "missing": missing},
            )
        d_with = delta_sets(covered.add_word(q), cap)
        d_without = delta_sets(covered, cap)
        if d_without != d_with:
            separating = min(
                d_without ^ d_with, key=lambda z: (len(z), sorted(z))
            )
            return Verdict(
                False,
                reason=(
                    f"component {label}: delta-set mismatch on the cover, "
                    f"separating set {{{','.join(sorted(separating))}}}"
                ),
                details={
                    "component": label,
                    "clause": "delta",
                    "separating": sorted(separating),
                },
            )
    return Verdict(True)


def random_identity(
    rng: random.Random,
    max_vars: int,
    max_words: int,
    max_word_len: int,
    commutative: bool = False,
) -> Identity:
    """One random identity: uniform variable count, word count and lengths."""
    k = rng.randint(1, max_vars)
    alphabet = [f"x{i}" for i in range(1, k + 1)]

    def side() -> Term:
        count = rng.randint(1, max_words)
        words = [
            tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_word_len)))
            for _ in range(count)
        ]
        return Term(words, commutative)

    return Identity(side(), side())


@dataclass
class CrossValReport:
    """Agreement report between a syntactic decider and the oracle."""

    semiring: str
    samples: int
    seed: int
    bounds: dict
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> dict:
        return {
            "semiring": self.semiring,
            "samples": self.samples,
            "seed": self.seed,
            "bounds": self.bounds,
            "disagreements": self.disagreements,
        }


def cross_validate(
    s: FiniteSemiring,
    syntactic: Callable[[Identity], Verdict],
    samples: int,
    seed: int,
    max_vars: int = 4,
    max_words: int = 4,
    max_word_len: int = 4,
    commutative: bool = False,
    label: str = "",
    cap: int = BRUTE_FORCE_CAP,
) -> CrossValReport:
    """Generate seeded random identities and compare decider vs oracle.

    Any disagreement is recorded with the full identity; none is expected.
    """
    rng = random.Random(seed)
    report = CrossValReport(
        semiring=label or repr(s),
        samples=samples,
        seed=seed,
        bounds={
            "max_vars": max_vars,
            "max_words": max_words,
            "max_word_len": max_word_len,
            "commutative": commutative,
        },
    )
    for _ in range(samples):
        ident = random_identity(rng, max_vars, max_words, max_word_len, commutative)
        syn = syntactic(ident)
        oracle = holds_bruteforce(s, ident, cap=cap)
        if syn.holds != oracle.holds:
            report.disagreements.append(
                {
                    "identity": str(ident),
                    "syntactic": syn.holds,
                    "oracle": oracle.holds,
                    "oracle_witness": oracle.witness,
                }
            )
    return report
