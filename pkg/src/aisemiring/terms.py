"""Words, terms, identities and their statistics.

A word is a nonempty tuple of variable names (an element of the free
semigroup on the variable set); a term is a nonempty finite set of words.
Together with union as addition and elementwise concatenation as
multiplication, terms form the free additively idempotent semiring, which
is why identity checking below never needs explicit commutativity or
idempotency axioms for +.

A term fixes a commutativity convention at construction: in commutative
mode each word's letters are normalized to sorted order, so two words are
equal exactly when their letter multisets are.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .algebra import FiniteSemiring
from .errors import SizeLimitError

Word = tuple[str, ...]

DELTA_VARIABLE_CAP = 20


def word_key(w: Word):
    """Canonical word sort key: length first, then letters."""
    return (len(w), w)


def format_word(w: Word) -> str:
    """Render a word in the surface grammar, compressing letter runs to powers."""
    parts = []
    for letter, run in itertools.groupby(w):
        k = len(list(run))
        parts.append(letter if k == 1 else f"{letter}^{k}")
    return "*".join(parts)


class Term:
    """A nonempty finite set of nonempty words, with a fixed commutativity mode."""

    __slots__ = ("words", "commutative", "_hash")

    def __init__(self, words: Iterable[Word], commutative: bool = False):
        normalized = set()
        for w in words:
            w = tuple(w)
            if not w:
                raise ValueError("words must be nonempty")
            if commutative:
                w = tuple(sorted(w))
            normalized.add(w)
        if not normalized:
            raise ValueError("a term must contain at least one word")
        object.__setattr__(self, "words", tuple(sorted(normalized, key=word_key)))
        object.__setattr__(self, "commutative", commutative)
        object.__setattr__(self, "_hash", hash((self.words, commutative)))

    def __setattr__(self, name, value):
        raise AttributeError("Term is immutable")

    @classmethod
    def single(cls, w: Word, commutative: bool = False) -> "Term":
        return cls([w], commutative)

    def word_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    def __eq__(self, other):
        return (
            isinstance(other, Term)
            and self.commutative == other.commutative
            and self.words == other.words
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w: Word):
        if self.commutative:
            w = tuple(sorted(w))
        return w in self.word_set()

    def __add__(self, other: "Term") -> "Term":
        """Semiring addition: set union."""
        if self.commutative != other.commutative:
            raise ValueError("cannot combine terms with different commutativity modes")
        return Term(self.words + other.words, self.commutative)

    def __mul__(self, other: "Term") -> "Term":
        """Semiring multiplication: all pairwise concatenations."""
        if self.commutative != other.commutative:
            raise ValueError("cannot combine terms with different commutativity modes")
        return Term(
            (u + v for u in self.words for v in other.words), self.commutative
        )

    def add_word(self, w: Word) -> "Term":
        return self + Term.single(w, self.commutative)

    def __str__(self):
        return " + ".join(format_word(w) for w in self.words)

    def __repr__(self):
        mode = ", commutative=True" if self.commutative else ""
        return f"Term({str(self)!r}{mode})"


@dataclass(frozen=True)
class Identity:
    """A pair of terms read as lhs ≈ rhs."""

    lhs: Term
    rhs: Term

    def __post_init__(self):
        if self.lhs.commutative != self.rhs.commutative:
            raise ValueError("both sides of an identity must share the commutativity mode")

    @property
    def commutative(self) -> bool:
        return self.lhs.commutative

    def is_trivial(self) -> bool:
        """Trivial identities have equal sides as word sets."""
        return self.lhs == self.rhs

    def __str__(self):
        return f"{self.lhs} == {self.rhs}"


def content(t: Term | Word) -> frozenset[str]:
    """The set of variables occurring in a word or term."""
    if isinstance(t, Term):
        return frozenset(x for w in t.words for x in w)
    return frozenset(t)


def occurrences(x: str, w: Word) -> int:
    """Multiplicity of variable x in word w."""
    return w.count(x)


def word_length(w: Word) -> int:
    return len(w)


def is_linear(w: Word) -> bool:
    """True iff every variable of w occurs exactly once."""
    return len(set(w)) == len(w)


def delta_sets(
    u: Term, cap: int = DELTA_VARIABLE_CAP
) -> frozenset[frozenset[str]]:
    """Variable sets meeting every word of u in exactly one once-occurring letter.

    Enumerates the nonempty subsets Z of the term's content and keeps Z iff
    for every word w of u the intersection Z ∩ c(w) is a single variable x
    with exactly one occurrence in w. Enumeration is capped by the number
    of distinct variables.
    """
    variables = sorted(content(u))
    if len(variables) > cap:
        raise SizeLimitError(
            f"delta enumeration capped at {cap} variables, term has {len(variables)}"
        )
    words = [(frozenset(w), Counter(w)) for w in u.words]
    found = []
    for size in range(1, len(variables) + 1):
        for combo in itertools.combinations(variables, size):
            z = frozenset(combo)
            for wset, wcount in words:
                hit = z & wset
                if len(hit) != 1:
                    break
                if wcount[next(iter(hit))] != 1:
                    break
            else:
                found.append(z)
    return frozenset(found)


def filter_content_subset(u: Term, q: Word) -> frozenset[Word]:
    """Words of u whose content is contained in the content of q (may be empty)."""
    cq = frozenset(q)
    return frozenset(w for w in u.words if frozenset(w) <= cq)


def filter_content_avoiding(u: Term, z: Iterable[str]) -> frozenset[Word]:
    """Words of u whose content is disjoint from z (may be empty)."""
    zset = frozenset(z)
    return frozenset(w for w in u.words if not (frozenset(w) & zset))


Substitution = Mapping[str, Term]


def substitute(phi: Substitution, t: Term) -> Term:
    """Homomorphic image of t: each letter is replaced by its image term,
    a word maps to the set product of its letters' images, and the term
    to the union over its words."""
    missing = sorted(content(t) - set(phi))
    if missing:
        raise ValueError(f"substitution does not cover variables: {', '.join(missing)}")
    out: set[Word] = set()
    for w in t.words:
        images = [phi[x].words for x in w]
        for pick in itertools.product(*images):
            out.add(tuple(itertools.chain.from_iterable(pick)))
    return Term(out, t.commutative)


Assignment = Mapping[str, str]


def evaluate(t: Term, s: FiniteSemiring, asg: Assignment) -> str:
    """Evaluate a term in a finite semiring under a variable assignment.

    Words multiply left to right, the term folds addition over its words.
    Returns the element name.
    """
    missing = sorted(content(t) - set(asg))
    if missing:
        raise ValueError(f"assignment does not cover variables: {', '.join(missing)}")
    values = {x: s.index_of(asg[x]) for x in content(t)}
    add, mul = s.add, s.mul
    total = -1
    for w in t.words:
        e = values[w[0]]
        for x in w[1:]:
            e = mul[e][values[x]]
        total = e if total < 0 else add[total][e]
    return s.elements[total]


def components(ident: Identity) -> list[tuple[Term, Word]]:
    """Single-word-augmentation components of an identity.

    Yields (base, q) pairs so that ident holds exactly when every
    base ≈ base + q does: u ≈ u+v_j over the words of the rhs, then
    v ≈ v+u_i over the words of the lhs.
    """
    u, v = ident.lhs, ident.rhs
    return [(u, w) for w in v.words] + [(v, w) for w in u.words]


def decompose(ident: Identity) -> list[Identity]:
    """Split u ≈ v into the simpler identities u ≈ u+v_j and v ≈ v+u_i.

    Members where the added word already belongs to the base come out
    trivial (equal sides) but are still returned.
    """
    return [Identity(base, base.add_word(q)) for base, q in components(ident)]
