"""Finite additively idempotent semirings as Cayley tables.

Carriers are tiny (a handful of elements), so every law is checked by
exhaustive scan and isomorphism is decided by permutation search.
Elements are referenced by index internally and by name at the interface;
tables are row-major with the row as the left operand.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import SizeLimitError

ISO_CARRIER_CAP = 8


@dataclass(frozen=True)
class FiniteSemiring:
    """A finite semiring given by its element names and operation tables."""

    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_shape(self.elements, self.add, self.mul)

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise ValueError(f"unknown element {name!r}") from None

    def add_named(self, a: str, b: str) -> str:
        return self.elements[self.add[self.index_of(a)][self.index_of(b)]]

    def mul_named(self, a: str, b: str) -> str:
        return self.elements[self.mul[self.index_of(a)][self.index_of(b)]]

    def __repr__(self):
        return f"FiniteSemiring({list(self.elements)!r})"


@dataclass(frozen=True)
class AxiomViolation:
    """First violated ai-semiring axiom, with a witnessing element tuple."""

    law: str
    witness: tuple[str, ...]

    def __str__(self):
        return f"{self.law} fails at ({', '.join(self.witness)})"


@dataclass(frozen=True)
class Congruence:
    """A partition of the carrier compatible with both operations."""

    partition: tuple[tuple[int, ...], ...]

    def block_of(self, i: int) -> int:
        for b, block in enumerate(self.partition):
            if i in block:
                return b
        raise ValueError(f"index {i} not covered by partition")


@dataclass(frozen=True)
class CongruenceViolation:
    """Compatibility counterexample: a ~ a' and b ~ b' but op(a,b) !~ op(a',b')."""

    operation: str
    witness: tuple[str, str, str, str]

    def __str__(self):
        a, a2, b, b2 = self.witness
        return (
            f"{self.operation} incompatible: {a}~{a2} and {b}~{b2} "
            f"but results land in different blocks"
        )


def _check_shape(elements, add, mul):
    n = len(elements)
    if n == 0:
        raise ValueError("carrier must be nonempty")
    if len(set(elements)) != n:
        raise ValueError("element names must be distinct")
    for label, table in (("add", add), ("mul", mul)):
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"{label} table is not {n}x{n}")
        for row in table:
            for cell in row:
                if not isinstance(cell, int) or not 0 <= cell < n:
                    raise ValueError(f"{label} table cell {cell!r} is not a valid index")


def validate_ai_semiring(elements, add, mul) -> FiniteSemiring | AxiomViolation:
    """Check the ai-semiring axioms by full scan.

    Returns the validated algebra, or an AxiomViolation naming the first
    failed law in a fixed scan order. Malformed tables (wrong shape, bad
    indices) raise ValueError instead: structural errors are not axiom
    violations.
    """
    elements = tuple(elements)
    add = tuple(tuple(row) for row in add)
    mul = tuple(tuple(row) for row in mul)
    _check_shape(elements, add, mul)
    n = len(elements)
    rng = range(n)

    for a in rng:
        if add[a][a] != a:
            return AxiomViolation("additive idempotency", (elements[a],))
    for a, b in itertools.product(rng, repeat=2):
        if add[a][b] != add[b][a]:
            return AxiomViolation("additive commutativity", (elements[a], elements[b]))
    for a, b, c in itertools.product(rng, repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return AxiomViolation(
                "additive associativity", (elements[a], elements[b], elements[c])
            )
    for a, b, c in itertools.product(rng, repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return AxiomViolation(
                "multiplicative associativity", (elements[a], elements[b], elements[c])
            )
    for a, b, c in itertools.product(rng, repeat=3):
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return AxiomViolation(
                "left distributivity", (elements[a], elements[b], elements[c])
            )
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            return AxiomViolation(
                "right distributivity", (elements[a], elements[b], elements[c])
            )
    return FiniteSemiring(elements, add, mul)


def adjoin_zero(s: FiniteSemiring, zero_name: str) -> FiniteSemiring:
    """Adjoin a fresh element that is an additive identity and multiplicative zero."""
    if zero_name in s.elements:
        raise ValueError(f"element name {zero_name!r} already in carrier")
    n = s.size
    elements = s.elements + (zero_name,)
    add = tuple(
        tuple(s.add[i] + (i,)) for i in range(n)
    ) + (tuple(range(n)) + (n,),)
    mul = tuple(
        tuple(s.mul[i] + (n,)) for i in range(n)
    ) + ((n,) * (n + 1),)
    result = validate_ai_semiring(elements, add, mul)
    assert isinstance(result, FiniteSemiring), result
    return result


def _normalize_partition(s: FiniteSemiring, partition) -> tuple[tuple[int, ...], ...]:
    blocks = []
    for block in partition:
        indices = []
        for member in block:
            if isinstance(member, str):
                indices.append(s.index_of(member))
            else:
                indices.append(int(member))
        blocks.append(tuple(sorted(indices)))
    blocks.sort()
    seen = [i for block in blocks for i in block]
    if sorted(seen) != list(range(s.size)) or any(not b for b in blocks):
        raise ValueError("blocks must partition the carrier exactly")
    return tuple(blocks)


def validate_congruence(s: FiniteSemiring, partition) -> Congruence | CongruenceViolation:
    """Check compatibility of a carrier partition with both operations.

    Blocks may be given as element names or indices. Non-partitions raise
    ValueError; an incompatible partition yields a CongruenceViolation with
    a counterexample quadruple.
    """
    blocks = _normalize_partition(s, partition)
    block_of = {}
    for b, block in enumerate(blocks):
        for i in block:
            block_of[i] = b
    names = s.elements
    for label, table in (("addition", s.add), ("multiplication", s.mul)):
        for block_a in blocks:
            for a, a2 in itertools.product(block_a, repeat=2):
                for block_b in blocks:
                    for b, b2 in itertools.product(block_b, repeat=2):
                        if block_of[table[a][b]] != block_of[table[a2][b2]]:
                            return CongruenceViolation(
                                label, (names[a], names[a2], names[b], names[b2])
                            )
    return Congruence(blocks)


def quotient(s: FiniteSemiring, rho: Congruence) -> FiniteSemiring:
    """Quotient semiring: blocks become elements, named by joining member names."""
    blocks = rho.partition
    block_of = {}
    for b, block in enumerate(blocks):
        for i in block:
            block_of[i] = b
    elements = tuple("|".join(s.elements[i] for i in block) for block in blocks)
    k = len(blocks)
    add = tuple(
        tuple(block_of[s.add[blocks[a][0]][blocks[b][0]]] for b in range(k))
        for a in range(k)
    )
    mul = tuple(
        tuple(block_of[s.mul[blocks[a][0]][blocks[b][0]]] for b in range(k))
        for a in range(k)
    )
    result = validate_ai_semiring(elements, add, mul)
    assert isinstance(result, FiniteSemiring), result
    return result


def find_isomorphism(s1: FiniteSemiring, s2: FiniteSemiring, cap: int = ISO_CARRIER_CAP):
    """Search all carrier bijections; return one transporting both tables, or None."""
    if s1.size != s2.size:
        return None
    n = s1.size
    if n > cap:
        raise SizeLimitError(f"isomorphism search capped at carrier size {cap}, got {n}")
    rng = range(n)
    for perm in itertools.permutations(rng):
        if all(
            perm[s1.add[i][j]] == s2.add[perm[i]][perm[j]]
            and perm[s1.mul[i][j]] == s2.mul[perm[i]][perm[j]]
            for i in rng
            for j in rng
        ):
            return {s1.elements[i]: s2.elements[perm[i]] for i in rng}
    return None


def is_isomorphic(s1: FiniteSemiring, s2: FiniteSemiring, cap: int = ISO_CARRIER_CAP) -> bool:
    return find_isomorphism(s1, s2, cap=cap) is not None


_S7_ELEMENTS = ("1", "a", "0")
_S7_ADD = (
    (0, 2, 2),
    (2, 1, 2),
    (2, 2, 2),
)
_S7_MUL = (
    (0, 1, 2),
    (1, 2, 2),
    (2, 2, 2),
)

_S7_0_ELEMENTS = ("1", "a", "0", "∞")
_S7_0_ADD = (
    (0, 2, 2, 0),
    (2, 1, 2, 1),
    (2, 2, 2, 2),
    (0, 1, 2, 3),
)
_S7_0_MUL = (
    (0, 1, 2, 3),
    (1, 2, 2, 3),
    (2, 2, 2, 3),
    (3, 3, 3, 3),
)

BUILTIN_NAMES = ("S7", "S7_0", "D2", "trivial")


def builtin(name: str) -> FiniteSemiring:
    """Return a named built-in algebra: S7, S7_0, D2 or trivial."""
    if name == "S7":
        tables = (_S7_ELEMENTS, _S7_ADD, _S7_MUL)
    elif name == "S7_0":
        tables = (_S7_0_ELEMENTS, _S7_0_ADD, _S7_0_MUL)
    elif name == "D2":
        tables = (("0", "1"), ((0, 1), (1, 1)), ((0, 0), (0, 1)))
    elif name == "trivial":
        tables = (("1",), ((0,),), ((0,),))
    else:
        raise ValueError(f"unknown builtin semiring {name!r}; known: {', '.join(BUILTIN_NAMES)}")
    result = validate_ai_semiring(*tables)
    assert isinstance(result, FiniteSemiring), result
    return result


def semiring_to_json(s: FiniteSemiring) -> str:
    """Canonical JSON text for a semiring; byte-stable for a fixed element order."""
    doc = {
        "elements": list(s.elements),
        "add": [[s.elements[c] for c in row] for row in s.add],
        "mul": [[s.elements[c] for c in row] for row in s.mul],
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def tables_from_json(text: str):
    """Parse the semiring file format into (elements, add, mul) index tables.

    Structural problems (missing fields, non-square tables, unknown names)
    raise ValueError; no axiom checking happens here.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("semiring file must be a JSON object")
    for key in ("elements", "add", "mul"):
        if key not in doc:
            raise ValueError(f"semiring file missing field {key!r}")
    elements = doc["elements"]
    if (
        not isinstance(elements, list)
        or not elements
        or any(not isinstance(e, str) for e in elements)
    ):
        raise ValueError("'elements' must be a nonempty array of strings")
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("element names must be distinct")

    def table(key):
        rows = doc[key]
        if not isinstance(rows, list) or len(rows) != len(elements):
            raise ValueError(f"{key!r} must be a {len(elements)}x{len(elements)} array")
        out = []
        for row in rows:
            if not isinstance(row, list) or len(row) != len(elements):
                raise ValueError(f"{key!r} must be a {len(elements)}x{len(elements)} array")
            for cell in row:
                if cell not in index:
                    raise ValueError(f"{key!r} entry {cell!r} is not an element name")
            out.append(tuple(index[cell] for cell in row))
        return tuple(out)

    return tuple(elements), table("add"), table("mul")


def semiring_from_json(text: str) -> FiniteSemiring | AxiomViolation:
    """Parse and axiom-check a semiring file."""
    elements, add, mul = tables_from_json(text)
    return validate_ai_semiring(elements, add, mul)
