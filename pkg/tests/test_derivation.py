import random

import pytest

from aisemiring import (
    AxiomSet,
    DerivationChain,
    DerivationStep,
    Identity,
    SearchBounds,
    StepMismatch,
    Term,
    apply_step,
    content,
    axioms_from_json,
    axioms_to_json,
    builtin,
    chain_from_json,
    chain_to_json,
    holds_bruteforce,
    parse_identity,
    parse_term,
    random_identity,
    search_derivation,
    substitute,
    verify_chain,
)

SIGMA = AxiomSet([("ax1", parse_identity("x == x + x*x"))])


def step(axiom="ax1", direction="forward", phi=None, **kw):
    return DerivationStep(axiom, direction, phi or {"x": parse_term("y*z")}, **kw)


class TestApplyStep:
    def test_plain_application(self):
        out = apply_step(parse_term("y*z"), step(), SIGMA)
        assert out == parse_term("y*z + y*z*y*z")

    def test_word_order_matters_without_commutativity(self):
        out = apply_step(parse_term("z*y"), step(), SIGMA)
        assert isinstance(out, StepMismatch)
        assert out.expected == parse_term("y*z")
        assert out.found == parse_term("z*y")

    def test_remainder_carried_through(self):
        out = apply_step(
            parse_term("w + y*z"),
            step(remainder=parse_term("w")),
            SIGMA,
        )
        assert out == parse_term("w + y*z + y*z*y*z")

    def test_backward_direction(self):
        out = apply_step(parse_term("y*z + y*z*y*z"), step(direction="backward"), SIGMA)
        assert out == parse_term("y*z")

    def test_unknown_axiom(self):
        with pytest.raises(ValueError, match="unknown axiom"):
            apply_step(parse_term("x"), step(axiom="nope"), SIGMA)

    def test_uncovered_substitution(self):
        bad = DerivationStep("ax1", "forward", {"y": parse_term("z")})
        with pytest.raises(ValueError, match="does not cover"):
            apply_step(parse_term("x"), bad, SIGMA)

    def test_bad_direction(self):
        with pytest.raises(ValueError, match="direction"):
            step(direction="sideways")

    def test_mode_mismatch(self):
        with pytest.raises(ValueError, match="commutativity"):
            apply_step(Term([("y", "z")], commutative=True), step(), SIGMA)

    def test_context_presence_shapes(self):
        # the four presence combinations of P and Q give the documented sources
        phi = {"x": parse_term("b")}
        p, q = parse_term("a"), parse_term("c")
        shapes = {
            (None, None): "b",
            (p, None): "a*b",
            (None, q): "b*c",
            (p, q): "a*b*c",
        }
        for (left, right), source in shapes.items():
            s = step(phi=phi, left_context=left, right_context=right)
            out = apply_step(parse_term(source), s, SIGMA)
            assert not isinstance(out, StepMismatch), source
            assert parse_term(source).words[0] in out


class TestVerifyChain:
    def two_step_chain(self):
        s1 = DerivationStep("ax1", "forward", {"x": parse_term("x*y")})
        s2 = DerivationStep(
            "ax1",
            "forward",
            {"x": parse_term("x*y*x*y")},
            remainder=parse_term("x*y"),
        )
        return DerivationChain(
            parse_term("x*y"),
            (s1, s2),
            parse_term("x*y + x*y*x*y + x*y*x*y*x*y*x*y"),
        )

    def test_two_step_chain_verifies(self):
        assert verify_chain(self.two_step_chain(), SIGMA).ok

    def test_wrong_end_rejected_at_final_comparison(self):
        chain = self.two_step_chain()
        bad = DerivationChain(chain.start, chain.steps, parse_term("y*z"))
        verdict = verify_chain(bad, SIGMA)
        assert not verdict.ok
        assert verdict.failing_index == len(chain.steps)

    def test_broken_middle_step_named(self):
        chain = self.two_step_chain()
        wrong = DerivationStep("ax1", "forward", {"x": parse_term("z")})
        bad = DerivationChain(chain.start, (chain.steps[0], wrong), chain.end)
        verdict = verify_chain(bad, SIGMA)
        assert not verdict.ok
        assert verdict.failing_index == 1

    def test_empty_chain(self):
        t = parse_term("x*y")
        assert verify_chain(DerivationChain(t, (), t), SIGMA).ok
        assert not verify_chain(DerivationChain(t, (), parse_term("x")), SIGMA).ok


class TestSearch:
    def test_depth_one_derivation_found(self):
        goal = parse_identity("x*y == x*y + x*y*x*y")
        outcome = search_derivation(SIGMA, goal)
        assert outcome.found
        assert len(outcome.chain.steps) == 1
        assert verify_chain(outcome.chain, SIGMA).ok

    def test_empty_axioms_exhausts(self):
        goal = parse_identity("x*y == x*y + x*y*x*y")
        outcome = search_derivation(AxiomSet(), goal)
        assert outcome.status == "absent-exhausted"
        assert outcome.chain is None

    def test_trivial_axiom_closes_immediately(self):
        sigma = AxiomSet([("comm", parse_identity("x + y == y + x"))])
        goal = parse_identity("x*y == x*y + x*y*x*y")
        assert search_derivation(sigma, goal).status == "absent-exhausted"

    def test_depth_bound_reports_truncation(self):
        goal = parse_identity(
            "x*y == x*y + x*y*x*y + x*y*x*y*x*y*x*y"
        )
        tight = SearchBounds(max_depth=1, max_words=8, max_word_len=8)
        outcome = search_derivation(SIGMA, goal, tight)
        assert outcome.status == "absent-truncated"
        wide = SearchBounds(max_depth=2, max_words=8, max_word_len=8)
        assert search_derivation(SIGMA, goal, wide).found

    def test_trivial_goal(self):
        goal = parse_identity("x*y == x*y")
        outcome = search_derivation(SIGMA, goal)
        assert outcome.found and outcome.chain.steps == ()

    def test_found_chains_always_verify(self):
        rng = random.Random(2026)
        sigma = AxiomSet(
            [
                ("sq", parse_identity("x == x + x*x")),
                ("dup", parse_identity("x + y == x + y + x*y")),
            ]
        )
        goals = [random_identity(rng, 2, 2, 2) for _ in range(10)]
        goals.append(parse_identity("x1*x2 == x1*x2 + x1*x2*x1*x2"))
        goals.append(parse_identity("x1 + x2 == x1 + x2 + x1*x2"))
        hits = 0
        for ident in goals:
            outcome = search_derivation(
                sigma, ident, SearchBounds(max_depth=2, max_words=4, max_word_len=4)
            )
            if outcome.found:
                hits += 1
                assert verify_chain(outcome.chain, sigma).ok
        assert hits >= 2


class TestSemanticSoundness:
    def test_verified_steps_preserve_value(self):
        # a small sample; the acceptance suite runs the full-size one
        rng = random.Random(515253)
        algebras = (builtin("S7"), builtin("D2"))
        for _ in range(100):
            axiom = random_identity(rng, 2, 2, 2)
            sigma = AxiomSet([("ax", axiom)])
            variables = sorted(content(axiom.lhs) | content(axiom.rhs))
            phi = {
                x: Term(
                    [
                        tuple(
                            rng.choice(("a", "b"))
                            for _ in range(rng.randint(1, 2))
                        )
                        for _ in range(rng.randint(1, 2))
                    ]
                )
                for x in variables
            }
            left = Term([("c",)]) if rng.random() < 0.5 else None
            right = Term([("d",)]) if rng.random() < 0.5 else None
            remainder = Term([("a", "c")]) if rng.random() < 0.5 else None
            source = substitute(phi, axiom.lhs)
            if left is not None:
                source = left * source
            if right is not None:
                source = source * right
            if remainder is not None:
                source = source + remainder
            step = DerivationStep("ax", "forward", phi, left, right, remainder)
            result = apply_step(source, step, sigma)
            assert not isinstance(result, StepMismatch)
            for s in algebras:
                if holds_bruteforce(s, axiom).holds:
                    moved = Identity(source, result)
                    assert holds_bruteforce(s, moved).holds, str(moved)


class TestSerialization:
    def test_chain_round_trip(self):
        chain = TestVerifyChain().two_step_chain()
        assert chain_from_json(chain_to_json(chain)) == chain

    def test_chain_with_contexts_round_trips_and_verifies(self):
        s = DerivationStep(
            "ax1",
            "backward",
            {"x": parse_term("b")},
            left_context=parse_term("a"),
            right_context=parse_term("c"),
            remainder=parse_term("w + v"),
        )
        chain = DerivationChain(
            parse_term("a*b*c + a*b*b*c + w + v"),
            (s,),
            parse_term("a*b*c + w + v"),
        )
        assert verify_chain(chain, SIGMA).ok
        assert chain_from_json(chain_to_json(chain)) == chain

    def test_axioms_round_trip(self):
        assert list(axioms_from_json(axioms_to_json(SIGMA))) == list(SIGMA)

    def test_commutative_flag_respected(self):
        text = axioms_to_json(
            AxiomSet([("c", parse_identity("x*y == y*x", commutative=True))])
        )
        sigma = axioms_from_json(text)
        assert sigma.commutative
        assert sigma.get("c").is_trivial()

    def test_malformed_documents(self):
        for bad in (
            "[]",
            "{}",
            '{"axioms": [{"name": 1, "identity": "x == x"}]}',
            '{"axioms": [{"name": "a"}]}',
        ):
            with pytest.raises(ValueError):
                axioms_from_json(bad)
        for bad in (
            "[]",
            '{"start": "x", "steps": [], "end": 3}',
            '{"start": "x", "steps": [{"axiom": "a"}], "end": "x"}',
            '{"start": "x", "steps": [{"axiom": "a", "phi": {"x": 5}}], "end": "x"}',
        ):
            with pytest.raises(ValueError):
                chain_from_json(bad)

    def test_duplicate_names_rejected(self):
        ident = parse_identity("x == x")
        with pytest.raises(ValueError, match="unique"):
            AxiomSet([("a", ident), ("a", ident)])

    def test_mixed_modes_rejected(self):
        with pytest.raises(ValueError, match="mode"):
            AxiomSet(
                [
                    ("a", parse_identity("x == x")),
                    ("b", parse_identity("x == x", commutative=True)),
                ]
            )
