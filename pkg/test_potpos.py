"""
Tests for potential positivity
Criterion pairs, switch steps, the F2 decision procedure, rank-r schedules,
tree operators and the Lambda family
"""
import random
import sys

import pytest

# Add src to path for imports
sys.path.append('src')

from src.core.automorphisms import Automorphism, Substitute, apply, automorphism_to_json
from src.core.errors import CriterionNotSatisfied, NotMachineWord, RankMismatch
from src.core.words import CyclicWord, Word, abelianize, enumerate_cyclic, reduce
from src.machines.automaton import language, random_closed_path
from src.machines.builders import build_f2_lower, build_rank_machine
from src.potpos.criterion import (
    CANONICAL_PAIRS, SwitchOutcome, all_but_one, alternate_pair, criterion_move, goldstein_check,
    parse_pair, relabeling_for, relabelings, satisfies, switch_step,
)
from src.potpos.decision import Verdict, decide_pp2
from src.potpos.families import lambda_word, pumping_chain, pumping_word
from src.potpos.languages import TreeSpec
from src.potpos.positivize import positivize_rank_word
from src.potpos.tree import rn_member, rnl_member, tree_member, tree_survives


def cw(text, rank=2):
    return CyclicWord.parse(text, rank)


def assert_verified(decision, word):
    assert decision.verdict == Verdict.PP
    image = apply(decision.automorphism(), word)
    assert image.is_positive()
    assert image.to_text() == decision.image


def test_goldstein_check_examples():
    assert goldstein_check(cw("BaaBabAAAba"))[0] == parse_pair("Ba")
    assert goldstein_check(cw("abAB")) == []
    with pytest.raises(RankMismatch):
        goldstein_check(cw("abc", 3))


def test_alternate_pair():
    assert alternate_pair(parse_pair("Ba")) == parse_pair("Ab")
    for pair in CANONICAL_PAIRS:
        assert alternate_pair(alternate_pair(pair)) == pair


@pytest.mark.parametrize("pair", CANONICAL_PAIRS)
def test_relabeling_normalizes_pair(pair):
    sigma = relabeling_for(pair)
    x, y = pair
    assert apply(sigma, Word(2, (x,))) == Word.parse("B", 2)
    assert apply(sigma, Word(2, (y,))) == Word.parse("a", 2)


def test_relabelings_are_distinct():
    images = {apply(s, Word.parse("ab", 2)) for s in relabelings()}
    assert len(images) == 8


@pytest.mark.parametrize("pair", CANONICAL_PAIRS)
def test_criterion_move_is_conjugated_phi(pair):
    sigma = relabeling_for(pair)
    phi = Automorphism(2, (Substitute(2, Word.parse("ba", 2)),))
    conjugated = sigma.then(phi).then(sigma.inverse())
    for word in enumerate_cyclic(2, 5):
        assert apply(criterion_move(pair), word) == apply(conjugated, word)


def test_switch_step_outcomes():
    result = switch_step(cw("Baa"), parse_pair("Ba"))
    assert result.word == cw("Ba")
    assert result.outcome == SwitchOutcome.ALL_BUT_ONE

    result = switch_step(cw("BaBabAAAba"), parse_pair("Ba"))
    assert result.word == cw("BBabAAba")
    assert result.outcome == SwitchOutcome.FAIL

    result = switch_step(cw("BaaBabAAAba"), parse_pair("Ba"))
    assert result.word == cw("BaBabAAba")
    assert result.outcome == SwitchOutcome.SAME

    with pytest.raises(CriterionNotSatisfied):
        switch_step(cw("abAB"), parse_pair("Ba"))


def test_all_but_one():
    automorphism = all_but_one(cw("aB"))
    assert automorphism.describe() == ["a->ab"]
    assert apply(automorphism, cw("aB")) == cw("a")
    assert apply(all_but_one(cw("aBaB")), cw("aBaB")) == cw("aa")
    assert apply(all_but_one(cw("cAc", 3)), cw("cAc", 3)) == cw("cca", 3)
    assert all_but_one(cw("abAB")) is None
    assert all_but_one(cw("ab")) is None


def test_decide_examples():
    decision = decide_pp2(cw("aB"))
    assert decision.witness == [{"sub": "a->ab"}]
    assert decision.image == "a"
    assert decision.steps_used == 0

    assert decide_pp2(cw("aBaB")).image == "aa"

    decision = decide_pp2(cw("A"))
    assert decision.witness == [{"invert": "a"}]
    assert decision.image == "a"


def test_decide_not_pp():
    decision = decide_pp2(cw("abAB"))
    assert decision.verdict == Verdict.NOT_PP
    assert decision.certificate.reason == "criterion"
    assert decision.certificate.step == 0
    assert decision.witness is None


def test_decide_empty_word_is_positive():
    empty = decide_pp2(CyclicWord(2, ()))
    assert empty.verdict == Verdict.PP
    assert empty.witness == []
    assert empty.image == ""
    assert empty.certificate is None
    assert decide_pp2(Word.parse("abBA", 2)).verdict == Verdict.PP


def test_decide_accepts_linear_words():
    assert decide_pp2(Word.parse("aBa", 2)) == decide_pp2(cw("aBa"))
    decision = decide_pp2(Word.parse("baBB", 2))
    assert decision.word == "aB"
    assert decision.image == "a"
    assert apply(all_but_one(Word.parse("baBB", 2)), cw("aB")) == cw("a")
    assert decide_pp2(Word.parse("babABB", 2)).verdict == Verdict.NOT_PP


def test_decide_lambda_family():
    word = cw("BaaBabAAAba")
    decision = decide_pp2(word)
    assert_verified(decision, word)
    assert decision.image == "aabbb"
    assert len(decision.witness) == 5
    assert apply(pumping_chain(1, 2), word) == cw("abbaa")
    word = pumping_word(2, 2)
    assert_verified(decide_pp2(word), word)
    assert decide_pp2(cw("BaBabAAAba")).verdict == Verdict.NOT_PP


def test_decide_rejects_other_ranks():
    with pytest.raises(RankMismatch):
        decide_pp2(cw("abc", 3))


def test_decision_json_shape():
    payload = decide_pp2(cw("aB")).dict()
    assert payload["verdict"] == "PP"
    assert payload["witness"] == [{"sub": "a->ab"}]
    assert payload["certificate"] is None


@pytest.mark.parametrize("length", range(1, 13))
def test_lower_bound_words_are_pp(length):
    for word in language(build_f2_lower(), length):
        assert_verified(decide_pp2(word), word)


@pytest.mark.parametrize("length", range(2, 11))
def test_commutator_words_are_not_pp(length):
    for word in enumerate_cyclic(2, length):
        if not any(abelianize(word)):
            assert decide_pp2(word).verdict == Verdict.NOT_PP


@pytest.mark.parametrize("length", range(1, 9))
def test_verdicts_are_invariant_under_relabeling_inversion_and_conjugation(length):
    for word in enumerate_cyclic(2, length):
        verdict = decide_pp2(word).verdict
        for sigma in relabelings():
            assert decide_pp2(apply(sigma, word)).verdict == verdict, (word, sigma)
        assert decide_pp2(word.inverse()).verdict == verdict, word
        for code in range(4):
            conjugate = reduce(2, (code,) + word.letters + (code ^ 1,))
            assert decide_pp2(conjugate).verdict == verdict, (word, code)


@pytest.mark.parametrize("length", range(1, 7))
def test_pp_words_satisfy_the_criterion(length):
    for word in enumerate_cyclic(2, length):
        if decide_pp2(word).verdict == Verdict.PP:
            assert goldstein_check(word)


def test_positivize_rank_three_example():
    word = cw("aBc", 3)
    automorphism = positivize_rank_word(3, word)
    assert apply(automorphism, word).is_positive()


@pytest.mark.parametrize("r", [3, 4])
def test_positivize_random_machine_words(r):
    machine = build_rank_machine(r)
    rng = random.Random(1000 + r)
    words = []
    while len(words) < 100:
        path = random_closed_path(machine, rng.randint(1, 20), rng)
        if path is not None:
            words.append(machine.path_word(path))
    for word in words:
        assert apply(positivize_rank_word(r, word), word).is_positive(), word


@pytest.mark.parametrize("r, text", [(3, "C"), (3, "BB"), (3, "CCa"), (4, "B"), (4, "BBB"), (4, "D")])
def test_positivize_single_signed_words(r, text):
    word = cw(text, r)
    automorphism = positivize_rank_word(r, word)
    assert apply(automorphism, word).is_positive()
    assert all(kind == "invert" for move in automorphism_to_json(automorphism) for kind in move)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_positivize_short_machine_words_exhaustively(r):
    machine = build_rank_machine(r)
    for length in range(1, 7 if r < 5 else 6):
        for word in language(machine, length):
            assert apply(positivize_rank_word(r, word), word).is_positive(), word


def test_positivize_accepts_linear_words():
    word = Word.parse("caBcC", 3)
    automorphism = positivize_rank_word(3, word)
    assert apply(automorphism, cw("caB", 3)).is_positive()


def test_positivize_rejects_non_machine_words():
    with pytest.raises(NotMachineWord):
        positivize_rank_word(3, cw("abAB", 3))
    with pytest.raises(RankMismatch):
        positivize_rank_word(3, cw("ab"))


def test_tree_membership():
    assert tree_member("R", cw("Baa"))
    assert not tree_member("R", cw("Ba"))
    assert tree_member("", cw("Ba"))
    assert rn_member(0, cw("Ba"))
    assert rnl_member(0, cw("BabAAba"))
    assert not rnl_member(0, cw("BabAAAba"))
    assert TreeSpec("RL").contains(cw("Baab")) == rnl_member(1, cw("Baab"))


@pytest.mark.parametrize("length", range(1, 11))
def test_tree_children_are_subsets_of_their_parent(length):
    words = list(enumerate_cyclic(2, length))
    paths = [""]
    for _ in range(4):
        for path in paths:
            parent = {w for w in words if tree_member(path, w)}
            for step in "RL":
                assert {w for w in words if tree_member(path + step, w)} <= parent, path + step
        paths = [path + step for path in paths for step in "RL"]


def test_tree_survives():
    assert tree_survives(cw("Baa"), 1)
    assert not tree_survives(cw("abAB"), 0)
    assert tree_survives(cw("ab"), 4)


def test_lambda_words():
    assert lambda_word([2], 3) == cw("BaaBabAAAba")
    assert pumping_word(1, 2) == cw("BaaBabAAAba")


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_pumping_chain_positivizes_pumping_words(k, p):
    assert apply(pumping_chain(k, p), pumping_word(k, p)) == cw("abbaa")


def main():
    """Run the potential-positivity tests"""
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
