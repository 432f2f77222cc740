"""
Tests for automata: builders, languages, property checks and the text format
"""
import random
import sys
from functools import lru_cache

import pytest

# Add src to path for imports
sys.path.append('src')

from src.core.automorphisms import apply
from src.core.errors import (
    AutomatonParseError, DanglingEdge, InvalidCriterionPair, NotMixing, NotReduced, PPGrowthError,
    RankTooSmall,
)
from src.core.words import CyclicWord, enumerate_cyclic, parse_codes
from src.machines.automaton import (
    Automaton, accepts, closed_paths, count_closed_paths, language, random_closed_path,
    read_automaton, write_automaton,
)
from src.machines.builders import (
    RANK_VARIANTS, build_f2_lower, build_from_spec, build_goldstein, build_rank_machine, build_Rn, build_RnL,
)
from src.machines.properties import (
    check_mixing, check_one_to_constant, check_reduced, verify_properties,
)
from src.potpos.criterion import CANONICAL_PAIRS, is_in_goldstein, satisfies
from src.potpos.languages import TreeSpec, rn_forbidden
from src.potpos.tree import PHI, rn_member, rnl_member, tree_language


def machine(labels, edges, rank=2):
    return Automaton(rank=rank, labels=tuple(parse_codes(labels, rank)), edges=frozenset(edges))


@lru_cache(maxsize=None)
def cyclic_words(length):
    return tuple(enumerate_cyclic(2, length))


def words(texts):
    return {CyclicWord.parse(t, 2) for t in texts}


def test_f2_lower_small_lengths():
    lb = build_f2_lower()
    assert lb.size == 5
    assert language(lb, 1) == words(["a", "b", "A"])
    assert count_closed_paths(lb, 2) == 8
    assert count_closed_paths(lb, 0) == 0


@pytest.mark.parametrize("length", range(1, 13))
def test_f2_lower_is_r_infinity(length):
    forbidden = rn_forbidden(None)
    expected = {w for w in enumerate_cyclic(2, length) if forbidden.contains(w)}
    assert language(build_f2_lower(), length) == expected


@pytest.mark.parametrize("length", range(1, 8))
def test_goldstein_language(length):
    expected = set(tree_language("", length))
    assert language(build_goldstein(), length) == expected
    assert language(build_Rn(0), length) == expected


@pytest.mark.parametrize("pair", CANONICAL_PAIRS)
def test_goldstein_machine_for_every_pair(pair):
    automaton = build_goldstein(*pair)
    for length in range(1, 7):
        expected = {w for w in enumerate_cyclic(2, length) if satisfies(w, pair)}
        assert language(automaton, length) == expected


def test_goldstein_rejects_bad_pairs():
    with pytest.raises(InvalidCriterionPair):
        build_goldstein("a", "A")
    with pytest.raises(InvalidCriterionPair):
        build_goldstein("ab", "a")


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_rn_machine_matches_definition(n):
    automaton = build_Rn(n)
    forbidden = rn_forbidden(n)
    tree = TreeSpec("R" * n)
    for length in range(1, 11):
        built = language(automaton, length)
        assert built == {w for w in cyclic_words(length) if rn_member(n, w)}
        assert built == {w for w in cyclic_words(length) if forbidden.contains(w)}
        assert built == {w for w in cyclic_words(length) if tree.contains(w)}


@pytest.mark.parametrize("length", range(1, 11))
def test_rn_languages_nest_down_to_the_lower_bound_machine(length):
    layers = [language(build_Rn(n), length) for n in range(length + 1)]
    for parent, child in zip(layers, layers[1:]):
        assert child <= parent
    common = layers[0]
    for layer in layers[1:]:
        common = common & layer
    assert language(build_f2_lower(), length) == common


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rn_is_the_goldstein_preimage_of_the_previous_layer(n):
    automaton, previous = build_Rn(n), build_Rn(n - 1)
    for length in range(1, 11):
        for word in cyclic_words(length):
            expected = is_in_goldstein(word) and accepts(previous, apply(PHI, word))
            assert accepts(automaton, word) == expected, word


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_rnl_machine_matches_definition(n):
    automaton = build_RnL(n)
    for length in range(1, 11):
        assert language(automaton, length) == {w for w in cyclic_words(length) if rnl_member(n, w)}


def test_rnl_excludes_pure_inverse_runs():
    automaton = build_RnL(1)
    assert not accepts(automaton, CyclicWord.parse("AAA", 2))
    assert accepts(automaton, CyclicWord.parse("AAAb", 2))
    assert not accepts(automaton, CyclicWord.parse("AAAAb", 2))


def test_rank_machine_sizes():
    for r in range(3, 8):
        automaton = build_rank_machine(r)
        assert automaton.size == 3 + 6 * (r - 2)
        assert automaton.rank == r
    with pytest.raises(RankTooSmall):
        build_rank_machine(2)


@pytest.mark.parametrize("automaton", [
    build_f2_lower(), build_goldstein(), build_rank_machine(3), build_rank_machine(4), build_rank_machine(5),
], ids=["lb", "goldstein", "rank3", "rank4", "rank5"])
def test_builtin_machines_pass_all_checks(automaton):
    report = verify_properties(automaton)
    assert report.all_ok, report


# The drawn rank-4 machine with its merged x4 / x4^-1 node as s9.
RANK4_DRAWING = {
    "s1": "s1 s2 s3 s4 s5 s6 s9 s10 s11 s12",
    "s2": "s2 s4 s5 s9 s11 s12",
    "s3": "s1 s3",
    "s4": "s4 s9 s10",
    "s5": "s1 s3 s5",
    "s6": "s6 s8",
    "s7": "s1 s7",
    "s8": "s7",
    "s9": "s1 s3 s5 s9 s10 s11",
    "s10": "s1 s4 s5 s9 s10 s11 s12",
    "s11": "s1 s3 s9 s10 s11",
    "s12": "s12 s14",
    "s13": "s1 s3 s10 s13",
    "s14": "s13",
}
RANK4_NODES = {
    "alpha": "s1", "epsilon2": "s2", "zeta2": "s3", "epsilon3": "s4", "zeta3": "s5", "eta2": "s6",
    "iota2": "s7", "theta1": "s8", "gamma": "s9", "delta": "s9", "beta2": "s10", "beta3": "s11",
    "eta3": "s12", "iota3": "s13", "theta2": "s14",
}


def test_rank4_machine_matches_drawing():
    automaton = build_rank_machine(4)
    drawn = {(RANK4_NODES[automaton.node_name(u)], RANK4_NODES[automaton.node_name(v)]) for u, v in automaton.edges}
    assert drawn == {(src, dst) for src, targets in RANK4_DRAWING.items() for dst in targets.split()}
    assert ("s5", "s10") not in drawn


@pytest.mark.parametrize("variant", sorted(RANK_VARIANTS))
def test_rank_variants_agree_at_rank_three(variant):
    assert build_rank_machine(3, variant) == build_rank_machine(3)


@pytest.mark.parametrize("variant", ["block", "ascending"])
def test_other_rank_readings_are_ambiguous(variant):
    automaton = build_rank_machine(4, variant)
    assert check_reduced(automaton).ok
    assert check_mixing(automaton).ok
    result = check_one_to_constant(automaton)
    assert not result.ok
    left, right = result.witness["paths"]
    assert left != right
    assert left[0] == right[0] and left[-1] == right[-1]


def test_block_reading_spells_acb_twice():
    automaton = build_rank_machine(4, "block")
    index = {automaton.node_name(v): v for v in range(automaton.size)}
    for middle in ("epsilon3", "zeta3"):
        assert (index["alpha"], index[middle]) in automaton.edges
        assert (index[middle], index["beta2"]) in automaton.edges
    drawn = build_rank_machine(4)
    assert (index["zeta3"], index["beta2"]) not in drawn.edges
    assert drawn.edges < automaton.edges


def test_unknown_rank_variant():
    with pytest.raises(PPGrowthError):
        build_rank_machine(4, "transposed")


@pytest.mark.parametrize("r", [3, 4, 5])
def test_rank_machines_reduced_and_mixing(r):
    automaton = build_rank_machine(r)
    assert check_reduced(automaton).ok
    assert check_mixing(automaton).ok


def test_check_reduced_witness():
    result = check_reduced(machine("aA", [(0, 1), (1, 1), (0, 0)]))
    assert not result.ok
    assert result.witness["labels"] == ["a", "A"]


def test_check_mixing_witnesses():
    periodic = check_mixing(machine("ab", [(0, 1), (1, 0)]))
    assert not periodic.ok
    assert periodic.witness == {"kind": "period", "period": 2}

    split = check_mixing(machine("ab", [(0, 0), (0, 1), (1, 1)]))
    assert not split.ok
    assert split.witness["kind"] == "unreachable"
    assert (split.witness["source"], split.witness["target"]) == ("1", "0")


def test_check_one_to_constant_witness():
    ambiguous = machine("aab", [(2, 0), (2, 1), (0, 2), (1, 2), (2, 2)])
    assert check_mixing(ambiguous).ok
    result = check_one_to_constant(ambiguous)
    assert not result.ok
    left, right = result.witness["paths"]
    assert left != right
    assert left[0] == right[0] and left[-1] == right[-1]


def test_check_one_to_constant_needs_mixing():
    with pytest.raises(NotMixing):
        check_one_to_constant(machine("ab", [(0, 1), (1, 0)]))
    report = verify_properties(machine("ab", [(0, 1), (1, 0)]))
    assert not report.one_to_constant.ok and "not_mixing" in report.one_to_constant.witness


def test_language_requires_reduced_automaton():
    with pytest.raises(NotReduced):
        language(machine("aA", [(0, 1), (1, 0)]), 2)


def test_count_matches_closed_path_enumeration():
    lb = build_f2_lower()
    for length in range(1, 9):
        assert count_closed_paths(lb, length) == sum(1 for _ in closed_paths(lb, length))


def test_random_closed_path_is_closed_and_seeded():
    automaton = build_goldstein()
    first = random_closed_path(automaton, 12, random.Random(5))
    again = random_closed_path(automaton, 12, random.Random(5))
    assert first == again
    assert len(first) == 12
    steps = list(zip(first, first[1:] + first[:1]))
    assert all(step in automaton.edges for step in steps)
    assert random_closed_path(machine("ab", [(0, 1), (1, 0)]), 3, random.Random(1)) is None


def test_text_format_round_trip():
    for automaton in (build_f2_lower(), build_rank_machine(3), build_RnL(2)):
        assert read_automaton(write_automaton(automaton)) == automaton


def test_text_format_errors():
    with pytest.raises(DanglingEdge) as info:
        read_automaton("rank 2\nnode 0 a\nedge 0 1\n")
    assert info.value.line == 3
    with pytest.raises(AutomatonParseError):
        read_automaton("node 0 a\n")
    with pytest.raises(AutomatonParseError):
        read_automaton("rank 2\nnode 0 z\n")
    parsed = read_automaton("# loop\nrank 2\nnode 0 a  # only node\nedge 0 0\n")
    assert language(parsed, 3) == words(["aaa"])


def test_build_from_spec():
    assert build_from_spec("f2-lower") == build_f2_lower()
    assert build_from_spec("goldstein:Ab") == build_goldstein("A", "b")
    assert build_from_spec("rank:3").size == 9
    assert build_from_spec("rank:4") == build_rank_machine(4)
    assert build_from_spec("rank:4:block") == build_rank_machine(4, "block")
    assert build_from_spec("rnl:1") == build_RnL(1)
    with pytest.raises(PPGrowthError):
        build_from_spec("rank:x")
    with pytest.raises(PPGrowthError):
        build_from_spec("nonsense")


def main():
    """Run the machine tests"""
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
