"""
Constructors for the named automata
Goldstein machines, the F2 lower-bound machine, rank-r block machines and
the bounded-run machines for R^n and R^nL
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import InvalidCriterionPair, PPGrowthError, RankTooSmall
from ..core.words import code_generator, invert_code, letter_code, parse_codes
from .automaton import Automaton

# Set up logging
logger = logging.getLogger(__name__)

# Generic Goldstein machine on four letters (y^-1, x^-1, y, x); for the
# pair (B, a) the labels read A, b, a, B.
GOLDSTEIN_EDGES = [(0, 0), (0, 1), (1, 1), (1, 0), (1, 2), (2, 2), (2, 1), (2, 3), (3, 2)]

F2_LOWER_LABELS = "aBabA"
F2_LOWER_EDGES = [
    (0, 0), (0, 1), (0, 3),
    (1, 2),
    (2, 2), (2, 3),
    (3, 3), (3, 0), (3, 4),
    (4, 4), (4, 3),
]

RANK_GROUPS = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota"]

# Block rows of the rank-r machine as displayed. Entry (row X, column Y) lists
# edges Y -> X. "1" all ones, "0" none, "U" strictly upper, "L" strictly lower,
# "I" identity.
RANK_BLOCKS = {
    "alpha":   ["1", "1",   "1", "1", "0",   "1",   "0", "0", "1"],
    "beta":    ["1", "1",   "1", "1", "U+L", "U",   "0", "0", "U"],
    "gamma":   ["1", "1",   "1", "0", "1",   "0",   "0", "0", "0"],
    "delta":   ["1", "1",   "0", "1", "1",   "0",   "0", "0", "0"],
    "epsilon": ["1", "L",   "0", "0", "L+I", "0",   "0", "0", "0"],
    "zeta":    ["1", "U+L", "1", "1", "L",   "U+I", "0", "0", "U"],
    "eta":     ["1", "L",   "0", "0", "L",   "0",   "I", "0", "0"],
    "theta":   ["0", "0",   "0", "0", "0",   "0",   "I", "0", "0"],
    "iota":    ["0", "0",   "0", "0", "0",   "0",   "0", "I", "I"],
}

# Block overrides, keyed (row, column), for each reading of the machine.
#   drawn:     the drawn rank-4 machine, which has no zeta -> beta edges; the
#              only reading that is one-to-constant for r >= 4
#   block:     every block as displayed; alpha -> epsilon3 -> beta2 and
#              alpha -> zeta3 -> beta2 both spell aCb
#   ascending: zeta chains climb instead of descending; its roots are the
#              tabulated 5.746, 7.509, 9.290, 11.083 for r = 4..7, but the
#              positivization schedule does not cover its words
RANK_VARIANTS: Dict[str, Dict[Tuple[str, str], str]] = {
    "drawn": {("beta", "zeta"): "0"},
    "block": {},
    "ascending": {("zeta", "zeta"): "L+I"},
}
DEFAULT_RANK_VARIANT = "drawn"


def _pair_codes(x, y) -> Tuple[int, int]:
    if isinstance(x, str):
        x = parse_codes(x, 2)
        x = x[0] if len(x) == 1 else -1
    if isinstance(y, str):
        y = parse_codes(y, 2)
        y = y[0] if len(y) == 1 else -1
    if not (0 <= x < 4 and 0 <= y < 4):
        raise InvalidCriterionPair("criterion letters must be single letters of F2")
    if code_generator(x) == code_generator(y):
        raise InvalidCriterionPair("y must differ from x and from x^-1")
    return x, y


def build_goldstein(x="B", y="a") -> Automaton:
    """
    Four-node machine whose cyclic language is the words satisfying (x, y)

    Args:
        x: Letter that must be flanked by y (code or text)
        y: Flanking letter, with y not x or x^-1
    """
    x, y = _pair_codes(x, y)
    labels = (invert_code(y), invert_code(x), y, x)
    automaton = Automaton(rank=2, labels=labels, edges=frozenset(GOLDSTEIN_EDGES))
    logger.debug(f"Built Goldstein machine for pair {x},{y}")
    return automaton


def build_f2_lower() -> Automaton:
    """Five-node machine s1..s5 labelled a, B, a, b, A."""
    return Automaton(
        rank=2,
        labels=tuple(parse_codes(F2_LOWER_LABELS, 2)),
        edges=frozenset(F2_LOWER_EDGES),
        names=("s1", "s2", "s3", "s4", "s5"),
    )


def _rank_group_layout(r: int) -> Dict[str, List[Tuple[str, int]]]:
    """Node names and label codes of each group, in node order."""
    inner = range(2, r)
    return {
        "alpha": [("alpha", letter_code(1, 1))],
        "beta": [(f"beta{i}", letter_code(i, 1)) for i in inner],
        "gamma": [("gamma", letter_code(r, 1))],
        "delta": [("delta", letter_code(r, -1))],
        "epsilon": [(f"epsilon{i}", letter_code(i, -1)) for i in inner],
        "zeta": [(f"zeta{i}", letter_code(i, -1)) for i in inner],
        "eta": [(f"eta{i}", letter_code(i, 1)) for i in inner],
        "theta": [(f"theta{i}", letter_code(i, -1)) for i in range(1, r - 1)],
        "iota": [(f"iota{i}", letter_code(i, 1)) for i in inner],
    }


def _block_entry(kind: str, i: int, j: int) -> bool:
    parts = kind.split("+")
    return (
        "1" in parts
        or ("U" in parts and j > i)
        or ("L" in parts and i > j)
        or ("I" in parts and i == j)
    )


def rank_blocks(variant: str = DEFAULT_RANK_VARIANT) -> Dict[str, List[str]]:
    """Block rows of one reading, RANK_BLOCKS with the reading's overrides applied."""
    if variant not in RANK_VARIANTS:
        raise PPGrowthError(f"unknown rank machine variant {variant!r}, expected one of {sorted(RANK_VARIANTS)}")
    blocks = {row: list(kinds) for row, kinds in RANK_BLOCKS.items()}
    for (row, column), kind in RANK_VARIANTS[variant].items():
        blocks[row][RANK_GROUPS.index(column)] = kind
    return blocks


def build_rank_machine(r: int, variant: str = DEFAULT_RANK_VARIANT) -> Automaton:
    """
    The 3 + 6(r-2) node machine for F_r, r >= 3

    Node order: alpha, beta_2.., gamma, delta, epsilon_2.., zeta_2.., eta_2..,
    theta_1.., iota_2..

    Args:
        r: Rank of the free group
        variant: Reading of the block matrix (see RANK_VARIANTS); all three
            coincide at r = 3
    """
    if r < 3:
        raise RankTooSmall(f"rank machines need r >= 3, got {r}")
    blocks = rank_blocks(variant)
    layout = _rank_group_layout(r)
    offsets: Dict[str, int] = {}
    names: List[str] = []
    labels: List[int] = []
    for group in RANK_GROUPS:
        offsets[group] = len(names)
        for name, code in layout[group]:
            names.append(name)
            labels.append(code)

    edges = set()
    for row_group in RANK_GROUPS:
        for col_group, kind in zip(RANK_GROUPS, blocks[row_group]):
            if kind == "0":
                continue
            for i in range(len(layout[row_group])):
                for j in range(len(layout[col_group])):
                    if _block_entry(kind, i, j):
                        edges.add((offsets[col_group] + j, offsets[row_group] + i))

    automaton = Automaton(rank=r, labels=tuple(labels), edges=frozenset(edges), names=tuple(names))
    logger.info(f"Built rank-{r} {variant} machine: {automaton.size} nodes, {len(edges)} edges")
    return automaton


def compile_bounded_runs(min_gap: int, max_inverse_run: Optional[int] = None) -> Automaton:
    """
    F2 machine forbidding short a-runs between B's and long A-runs

    Forbids B a^k B for 0 <= k <= min_gap and BA, AB, aA, bB; when
    max_inverse_run is set, A-runs are capped at that length and must be
    closed by b on both sides (no A self-loop).

    Nodes: b, a (free), B, a_1..a_min_gap (a-run after B), A or A_1..A_cap.
    """
    a, big_a, b, big_b = parse_codes("aAbB", 2)
    names = ["b", "a", "B"] + [f"a{j}" for j in range(1, min_gap + 1)]
    labels = [b, a, big_b] + [a] * min_gap
    b_node, a_free, big_b_node = 0, 1, 2
    counters = list(range(3, 3 + min_gap))
    edges = {(b_node, b_node), (b_node, a_free), (a_free, a_free), (a_free, b_node), (a_free, big_b_node)}

    edges.add((big_b_node, counters[0] if counters else a_free))
    for j, node in enumerate(counters):
        edges.add((node, counters[j + 1] if j + 1 < len(counters) else a_free))
        edges.add((node, b_node))

    if max_inverse_run is None:
        inverse_nodes = [len(names)]
        names.append("A")
        labels.append(big_a)
        edges |= {(inverse_nodes[0], inverse_nodes[0]), (inverse_nodes[0], b_node)}
    else:
        inverse_nodes = list(range(len(names), len(names) + max_inverse_run))
        names += [f"A{j}" for j in range(1, max_inverse_run + 1)]
        labels += [big_a] * max_inverse_run
        for j, node in enumerate(inverse_nodes):
            if j + 1 < len(inverse_nodes):
                edges.add((node, inverse_nodes[j + 1]))
            edges.add((node, b_node))
    edges.add((b_node, inverse_nodes[0]))

    return Automaton(rank=2, labels=tuple(labels), edges=frozenset(edges), names=tuple(names))


def build_Rn(n: int) -> Automaton:
    """Cyclic words avoiding B a^k B (k <= n); n = 0 gives the Goldstein machine."""
    if n < 0:
        raise PPGrowthError("n must be nonnegative")
    return compile_bounded_runs(n)


def build_RnL(n: int) -> Automaton:
    """R^n words whose A-runs are at most n + 2 and flanked by b."""
    if n < 0:
        raise PPGrowthError("n must be nonnegative")
    return compile_bounded_runs(n, max_inverse_run=n + 2)


def build_from_spec(spec: str) -> Automaton:
    """
    Builder lookup used by the CLI

    Accepts "f2-lower", "goldstein", "goldstein:XY", "rank:R", "rank:R:VARIANT", "rn:N", "rnl:N".
    """
    name, _, arg = spec.strip().partition(":")
    name = name.lower()
    try:
        if name in ("f2-lower", "lb"):
            return build_f2_lower()
        if name == "goldstein":
            if arg:
                codes = parse_codes(arg, 2)
                if len(codes) != 2:
                    raise InvalidCriterionPair(f"pair {arg!r} must be two letters")
                return build_goldstein(codes[0], codes[1])
            return build_goldstein()
        if name == "rank":
            rank, _, variant = arg.partition(":")
            return build_rank_machine(int(rank), variant or DEFAULT_RANK_VARIANT)
        if name == "rn":
            return build_Rn(int(arg))
        if name == "rnl":
            return build_RnL(int(arg))
    except ValueError as e:
        if isinstance(e, PPGrowthError):
            raise
        raise PPGrowthError(f"bad builder argument in {spec!r}") from e
    raise PPGrowthError(f"unknown builder {spec!r}")
