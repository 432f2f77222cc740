"""
Labelled digraphs whose closed paths spell cyclic words
Languages, membership, closed-path counting, uniform path sampling, text format
"""
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, TextIO, Tuple

from ..core.errors import AutomatonParseError, DanglingEdge, InvalidLetter, NotReduced
from ..core.spectral import IntMatrix
from ..core.words import CyclicWord, code_text, cyclic_reduce, invert_code, parse_codes, reduce

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Automaton:
    """
    Nodes 0..n-1 each carry one letter; a closed path spells a cyclic word

    Attributes:
        rank: Rank of the free group the labels live in
        labels: Letter code of each node
        edges: Directed edges (source, target)
        names: Optional display names, one per node
    """
    rank: int
    labels: Tuple[int, ...]
    edges: FrozenSet[Tuple[int, int]]
    names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.labels)
        for code in self.labels:
            if not 0 <= code < 2 * self.rank:
                raise InvalidLetter(f"label code {code} is outside rank {self.rank}")
        for source, target in self.edges:
            if not (0 <= source < n and 0 <= target < n):
                raise DanglingEdge(f"edge {source}->{target} references a missing node")
        if self.names and len(self.names) != n:
            raise ValueError("names must match the number of nodes")

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def successors(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in range(self.size)]
        for source, target in sorted(self.edges):
            out[source].append(target)
        return tuple(tuple(s) for s in out)

    def node_name(self, node: int) -> str:
        return self.names[node] if self.names else str(node)

    def label_text(self, node: int) -> str:
        return code_text(self.labels[node], self.rank)

    def inverse_edges(self) -> List[Tuple[int, int]]:
        """Edges joining mutually inverse labels."""
        return sorted(
            (u, v) for u, v in self.edges if self.labels[v] == invert_code(self.labels[u])
        )

    def adjacency_matrix(self) -> IntMatrix:
        rows = [[0] * self.size for _ in range(self.size)]
        for source, target in self.edges:
            rows[source][target] = 1
        return IntMatrix.from_rows(rows)

    def path_word(self, path: Iterable[int]) -> CyclicWord:
        return cyclic_reduce(reduce(self.rank, (self.labels[v] for v in path)))[0]


def _require_reduced(automaton: Automaton) -> None:
    bad = automaton.inverse_edges()
    if bad:
        u, v = bad[0]
        raise NotReduced(
            f"edge {automaton.node_name(u)}->{automaton.node_name(v)} joins "
            f"{automaton.label_text(u)} and {automaton.label_text(v)}"
        )


def closed_paths(automaton: Automaton, length: int) -> Iterable[Tuple[int, ...]]:
    """Every closed path with the given number of edges, as node tuples."""
    if length <= 0:
        return
    succ = automaton.successors
    path: List[int] = []

    def walk(start: int, node: int):
        if len(path) == length:
            if start in succ[node]:
                yield tuple(path)
            return
        for nxt in succ[node]:
            path.append(nxt)
            yield from walk(start, nxt)
            path.pop()

    for start in range(automaton.size):
        path.append(start)
        yield from walk(start, start)
        path.pop()


def language(automaton: Automaton, length: int) -> Set[CyclicWord]:
    """
    Set of cyclic words of the given length spelled by closed paths

    Raises:
        NotReduced: if an edge joins mutually inverse labels
    """
    _require_reduced(automaton)
    words = set()
    for path in closed_paths(automaton, length):
        words.add(CyclicWord(automaton.rank, _canonical(tuple(automaton.labels[v] for v in path))))
    logger.debug(f"Language at length {length}: {len(words)} cyclic words")
    return words


def _canonical(codes: Tuple[int, ...]) -> Tuple[int, ...]:
    return min(codes[i:] + codes[:i] for i in range(len(codes)))


def accepts(automaton: Automaton, word: CyclicWord) -> bool:
    """True when some closed path spells the cyclic word."""
    letters = word.letters
    if not letters or word.rank != automaton.rank:
        return False
    succ = automaton.successors
    for start in range(automaton.size):
        if automaton.labels[start] != letters[0]:
            continue
        current = {start}
        for code in letters[1:]:
            current = {v for u in current for v in succ[u] if automaton.labels[v] == code}
            if not current:
                break
        if any(start in succ[u] for u in current):
            return True
    return False


def count_closed_paths(automaton: Automaton, length: int) -> int:
    """trace(A^length), exact."""
    if length <= 0:
        return 0
    return automaton.adjacency_matrix().power(length).trace()


def random_closed_path(automaton: Automaton, length: int, rng: random.Random) -> Optional[List[int]]:
    """
    A closed path drawn uniformly among all closed paths of this length

    Exact path counts drive every choice; returns None when no closed path exists.
    """
    matrix = automaton.adjacency_matrix()
    diagonal = [matrix.power(length).rows[s][s] for s in range(automaton.size)] if length > 0 else []
    total = sum(diagonal)
    if total == 0:
        return None

    pick = rng.randrange(total)
    start = 0
    while pick >= diagonal[start]:
        pick -= diagonal[start]
        start += 1

    # back[k][v] = number of k-edge paths from v to start
    back = [[1 if v == start else 0 for v in range(automaton.size)]]
    for _ in range(length):
        prev = back[-1]
        back.append([sum(prev[t] for t in automaton.successors[v]) for v in range(automaton.size)])

    path = [start]
    node = start
    for step in range(1, length):
        remaining = length - step
        weights = [(nxt, back[remaining][nxt]) for nxt in automaton.successors[node]]
        pick = rng.randrange(sum(w for _, w in weights))
        for nxt, weight in weights:
            if pick < weight:
                node = nxt
                break
            pick -= weight
        path.append(node)
    return path


def write_automaton(automaton: Automaton, stream: Optional[TextIO] = None) -> str:
    """Canonical text form; also written to stream when given."""
    lines = [f"rank {automaton.rank}"]
    for node in range(automaton.size):
        name = f" {automaton.names[node]}" if automaton.names else ""
        lines.append(f"node {node} {automaton.label_text(node).replace(' ', '')}{name}")
    for source, target in sorted(automaton.edges):
        lines.append(f"edge {source} {target}")
    text = "\n".join(lines) + "\n"
    if stream is not None:
        stream.write(text)
    return text


def read_automaton(text: str) -> Automaton:
    """
    Parse the line-based automaton format

    Lines: "rank R", "node ID LABEL [NAME]", "edge SRC DST"; '#' starts a comment.
    """
    rank: Optional[int] = None
    nodes: Dict[int, Tuple[int, Optional[str]]] = {}
    edges: List[Tuple[int, int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0]
        try:
            if keyword == 'rank' and len(parts) == 2:
                rank = int(parts[1])
            elif keyword == 'node' and len(parts) in (3, 4):
                if rank is None:
                    raise AutomatonParseError("node before rank", number)
                node_id = int(parts[1])
                if node_id in nodes:
                    raise AutomatonParseError(f"duplicate node {node_id}", number)
                codes = parse_codes(parts[2], rank)
                if len(codes) != 1:
                    raise AutomatonParseError(f"label {parts[2]!r} is not a single letter", number)
                nodes[node_id] = (codes[0], parts[3] if len(parts) == 4 else None)
            elif keyword == 'edge' and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2]), number))
            else:
                raise AutomatonParseError(f"unrecognised line {line!r}", number)
        except InvalidLetter as e:
            raise AutomatonParseError(str(e), number) from e
        except ValueError as e:
            if isinstance(e, AutomatonParseError):
                raise
            raise AutomatonParseError(f"bad number in {line!r}", number) from e

    if rank is None:
        raise AutomatonParseError("missing rank line")
    ids = sorted(nodes)
    if ids != list(range(len(ids))):
        raise AutomatonParseError("node ids must be 0..n-1")
    for source, target, number in edges:
        if source not in nodes or target not in nodes:
            raise DanglingEdge(f"edge {source} {target} references an undeclared node", number)

    names = tuple(nodes[i][1] or str(i) for i in ids) if any(nodes[i][1] for i in ids) else ()
    return Automaton(
        rank=rank,
        labels=tuple(nodes[i][0] for i in ids),
        edges=frozenset((s, t) for s, t, _ in edges),
        names=names,
    )
