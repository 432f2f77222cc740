"""
Structural checks on automata: reduced, mixing, one-to-constant
"""
import logging
from collections import deque
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from ..core.errors import NotMixing
from ..core.spectral import primitivity
from .automaton import Automaton

# Set up logging
logger = logging.getLogger(__name__)


class CheckResult(BaseModel):
    """Outcome of one structural check, with a witness when it fails"""
    ok: bool
    witness: Optional[Dict[str, Any]] = None


class PropertyReport(BaseModel):
    """The three checks together"""
    nodes: int
    edges: int
    reduced: CheckResult
    mixing: CheckResult
    one_to_constant: CheckResult

    @property
    def all_ok(self) -> bool:
        return self.reduced.ok and self.mixing.ok and self.one_to_constant.ok


def check_reduced(automaton: Automaton) -> CheckResult:
    """No edge joins mutually inverse labels."""
    bad = automaton.inverse_edges()
    if not bad:
        return CheckResult(ok=True)
    u, v = bad[0]
    return CheckResult(ok=False, witness={
        "edge": [automaton.node_name(u), automaton.node_name(v)],
        "labels": [automaton.label_text(u), automaton.label_text(v)],
    })


def check_mixing(automaton: Automaton) -> CheckResult:
    """
    Primitivity of the adjacency matrix

    Returns:
        CheckResult whose witness names an unreachable pair or the period
    """
    ok, witness = primitivity(automaton.adjacency_matrix())
    if ok:
        return CheckResult(ok=True)
    if witness and witness.get("kind") == "unreachable":
        witness = dict(witness, source=automaton.node_name(witness["source"]),
                       target=automaton.node_name(witness["target"]))
    return CheckResult(ok=False, witness=witness)


def _pair_graph(automaton: Automaton) -> nx.DiGraph:
    """Pairs of equally labelled nodes, stepping both coordinates along edges."""
    labels = automaton.labels
    succ = automaton.successors
    graph = nx.DiGraph()
    for u in range(automaton.size):
        for v in range(automaton.size):
            if labels[u] != labels[v]:
                continue
            graph.add_node((u, v))
            for u2 in succ[u]:
                for v2 in succ[v]:
                    if labels[u2] == labels[v2]:
                        graph.add_edge((u, v), (u2, v2))
    return graph


def _trace_back(parents: Dict[Tuple[int, int], Optional[Tuple[int, int]]], end: Tuple[int, int]) -> List[Tuple[int, int]]:
    chain = [end]
    while parents[chain[-1]] is not None:
        chain.append(parents[chain[-1]])
    return list(reversed(chain))


def check_one_to_constant(automaton: Automaton) -> CheckResult:
    """
    No two distinct paths share start, end and spelled word

    Searches the pair graph for a route leaving the diagonal and returning to it.

    Raises:
        NotMixing: if the automaton is not mixing
    """
    mixing = check_mixing(automaton)
    if not mixing.ok:
        raise NotMixing(f"one-to-constant check needs a mixing automaton ({mixing.witness})")

    graph = _pair_graph(automaton)
    for x in range(automaton.size):
        diagonal = (x, x)
        for first in graph.successors(diagonal):
            if first[0] == first[1]:
                continue
            parents: Dict[Tuple[int, int], Optional[Tuple[int, int]]] = {first: None}
            queue = deque([first])
            while queue:
                pair = queue.popleft()
                for nxt in graph.successors(pair):
                    if nxt in parents:
                        continue
                    parents[nxt] = pair
                    if nxt[0] == nxt[1]:
                        chain = _trace_back(parents, nxt)
                        left = [x] + [p[0] for p in chain]
                        right = [x] + [p[1] for p in chain]
                        return CheckResult(ok=False, witness={
                            "paths": [[automaton.node_name(v) for v in left],
                                      [automaton.node_name(v) for v in right]],
                            "word": "".join(automaton.label_text(v) for v in left),
                        })
                    queue.append(nxt)
    return CheckResult(ok=True)


def verify_properties(automaton: Automaton) -> PropertyReport:
    """Run all three checks; one-to-constant reports the mixing failure instead of raising."""
    mixing = check_mixing(automaton)
    if mixing.ok:
        one_to_constant = check_one_to_constant(automaton)
    else:
        one_to_constant = CheckResult(ok=False, witness={"not_mixing": mixing.witness})
    report = PropertyReport(
        nodes=automaton.size,
        edges=len(automaton.edges),
        reduced=check_reduced(automaton),
        mixing=mixing,
        one_to_constant=one_to_constant,
    )
    logger.info(f"Checked automaton with {report.nodes} nodes: reduced={report.reduced.ok} "
                f"mixing={report.mixing.ok} one_to_constant={report.one_to_constant.ok}")
    return report
