"""
Command Processor for the ppgrowth command line
Routes subcommands to library operations and returns plain result dicts
"""
import logging
from typing import Any, Callable, Dict, List

from ..core.automorphisms import apply
from ..core.config import enumeration_budget
from ..core.errors import BudgetExceeded, PPGrowthError, RankMismatch
from ..core.spectral import charpoly, dominant_root
from ..core.words import CyclicWord
from ..growthlab.reports import ascending_figure, render_markdown_table, truncate
from ..growthlab.sampling import sample_pp2
from ..growthlab.tables import growth_table
from ..machines.automaton import count_closed_paths, language, write_automaton
from ..machines.builders import build_from_spec
from ..machines.properties import verify_properties
from ..potpos.decision import decide_pp2
from ..potpos.encodings import decode_f, decode_signal, encode_f, encode_signal
from ..potpos.languages import (
    AutomatonSpec, LanguageSpec, all_cyclic_spec, commutator_spec, goldstein_spec, pp2_spec,
)

# Set up logging
logger = logging.getLogger(__name__)

Handler = Callable[[Dict[str, Any]], Dict[str, Any]]


def filter_spec(name: str, rank: int) -> LanguageSpec:
    """Language named by an enumerate --filter value."""
    kind, _, arg = name.partition(":")
    if kind == "all":
        return all_cyclic_spec(rank)
    if kind == "commutator":
        return commutator_spec(rank)
    if kind in ("goldstein", "pp2", "rn") and rank != 2:
        raise RankMismatch(f"filter {name!r} needs rank 2")
    if kind == "goldstein":
        return goldstein_spec()
    if kind == "pp2":
        return pp2_spec()
    if kind == "rn":
        try:
            n = int(arg)
        except ValueError as e:
            raise PPGrowthError(f"bad filter {name!r}") from e
        return AutomatonSpec(build_from_spec(f"rn:{n}"), label=f"R^{n}")
    raise PPGrowthError(f"unknown filter {name!r}")


class CommandProcessor:
    """
    Dispatches parsed command arguments to the matching handler
    """

    def __init__(self):
        self.supported_commands: Dict[str, Handler] = {
            "machine": self._handle_machine,
            "decide": self._handle_decide,
            "count": self._handle_count,
            "table": self._handle_table,
            "encode": self._handle_encode,
            "decode": self._handle_decode,
            "sample": self._handle_sample,
            "enumerate": self._handle_enumerate,
        }
        logger.debug(f"Initialized CommandProcessor with {len(self.supported_commands)} commands")

    def process(self, command: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """
        Run one command

        Args:
            command: Subcommand name
            arguments: Parsed arguments

        Returns:
            Result dict, ready for JSON output

        Raises:
            PPGrowthError: on malformed input or an unknown command
        """
        if command not in self.supported_commands:
            raise PPGrowthError(
                f"Unsupported command: {command}. Supported commands: {list(self.supported_commands)}"
            )
        logger.info(f"Processing command: {command}")
        try:
            return self.supported_commands[command](arguments)
        except PPGrowthError as e:
            logger.error(f"Error in {command}: {e}")
            raise

    def _handle_machine(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        automaton = build_from_spec(arguments["builder"])
        result: Dict[str, Any] = {
            "builder": arguments["builder"],
            "rank": automaton.rank,
            "nodes": automaton.size,
            "edges": len(automaton.edges),
        }
        if arguments.get("check"):
            report = verify_properties(automaton)
            result["properties"] = {**report.dict(), "all_ok": report.all_ok}
        if arguments.get("charpoly") or arguments.get("eig"):
            poly = charpoly(automaton.adjacency_matrix())
            result["charpoly"] = poly.to_json()
            result["charpoly_text"] = poly.to_text()
            if arguments.get("eig"):
                root = dominant_root(poly, arguments.get("digits"))
                result["dominant_root"] = {
                    "value": str(root.value),
                    "radius": str(root.radius),
                    "lower": str(root.lower),
                    "upper": str(root.upper),
                    "digits": root.digits,
                }
        emit = arguments.get("emit")
        if emit:
            with open(emit, "w") as stream:
                write_automaton(automaton, stream)
            result["emitted"] = emit
        return result

    def _handle_decide(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        rank = arguments.get("rank", 2)
        if rank != 2:
            raise RankMismatch("decide is available for rank 2 only")
        word = CyclicWord.parse(arguments["word"], rank)
        decision = decide_pp2(word, arguments.get("max_steps"))
        result = decision.dict()
        result["verdict"] = decision.verdict.value
        if not arguments.get("witness"):
            result.pop("witness", None)
        elif decision.witness is not None:
            result["verified_image"] = apply(decision.automorphism(), word).to_text()
        return result

    def _handle_count(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        automaton = build_from_spec(arguments["builder"])
        length = arguments["length"]
        if arguments.get("mode") == "distinct_words":
            count = len(language(automaton, length))
        else:
            count = count_closed_paths(automaton, length)
        return {"builder": arguments["builder"], "length": length,
                "mode": arguments.get("mode") or "closed_paths", "count": count}

    def _handle_table(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        digits = arguments.get("digits", 3)
        rows = growth_table(arguments.get("ranks", range(2, 8)), max(digits, 6))
        return {
            "rows": [
                {"rank": row.rank, "positive": row.positive_rate,
                 "pp_lower_bound": str(truncate(row.pp_lower_bound.lower, digits)),
                 "all": row.all_rate,
                 "zeta_ascending": str(ascending_figure(row))}
                for row in rows
            ],
            "markdown": render_markdown_table(rows, digits),
        }

    def _handle_encode(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        word = CyclicWord.parse(arguments["word"], 2)
        n = arguments["n"]
        image = encode_signal(n, word) if arguments.get("signal") else encode_f(n, word)
        return {"n": n, "signal": bool(arguments.get("signal")), "word": word.to_text(),
                "image": image.to_text(), "length_change": len(image) - len(word)}

    def _handle_decode(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        word = CyclicWord.parse(arguments["word"], 2)
        if arguments.get("signal"):
            n, original = decode_signal(word)
        else:
            n = arguments["n"]
            original = decode_f(n, word)
        return {"n": n, "signal": bool(arguments.get("signal")), "word": word.to_text(),
                "decoded": original.to_text()}

    def _handle_sample(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        report = sample_pp2(arguments["length"], arguments["count"], arguments["seed"],
                            arguments.get("max_draws"))
        return report.dict()

    def _handle_enumerate(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        rank, length = arguments["rank"], arguments["length"]
        spec = filter_spec(arguments.get("filter", "all"), rank)
        if not isinstance(spec, AutomatonSpec) and (2 * rank - 1) ** length > enumeration_budget():
            raise BudgetExceeded(f"enumerating rank {rank} length {length} exceeds the budget")
        words: List[str] = [w.to_text() for w in spec.words(length)]
        return {"rank": rank, "length": length, "filter": spec.label, "count": len(words), "words": words}
