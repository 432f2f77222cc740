"""
Length-controlled injections from R^nL into the R-infinity language

Words are cut at their b letters into blocks. A block
a^k0 B a^m1 B ... B a^ks with s >= 2 B's is a forbidden segment; encoding
rewrites it into b-separated A-blocks, and decoding finds those blocks again.
"""
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from ..core.errors import NoSignal, NotInDomain, PPGrowthError
from ..core.words import CyclicWord
from ..machines.automaton import Automaton, accepts
from ..machines.builders import build_RnL

# Set up logging
logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rnl_machine(n: int) -> Automaton:
    return build_RnL(n)


def _blocks(word: CyclicWord) -> List[str]:
    """Blocks between consecutive b's, starting after the first b of the canonical rotation."""
    text = word.to_text()
    start = text.index("b")
    rotated = text[start:] + text[:start]
    return rotated[1:].split("b")


def _join(blocks: List[str]) -> CyclicWord:
    return CyclicWord.parse("b" + "b".join(blocks), 2)


def _is_segment(block: str) -> bool:
    return block.count("B") >= 2


def _is_a_block(block: str) -> bool:
    return set(block) <= {"a"}


def _is_inverse_block(block: str) -> bool:
    return bool(block) and set(block) == {"A"}


def _split_segment(block: str, n: int) -> Tuple[int, List[int], int]:
    """(k0, [k1..k_{s-1}], ks) of a^k0 B a^(n+k1) B ... B a^ks."""
    runs = [len(part) for part in block.split("B")]
    return runs[0], [m - n for m in runs[1:-1]], runs[-1]


def _segment_text(k0: int, ks: List[int], k_last: int, n: int) -> str:
    runs = [k0] + [n + k for k in ks] + [k_last]
    return "B".join("a" * r for r in runs)


def _plain_encoding(block: str, n: int) -> str:
    k0, ks, k_last = _split_segment(block, n)
    inverse_blocks = ["A" * (n + ks[0] + 2)] + ["A" * (n + k) for k in ks[1:]]
    return "b".join(["a" * (k0 - 1)] + inverse_blocks + ["a" * (k_last - 1)])


def _signal_encoding(block: str, n: int) -> str:
    k0, ks, k_last = _split_segment(block, n)
    inverse_blocks = ["A", "A" * (n + 3)] + ["A" * k for k in ks]
    return "b".join(["a" * (k0 - 1)] + inverse_blocks + ["a" * (k_last - 1)])


def _require_domain(n: int, word: CyclicWord) -> None:
    if n < 0:
        raise PPGrowthError("n must be nonnegative")
    if word.rank != 2 or not accepts(rnl_machine(n), word):
        raise NotInDomain(f"{word} is not in R^{n}L")
    if "b" not in word.to_text():
        raise NotInDomain(f"{word} contains no b")


def encode_f(n: int, word: CyclicWord) -> CyclicWord:
    """
    Length-preserving encoding of an R^nL word

    Each forbidden segment b a^k0 B a^(n+k1) B ... B a^ks b becomes
    b a^(k0-1) b A^(n+k1+2) b A^(n+k2) ... b A^(n+k_{s-1}) b a^(ks-1) b.

    Raises:
        NotInDomain: if the word is not in R^nL or has no b
    """
    _require_domain(n, word)
    blocks = [_plain_encoding(b, n) if _is_segment(b) else b for b in _blocks(word)]
    return _join(blocks)


def _decode_blocks(blocks: List[str], n: int) -> List[str]:
    """Undo plain encodings: markers are A-blocks longer than n+2 after an a-block."""
    size = len(blocks)

    def is_marker(i: int) -> bool:
        return (_is_inverse_block(blocks[i]) and len(blocks[i]) > n + 2
                and _is_a_block(blocks[i - 1]))

    markers = [i for i in range(size) if is_marker(i)]
    if not markers:
        return blocks
    start = (markers[0] - 1) % size
    rotated = blocks[start:] + blocks[:start]

    out: List[str] = []
    i = 0
    while i < size:
        if i + 1 < size and _is_a_block(rotated[i]) and _is_inverse_block(rotated[i + 1]) \
                and len(rotated[i + 1]) > n + 2:
            j = i + 1
            runs = []
            while j < size and _is_inverse_block(rotated[j]):
                runs.append(len(rotated[j]))
                j += 1
            if j >= size or not _is_a_block(rotated[j]):
                raise NotInDomain("encoded segment is not closed by an a-block")
            ks = [runs[0] - n - 2] + [r - n for r in runs[1:]]
            out.append(_segment_text(len(rotated[i]) + 1, ks, len(rotated[j]) + 1, n))
            i = j + 1
        else:
            out.append(rotated[i])
            i += 1
    return out


def decode_f(n: int, word: CyclicWord) -> CyclicWord:
    """Inverse of encode_f at level n."""
    if word.rank != 2 or "b" not in word.to_text():
        return word
    return _join(_decode_blocks(_blocks(word), n))


def maximal_rnl_level(word: CyclicWord) -> Optional[int]:
    """Largest n with the word in R^nL, or None."""
    for n in range(len(word), -1, -1):
        if accepts(rnl_machine(n), word):
            return n
    return None


def encode_signal(n: int, word: CyclicWord) -> CyclicWord:
    """
    Encoding that also records n

    The first segment (canonical rotation order) takes the signal form
    b a^(k0-1) b A b A^(n+3) b A^k1 ... b A^k_{s-1} b a^(ks-1) b; the
    other segments are encoded as in encode_f.

    Raises:
        NotInDomain: outside R^nL, without b, or without a forbidden segment
    """
    _require_domain(n, word)
    blocks = _blocks(word)
    segments = [i for i, b in enumerate(blocks) if _is_segment(b)]
    if not segments:
        raise NotInDomain(f"{word} has no forbidden segment")
    signal = segments[0]
    encoded = [
        _signal_encoding(b, n) if i == signal else (_plain_encoding(b, n) if _is_segment(b) else b)
        for i, b in enumerate(blocks)
    ]
    image = _join(encoded)
    logger.debug(f"signal encoding at n={n}: {word} -> {image}")
    return image


def decode_signal(word: CyclicWord) -> Tuple[int, CyclicWord]:
    """
    Recover (n, word) from a signal encoding

    The signal is the marker b a^i b A b A^(m+3) b with the largest m.

    Raises:
        NoSignal: if no marker occurs
    """
    if word.rank != 2 or "b" not in word.to_text():
        raise NoSignal(f"{word} carries no signal")
    blocks = _blocks(word)
    size = len(blocks)
    best: Optional[Tuple[int, int]] = None
    for i in range(size):
        pre, one, big = blocks[i], blocks[(i + 1) % size], blocks[(i + 2) % size]
        if size >= 3 and _is_a_block(pre) and one == "A" and _is_inverse_block(big) and len(big) >= 3:
            if best is None or len(big) > best[1]:
                best = (i, len(big))
    if best is None:
        raise NoSignal(f"{word} carries no signal")

    start, big = best
    n = big - 3
    rotated = blocks[start:] + blocks[:start]
    j = 3
    ks = []
    while j < size and _is_inverse_block(rotated[j]):
        ks.append(len(rotated[j]))
        j += 1
    if not ks or j >= size or not _is_a_block(rotated[j]):
        raise NoSignal(f"{word} has a malformed signal segment")
    original = _segment_text(len(rotated[0]) + 1, ks, len(rotated[j]) + 1, n)
    restored = [original] + rotated[j + 1:]
    return n, _join(_decode_blocks(restored, n))
