"""
Elementary automorphisms of free groups
Substitutions g -> u g v, inversions and swaps, composed left to right
"""
import re
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from .errors import InvalidLetter, InvalidMove, RankMismatch
from .words import (
    CyclicWord, Word, WordLike, code_generator, code_sign, code_text,
    cyclic_reduce, invert_code, letter_code, parse_codes, reduce,
)

# Set up logging
logger = logging.getLogger(__name__)

_MOVE_RE = re.compile(r'^\s*(\S+?)\s*(<->|->)\s*(\S*(?:\s+\S+)*)\s*$')


@dataclass(frozen=True)
class Substitute:
    """g -> image, where image is u g v with u, v free of g"""
    generator: int
    image: Word


@dataclass(frozen=True)
class Invert:
    generator: int


@dataclass(frozen=True)
class Swap:
    first: int
    second: int


Move = Union[Substitute, Invert, Swap]


def _check_generator(generator: int, rank: int) -> None:
    if not 1 <= generator <= rank:
        raise InvalidLetter(f"generator {generator} is outside rank {rank}")


def validate_move(move: Move, rank: int) -> None:
    if isinstance(move, Substitute):
        _check_generator(move.generator, rank)
        if move.image.rank != rank:
            raise RankMismatch(f"image has rank {move.image.rank}, expected {rank}")
        hits = [c for c in move.image.letters if code_generator(c) == move.generator]
        if hits != [letter_code(move.generator, 1)]:
            raise InvalidMove(
                f"image of {code_text(letter_code(move.generator, 1), rank)} must contain it "
                f"exactly once and positively"
            )
    elif isinstance(move, Invert):
        _check_generator(move.generator, rank)
    elif isinstance(move, Swap):
        _check_generator(move.first, rank)
        _check_generator(move.second, rank)
        if move.first == move.second:
            raise InvalidMove("swap needs two distinct generators")
    else:
        raise InvalidMove(f"unknown move {move!r}")


def move_table(move: Move, rank: int) -> Dict[int, Tuple[int, ...]]:
    """Letter code -> image codes for every letter the move changes."""
    if isinstance(move, Substitute):
        image = move.image.letters
        return {
            letter_code(move.generator, 1): image,
            letter_code(move.generator, -1): tuple(invert_code(c) for c in reversed(image)),
        }
    if isinstance(move, Invert):
        pos, neg = letter_code(move.generator, 1), letter_code(move.generator, -1)
        return {pos: (neg,), neg: (pos,)}
    table = {}
    for sign in (1, -1):
        first, second = letter_code(move.first, sign), letter_code(move.second, sign)
        table[first] = (second,)
        table[second] = (first,)
    return table


def inverse_move(move: Move) -> Move:
    if isinstance(move, Substitute):
        target = letter_code(move.generator, 1)
        split = move.image.letters.index(target)
        u = Word(move.image.rank, move.image.letters[:split])
        v = Word(move.image.rank, move.image.letters[split + 1:])
        image = reduce(move.image.rank, u.inverse().letters + (target,) + v.inverse().letters)
        return Substitute(move.generator, image)
    return move


def move_text(move: Move, rank: int) -> str:
    if isinstance(move, Substitute):
        return f"{code_text(letter_code(move.generator, 1), rank)}->{move.image.to_text()}"
    if isinstance(move, Invert):
        return (f"{code_text(letter_code(move.generator, 1), rank)}->"
                f"{code_text(letter_code(move.generator, -1), rank)}")
    return (f"{code_text(letter_code(move.first, 1), rank)}<->"
            f"{code_text(letter_code(move.second, 1), rank)}")


def parse_move(text: str, rank: int) -> Move:
    """
    Parse "b->ba" (substitution), "a->A" (inversion) or "a<->b" (swap)

    Args:
        text: Move text
        rank: Rank of the free group

    Returns:
        The validated move
    """
    match = _MOVE_RE.match(text)
    if not match:
        raise InvalidMove(f"cannot parse move {text!r}")
    lhs, arrow, rhs = match.groups()
    source = parse_codes(lhs, rank)
    if len(source) != 1 or code_sign(source[0]) < 0:
        raise InvalidMove(f"left side of {text!r} must be a single generator")
    generator = code_generator(source[0])

    if arrow == '<->':
        target = parse_codes(rhs, rank)
        if len(target) != 1 or code_sign(target[0]) < 0:
            raise InvalidMove(f"right side of {text!r} must be a single generator")
        move: Move = Swap(generator, code_generator(target[0]))
    else:
        image = Word.parse(rhs, rank)
        if image.letters == (letter_code(generator, -1),):
            move = Invert(generator)
        else:
            move = Substitute(generator, image)
    validate_move(move, rank)
    return move


def _apply_move(move: Move, rank: int, codes: Tuple[int, ...]) -> Tuple[int, ...]:
    table = move_table(move, rank)
    out: List[int] = []
    for code in codes:
        out.extend(table.get(code, (code,)))
    return reduce(rank, out).letters


@dataclass(frozen=True)
class Automorphism:
    """A sequence of elementary moves applied left to right."""
    rank: int
    moves: Tuple[Move, ...] = ()

    def __post_init__(self):
        for move in self.moves:
            validate_move(move, self.rank)

    def __len__(self) -> int:
        return len(self.moves)

    def __str__(self) -> str:
        return ", ".join(self.describe()) or "id"

    def then(self, other: "Automorphism") -> "Automorphism":
        """Apply self, then other."""
        if other.rank != self.rank:
            raise RankMismatch(f"rank {other.rank} does not match rank {self.rank}")
        return Automorphism(self.rank, self.moves + other.moves)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.rank, tuple(inverse_move(m) for m in reversed(self.moves)))

    def describe(self) -> List[str]:
        return [move_text(m, self.rank) for m in self.moves]

    def apply(self, word: WordLike) -> WordLike:
        return apply(self, word)


def apply(automorphism: Automorphism, word: WordLike) -> WordLike:
    """
    Image of a word under an automorphism

    Reduced words map to reduced words; cyclic words are cyclically
    reduced and canonically rotated after each move.
    """
    if word.rank != automorphism.rank:
        raise RankMismatch(f"word rank {word.rank} does not match automorphism rank {automorphism.rank}")
    codes = word.letters
    for move in automorphism.moves:
        codes = _apply_move(move, word.rank, codes)
    if isinstance(word, CyclicWord):
        return cyclic_reduce(Word(word.rank, codes))[0]
    return Word(word.rank, codes)


def substitution(generator_text: str, image_text: str, rank: int) -> Automorphism:
    """Single-move automorphism from letter text, e.g. ("b", "ba")."""
    return Automorphism(rank, (parse_move(f"{generator_text}->{image_text}", rank),))


def move_json(move: Move, rank: int) -> Dict[str, str]:
    """{"sub": "b->ba"}, {"invert": "a"} or {"swap": "a<->b"}."""
    if isinstance(move, Substitute):
        return {"sub": move_text(move, rank)}
    if isinstance(move, Invert):
        return {"invert": code_text(letter_code(move.generator, 1), rank)}
    return {"swap": move_text(move, rank)}


def move_from_json(data: Dict[str, str], rank: int) -> Move:
    if len(data) != 1:
        raise InvalidMove(f"move object needs exactly one key, got {sorted(data)}")
    kind, value = next(iter(data.items()))
    if kind == "sub":
        move = parse_move(value, rank)
        if not isinstance(move, Substitute):
            raise InvalidMove(f"{value!r} is not a substitution")
        return move
    if kind == "invert":
        codes = parse_codes(value, rank)
        if len(codes) != 1 or code_sign(codes[0]) < 0:
            raise InvalidMove(f"cannot invert {value!r}")
        return Invert(code_generator(codes[0]))
    if kind == "swap":
        return parse_move(value, rank)
    raise InvalidMove(f"unknown move kind {kind!r}")


def automorphism_to_json(automorphism: Automorphism) -> List[Dict[str, str]]:
    return [move_json(m, automorphism.rank) for m in automorphism.moves]


def automorphism_from_json(data: List[Dict[str, str]], rank: int) -> Automorphism:
    return Automorphism(rank, tuple(move_from_json(m, rank) for m in data))
