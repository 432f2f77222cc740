"""
Word kernel for free groups of finite rank
Reduced words, cyclic words in canonical rotation, and their enumeration
"""
import re
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import InvalidLetter, NotReduced, RankMismatch

# Set up logging
logger = logging.getLogger(__name__)

LETTER_NAMES = "abcdefg"
MAX_LETTER_RANK = len(LETTER_NAMES)

_TOKEN_RE = re.compile(r'([xX])(\d+)')
_TOKEN_TEXT_RE = re.compile(r'\s*(?:[xX]\d+\s*)+')

# A letter is stored as its code: 2*(g-1) for x_g and 2*(g-1)+1 for x_g^-1.
# Code order is the letter order a < A < b < B < ...


def letter_code(generator: int, sign: int) -> int:
    return 2 * (generator - 1) + (0 if sign > 0 else 1)


def code_generator(code: int) -> int:
    return code // 2 + 1


def code_sign(code: int) -> int:
    return 1 if code % 2 == 0 else -1


def invert_code(code: int) -> int:
    return code ^ 1


@dataclass(frozen=True, order=True)
class Letter:
    """A generator x_g or its inverse, ordered a < A < b < B < ..."""
    generator: int
    sign: int

    @property
    def code(self) -> int:
        return letter_code(self.generator, self.sign)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code_generator(code), code_sign(code))

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def to_text(self, rank: int) -> str:
        return code_text(self.code, rank)


def code_text(code: int, rank: int) -> str:
    generator, sign = code_generator(code), code_sign(code)
    if rank <= MAX_LETTER_RANK:
        name = LETTER_NAMES[generator - 1]
        return name if sign > 0 else name.upper()
    return f"{'x' if sign > 0 else 'X'}{generator}"


def codes_text(codes: Sequence[int], rank: int) -> str:
    parts = [code_text(code, rank) for code in codes]
    return ("" if rank <= MAX_LETTER_RANK else " ").join(parts)


def parse_codes(text: str, rank: int) -> List[int]:
    """
    Parse letters ("abAB") or tokens ("x1 X2") into letter codes

    Args:
        text: Word text, letters a..g / A..G or tokens xN / XN
        rank: Rank of the ambient free group

    Returns:
        Unreduced list of letter codes
    """
    text = text.strip()
    codes = []
    if text and _TOKEN_TEXT_RE.fullmatch(text):
        for mark, digits in _TOKEN_RE.findall(text):
            generator = int(digits)
            if not 1 <= generator <= rank:
                raise InvalidLetter(f"{mark}{digits} is not a generator of rank {rank}")
            codes.append(letter_code(generator, 1 if mark == 'x' else -1))
        return codes

    for char in text:
        if char.isspace():
            continue
        lowered = char.lower()
        if lowered not in LETTER_NAMES:
            raise InvalidLetter(f"{char!r} is not a letter")
        generator = LETTER_NAMES.index(lowered) + 1
        if generator > rank:
            raise InvalidLetter(f"{char!r} is not a generator of rank {rank}")
        codes.append(letter_code(generator, 1 if char.islower() else -1))
    return codes


def _check_codes(rank: int, codes: Iterable[Union[int, Letter]]) -> List[int]:
    checked = []
    for item in codes:
        code = item.code if isinstance(item, Letter) else int(item)
        if not 0 <= code < 2 * rank:
            raise InvalidLetter(f"letter code {code} is outside rank {rank}")
        checked.append(code)
    return checked


def _free_reduce(codes: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for code in codes:
        if stack and stack[-1] == invert_code(code):
            stack.pop()
        else:
            stack.append(code)
    return tuple(stack)


def canonical_rotation(codes: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation under the letter order."""
    codes = tuple(codes)
    if not codes:
        return codes
    return min(codes[i:] + codes[:i] for i in range(len(codes)))


@dataclass(frozen=True)
class Word:
    """
    A freely reduced word; build through reduce() or Word.parse()

    Raises:
        InvalidLetter: on a code outside the rank
        NotReduced: when two adjacent letters cancel
    """
    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_codes(self.rank, self.letters)
        for i in range(1, len(self.letters)):
            if self.letters[i] == invert_code(self.letters[i - 1]):
                raise NotReduced(f"letters {i - 1} and {i} of {codes_text(self.letters, self.rank)} cancel")

    @classmethod
    def parse(cls, text: str, rank: int) -> "Word":
        return reduce(rank, parse_codes(text, rank))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.to_text()

    def __add__(self, other: "Word") -> "Word":
        _same_rank(self, other)
        return reduce(self.rank, self.letters + other.letters)

    def to_text(self) -> str:
        return codes_text(self.letters, self.rank)

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(invert_code(c) for c in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(code % 2 == 0 for code in self.letters)

    def power(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else self.inverse()
        return reduce(self.rank, base.letters * abs(exponent))


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word stored as its canonical rotation."""
    rank: int
    letters: Tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str, rank: int) -> "CyclicWord":
        return cyclic_reduce(Word.parse(text, rank))[0]

    @classmethod
    def from_codes(cls, rank: int, codes: Iterable[int]) -> "CyclicWord":
        return cyclic_reduce(reduce(rank, codes))[0]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        return codes_text(self.letters, self.rank)

    def as_word(self) -> Word:
        return Word(self.rank, self.letters)

    def inverse(self) -> "CyclicWord":
        return CyclicWord.from_codes(self.rank, self.as_word().inverse().letters)

    def is_positive(self) -> bool:
        return all(code % 2 == 0 for code in self.letters)

    def rotations(self) -> Iterator[Tuple[int, ...]]:
        n = len(self.letters)
        for i in range(n):
            yield self.letters[i:] + self.letters[:i]

    def generators(self) -> List[int]:
        return sorted({code_generator(c) for c in self.letters})


WordLike = Union[Word, CyclicWord]


def _same_rank(left: WordLike, right: WordLike) -> None:
    if left.rank != right.rank:
        raise RankMismatch(f"rank {left.rank} does not match rank {right.rank}")


def reduce(rank: int, letters: Iterable[Union[int, Letter]]) -> Word:
    """
    Freely reduce a raw letter sequence

    Args:
        rank: Rank of the free group
        letters: Letter codes or Letter objects

    Returns:
        The unique freely reduced Word
    """
    return Word(rank, _free_reduce(_check_codes(rank, letters)))


def cyclic_reduce(word: Word) -> Tuple[CyclicWord, Word]:
    """
    Cyclically reduce and canonically rotate a word

    Returns:
        (cyclic word, conjugator c) with word = c * cyclic * c^-1
    """
    codes = word.letters
    start, end = 0, len(codes)
    while end - start >= 2 and codes[start] == invert_code(codes[end - 1]):
        start += 1
        end -= 1
    core = codes[start:end]
    canonical = canonical_rotation(core)
    shift = next((i for i in range(len(core)) if core[i:] + core[:i] == canonical), 0)
    conjugator = reduce(word.rank, codes[:start] + core[:shift])
    return CyclicWord(word.rank, canonical), conjugator


def contains_cyclic_subword(word: CyclicWord, pattern: Union[Word, Sequence[int]]) -> bool:
    """True when pattern occurs in the periodic extension of the word."""
    needle = tuple(pattern.letters if isinstance(pattern, Word) else pattern)
    if not needle:
        return True
    n = len(word.letters)
    if n == 0:
        return False
    m = len(needle)
    span = n + m - 1
    extended = (word.letters * (span // n + 1))[:span]
    return any(extended[i:i + m] == needle for i in range(n))


def syllables(word: WordLike) -> List[Tuple[int, int]]:
    """
    Maximal runs of one generator as (generator, signed exponent)

    For a cyclic word the first and last runs merge when they share a generator.
    """
    runs: List[List[int]] = []
    for code in word.letters:
        generator = code_generator(code)
        if runs and runs[-1][0] == generator:
            runs[-1][1] += code_sign(code)
        else:
            runs.append([generator, code_sign(code)])
    if isinstance(word, CyclicWord) and len(runs) > 1 and runs[0][0] == runs[-1][0]:
        first = runs.pop(0)
        runs[-1][1] += first[1]
    return [(g, e) for g, e in runs]


def abelianize(word: WordLike) -> Tuple[int, ...]:
    """Exponent sum of each generator."""
    sums = [0] * word.rank
    for code in word.letters:
        sums[code_generator(code) - 1] += code_sign(code)
    return tuple(sums)


def is_positive(word: WordLike) -> bool:
    return word.is_positive()


def enumerate_reduced(rank: int, length: int) -> Iterator[Word]:
    """All reduced words of exactly this length, in lexicographic order."""
    alphabet = 2 * rank
    if length == 0:
        yield Word(rank, ())
        return

    prefix: List[int] = []

    def extend(depth: int) -> Iterator[Word]:
        if depth == length:
            yield Word(rank, tuple(prefix))
            return
        for code in range(alphabet):
            if prefix and code == invert_code(prefix[-1]):
                continue
            prefix.append(code)
            yield from extend(depth + 1)
            prefix.pop()

    yield from extend(0)


def enumerate_cyclic(rank: int, length: int, first_letter: Optional[int] = None) -> Iterator[CyclicWord]:
    """
    Each cyclically reduced cyclic word of the given length exactly once

    Necklace generation (prenecklace tree) over the 2*rank letter codes,
    pruned at adjacent inverse pairs, keeping necklaces whose last and
    first letters are not inverse.

    Args:
        rank: Rank of the free group
        length: Word length (0 yields nothing)
        first_letter: Optional letter code restricting the first letter (shard)
    """
    if length <= 0:
        return
    alphabet = 2 * rank
    seq = [0] * (length + 1)

    def gen(t: int, p: int) -> Iterator[CyclicWord]:
        if t > length:
            if length % p == 0 and seq[length] != invert_code(seq[1]):
                yield CyclicWord(rank, tuple(seq[1:]))
            return
        lowest = seq[t - p]
        for code in range(lowest, alphabet):
            if t == 1 and first_letter is not None and code != first_letter:
                continue
            if t > 1 and code == invert_code(seq[t - 1]):
                continue
            seq[t] = code
            yield from gen(t + 1, p if code == lowest else t)

    yield from gen(1, 1)
