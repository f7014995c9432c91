# File: /hierarchical_tilings/core/substitution.py
# Directory: /hierarchical_tilings/core

"""
One-dimensional substitutions: rules, level-k letters, the abelianization
matrix, primitivity and saturated language enumeration.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import SubstitutionError, ValidationError
from .symbolic import Alphabet, Letter, Pattern, factors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelLetter:
    """A letter of level k: the k-fold image psi^k(base)."""
    base: Letter
    level: int
    expansion: Pattern

    @property
    def length(self) -> int:
        return len(self.expansion)


class Substitution1D:
    """A non-erasing substitution on a finite alphabet."""

    def __init__(self, alphabet: Union[Alphabet, Sequence[Letter]],
                 rules: Mapping[Letter, Union[str, Sequence[Letter], Pattern]]):
        """
        Initialize a substitution.

        Args:
            alphabet: Ordered letters
            rules: Image of every letter; strings are read one character per letter

        Raises:
            ValidationError: If a rule is missing, empty, uses an unknown letter,
                or no image has length at least 2
        """
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(tuple(alphabet))
        self.rules: Dict[Letter, Tuple[Letter, ...]] = {}
        for letter in self.alphabet:
            if letter not in rules:
                raise ValidationError(f"no rule for letter {letter!r}")
            image = rules[letter]
            image = image.cells if isinstance(image, Pattern) else tuple(image)
            if not image:
                raise ValidationError(f"rule for {letter!r} is erasing")
            unknown = [x for x in image if x not in self.alphabet]
            if unknown:
                raise ValidationError(f"rule for {letter!r} uses unknown letters {unknown}")
            self.rules[letter] = image
        extra = set(rules) - set(self.alphabet.letters)
        if extra:
            raise ValidationError(f"rules given for letters outside the alphabet: {sorted(extra)}")
        if max(len(image) for image in self.rules.values()) < 2:
            raise ValidationError("growth condition fails: some image must have length at least 2")

        # (letter, level) -> expansion; inserts are idempotent
        self._lock = threading.Lock()
        self._expansions: Dict[Tuple[Letter, int], Tuple[Letter, ...]] = {}
        self._lengths: Dict[Tuple[Letter, int], int] = {}
        self._languages: Dict[Tuple[int, Optional[int]], FrozenSet[Pattern]] = {}

    def __repr__(self) -> str:
        rules = ", ".join(f"{a}->{''.join(self.rules[a])}" for a in self.alphabet)
        return f"Substitution1D({rules})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution1D):
            return NotImplemented
        return self.alphabet == other.alphabet and self.rules == other.rules

    def __hash__(self) -> int:
        return hash((self.alphabet, tuple(self.rules[a] for a in self.alphabet)))

    def rule(self, letter: Letter) -> Pattern:
        return Pattern.word(self.rules[letter])

    def apply(self, word: Sequence[Letter]) -> Tuple[Letter, ...]:
        """One application of the substitution to a word."""
        out: List[Letter] = []
        for letter in word:
            out.extend(self.rules[letter])
        return tuple(out)

    def _expansion(self, letter: Letter, level: int) -> Tuple[Letter, ...]:
        key = (letter, level)
        cached = self._expansions.get(key)
        if cached is not None:
            return cached
        if level == 0:
            value: Tuple[Letter, ...] = (letter,)
        else:
            value = tuple(
                x for child in self.rules[letter] for x in self._expansion(child, level - 1)
            )
        with self._lock:
            self._expansions.setdefault(key, value)
        return value

    def iterate(self, letter: Letter, level: int) -> Pattern:
        """psi^k(letter)."""
        if letter not in self.alphabet:
            raise ValidationError(f"unknown letter {letter!r}")
        if level < 0:
            raise ValidationError("level must be nonnegative")
        # warm the memo bottom-up so recursion depth stays at one level
        for k in range(level + 1):
            for a in self.alphabet:
                self._expansion(a, k)
        return Pattern.word(self._expansion(letter, level))

    def level_letter(self, letter: Letter, level: int) -> LevelLetter:
        return LevelLetter(letter, level, self.iterate(letter, level))

    def length(self, letter: Letter, level: int) -> int:
        """|psi^k(letter)| as an exact integer, without building the word."""
        key = (letter, level)
        cached = self._lengths.get(key)
        if cached is not None:
            return cached
        lengths = {a: 1 for a in self.alphabet}
        for _ in range(level):
            lengths = {a: sum(lengths[x] for x in self.rules[a]) for a in self.alphabet}
        with self._lock:
            for a, value in lengths.items():
                self._lengths.setdefault((a, level), value)
        return lengths[letter]

    def parents(self, letter: Letter) -> List[Tuple[Letter, int]]:
        """Every (parent, child index) with rules[parent][index] == letter."""
        return [
            (parent, index)
            for parent in self.alphabet
            for index, child in enumerate(self.rules[parent])
            if child == letter
        ]

    def abelianization(self) -> np.ndarray:
        """M[i][j] = occurrences of letter i in psi(letter j)."""
        n = len(self.alphabet)
        matrix = np.zeros((n, n), dtype=np.int64)
        for j, letter in enumerate(self.alphabet):
            for child in self.rules[letter]:
                matrix[self.alphabet.index(child), j] += 1
        return matrix

    def is_primitive(self) -> bool:
        """Some power of the abelianization (up to the size squared) is positive."""
        if max(len(image) for image in self.rules.values()) < 2:
            return False
        support = (self.abelianization() > 0).astype(np.int64)
        n = support.shape[0]
        power = support.copy()
        for _ in range(n * n):
            if (power > 0).all():
                return True
            power = ((power @ support) > 0).astype(np.int64)
        return bool((power > 0).all())

    def language(self, length: int, level_cap: Optional[int] = None,
                 use_cache: bool = True) -> FrozenSet[Pattern]:
        """
        Length-m words of the subshift, by saturation over level-k letters.

        Stops at the first k where every letter's level-k expansion has length at
        least m and the union of subwords over all letters equals that of level
        k+1.

        Args:
            length: Word length m >= 1
            level_cap: Upper bound on k; required for non-primitive rules
            use_cache: Reuse a previously saturated set; pass False to re-enumerate

        Returns:
            The saturated set of words

        Raises:
            SubstitutionError: If the rule is not primitive and no cap is given,
                or if the cap is reached before saturation for a primitive rule
        """
        key = (length, level_cap)
        if use_cache and key in self._languages:
            return self._languages[key]
        words = self._saturate(length, level_cap)
        with self._lock:
            self._languages.setdefault(key, words)
        return words

    def _saturate(self, length: int, level_cap: Optional[int]) -> FrozenSet[Pattern]:
        if length < 1:
            raise ValidationError("word length must be at least 1")
        primitive = self.is_primitive()
        if not primitive and level_cap is None:
            raise SubstitutionError("saturation not guaranteed")
        cap = level_cap if level_cap is not None else 64

        def level_words(k: int) -> FrozenSet[Pattern]:
            words: set = set()
            for a in self.alphabet:
                words |= factors(self.iterate(a, k), length)
            return frozenset(words)

        k = 0
        while min(self.length(a, k) for a in self.alphabet) < length and k < cap:
            k += 1
        current = level_words(k)
        while k < cap:
            following = level_words(k + 1)
            if following == current:
                logger.debug("language(%d) saturated with %d words", length, len(current), extra={"level_tag": k})
                return current
            current = following
            k += 1
        if primitive and level_cap is None:
            raise SubstitutionError(f"language({length}) did not saturate by level {cap}")
        logger.debug("language(%d) stopped at level cap %d", length, cap)
        return current


def fibonacci() -> Substitution1D:
    """psi(a) = b, psi(b) = ab."""
    return Substitution1D(Alphabet(("a", "b")), {"a": "b", "b": "ab"})


def factors_at_level(substitution: Substitution1D, length: int, level: int) -> FrozenSet[Pattern]:
    """Length-m subwords of psi^level(a) over every letter a, with no saturation test."""
    words: set = set()
    for letter in substitution.alphabet:
        words |= factors(substitution.iterate(letter, level), length)
    return frozenset(words)


def words_text(words) -> List[str]:
    """Sorted compact renderings of a word set."""
    return sorted(w.text() for w in words)
