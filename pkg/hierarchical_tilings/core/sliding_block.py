# File: /hierarchical_tilings/core/sliding_block.py
# Directory: /hierarchical_tilings/core

"""
Block maps and sliding block codes.

A code of size n reads the radius-n window around each cell and writes one
output letter from an explicit table. Windows outside the table are errors,
never defaulted.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import PatternError, UnknownWindowError, ValidationError
from .finite_type import WindowSFT, is_member
from .symbolic import (
    Alphabet,
    Letter,
    Pattern,
    PeriodicConfig,
    Window,
    placements,
    project,
    window_at,
)

logger = logging.getLogger(__name__)

Configuration = Union[PeriodicConfig, Pattern]


@dataclass(frozen=True)
class BlockMap:
    """Phi: a finite table from radius-n windows to output letters."""
    radius: int
    table: Mapping[Window, Letter]
    output_alphabet: Alphabet

    def __post_init__(self):
        if self.radius < 0:
            raise ValidationError("block map radius must be nonnegative")
        if not self.table:
            raise ValidationError("block map table must be nonempty")
        object.__setattr__(self, "table", dict(self.table))
        dimensions = set()
        for window, letter in self.table.items():
            if window.radius != self.radius:
                raise ValidationError(f"window {window} has radius {window.radius}, expected {self.radius}")
            if letter not in self.output_alphabet:
                raise ValidationError(f"output letter {letter!r} is not in the output alphabet")
            dimensions.add(window.dimension)
        if len(dimensions) != 1:
            raise ValidationError("block map windows must share one dimension")

    def __hash__(self) -> int:
        return hash((self.radius, frozenset(self.table.items()), self.output_alphabet))

    @property
    def dimension(self) -> int:
        return next(iter(self.table)).dimension

    @property
    def domain(self) -> FrozenSet[Window]:
        return frozenset(self.table)

    def lookup(self, window: Window, center: Tuple[int, ...]) -> Letter:
        try:
            return self.table[window]
        except KeyError:
            raise UnknownWindowError(window, center) from None

    def entries(self) -> List[Tuple[str, Letter]]:
        """(window text, letter) pairs sorted by window text."""
        return sorted((w.text(), letter) for w, letter in self.table.items())


@dataclass(frozen=True)
class SlidingBlockCode:
    """phi(x)_j = Phi(Pi_n[sigma^j x])."""
    block_map: BlockMap

    @property
    def radius(self) -> int:
        return self.block_map.radius

    @property
    def dimension(self) -> int:
        return self.block_map.dimension

    @property
    def output_alphabet(self) -> Alphabet:
        return self.block_map.output_alphabet


@dataclass
class ExtensionResult:
    """A code applied to a Y_p member, with the largest verified target radius."""
    output: PeriodicConfig
    verified_radius: Optional[int]
    checked: List[int] = field(default_factory=list)


@dataclass(frozen=True)
class Counterexample:
    """Two sample cells with equal input windows but different output letters."""
    window: Window
    first: Tuple[int, Tuple[int, ...], Letter]
    second: Tuple[int, Tuple[int, ...], Letter]


@dataclass
class DetectionResult:
    consistent: bool
    counterexample: Optional[Counterexample] = None

    def __bool__(self) -> bool:
        return self.consistent


def _assemble(extent: Tuple[int, ...], values: Dict[Tuple[int, ...], Letter]) -> Pattern:
    if len(extent) == 1:
        return Pattern.word([values[(i,)] for i in range(extent[0])])
    width, height = extent
    return Pattern.block([[values[(c, r)] for c in range(width)] for r in range(height)])


def apply(code: SlidingBlockCode, config: Configuration) -> Configuration:
    """
    Apply a code cell by cell.

    Periodic input gives periodic output with the same periods; a finite
    pattern loses n cells on every side.

    Raises:
        UnknownWindowError: If a window is missing from the table
        PatternError: If a finite pattern is narrower than one window
    """
    n = code.radius
    if isinstance(config, PeriodicConfig):
        if config.dimension != code.dimension:
            raise ValidationError("code and configuration dimensions differ")
        values = {
            center: code.block_map.lookup(project(config, center, n), center)
            for center in config.centers()
        }
        return PeriodicConfig(_assemble(config.periods, values))

    if config.dimension != code.dimension:
        raise ValidationError("code and pattern dimensions differ")
    if any(side < 2 * n + 1 for side in config.extent):
        raise PatternError("window exceeds pattern")
    values = {}
    for center in placements(config, n):
        letter = code.block_map.lookup(window_at(config, center, n), center)
        values[tuple(x - n for x in center)] = letter
    return _assemble(tuple(side - 2 * n for side in config.extent), values)


def code_from_function(radius: int, domain: Iterable[Window], function: Callable[[Window], Letter],
                       output_alphabet: Alphabet) -> SlidingBlockCode:
    """Tabulate a function of windows over an explicit domain."""
    return SlidingBlockCode(BlockMap(radius, {w: function(w) for w in domain}, output_alphabet))


def letter_code(mapping: Mapping[Letter, Letter], dimension: int = 1,
                output_alphabet: Optional[Alphabet] = None) -> SlidingBlockCode:
    """A radius-0 code renaming letters."""
    output_alphabet = output_alphabet or Alphabet(tuple(sorted(set(mapping.values()))))
    if dimension == 1:
        table = {Window(0, Pattern.word([a])): b for a, b in mapping.items()}
    else:
        table = {Window(0, Pattern.block([[a]])): b for a, b in mapping.items()}
    return SlidingBlockCode(BlockMap(0, table, output_alphabet))


def identity_code(alphabet: Alphabet, dimension: int = 1) -> SlidingBlockCode:
    return letter_code({a: a for a in alphabet}, dimension, alphabet)


def _extend_words(domain: Iterable[Window], radius: int) -> List[Pattern]:
    # 1D words of side 2k+1 all of whose side-(2m+1) subwords lie in domain
    windows = list(domain)
    side = 2 * windows[0].radius + 1
    target = 2 * radius + 1
    by_prefix: Dict[Tuple[Letter, ...], List[Letter]] = {}
    for w in windows:
        by_prefix.setdefault(w.pattern.cells[:-1], []).append(w.pattern.cells[-1])
    words = [w.pattern.cells for w in windows]
    while words and len(words[0]) < target:
        words = [
            word + (letter,)
            for word in words
            for letter in by_prefix.get(word[len(word) - side + 1:], [])
        ]
    return [Pattern.word(word) for word in words]


def compose(outer: SlidingBlockCode, inner: SlidingBlockCode,
            domain: Optional[Iterable[Window]] = None) -> SlidingBlockCode:
    """
    outer ∘ inner as a single code of size m + m'.

    Each radius-(m+m') window is pushed through inner, which leaves a
    radius-m' window, and outer reads its center. In 1D the domain defaults
    to every window all of whose radius-m subwindows inner accepts; windows
    whose inner image outer rejects are dropped. 2D compositions need an
    explicit domain, on which every window must go through.
    """
    if outer.dimension != inner.dimension:
        raise ValidationError("cannot compose codes of different dimensions")
    radius = outer.radius + inner.radius
    explicit = domain is not None
    if explicit:
        candidates = [w.pattern for w in domain]
    elif inner.dimension == 1:
        candidates = _extend_words(inner.block_map.domain, radius)
    else:
        raise ValidationError("2D composition needs an explicit domain")

    table: Dict[Window, Letter] = {}
    for pattern in candidates:
        window = Window(radius, pattern)
        try:
            middle = apply(inner, pattern)
            letter = apply(outer, middle).cells[0]
        except UnknownWindowError:
            if explicit:
                raise
            continue
        table[window] = letter
    logger.debug("composed code of size %d with %d table entries", radius, len(table))
    return SlidingBlockCode(BlockMap(radius, table, outer.output_alphabet))


def extend_to_Yp(code: SlidingBlockCode, p: int, candidate: PeriodicConfig, y_sft: WindowSFT,
                 target: Callable[[int], WindowSFT]) -> ExtensionResult:
    """
    Apply a code defined on the subshift's radius-m windows to a member of Y_p.

    The output is checked against target(r) for r = p - m down to 0 and the
    largest r that verifies is reported.

    Raises:
        ValidationError: If p < m or the candidate is not a member of Y_p
        UnknownWindowError: If a window of the candidate is outside the table
    """
    m = code.radius
    if p < m:
        raise ValidationError(f"p = {p} is smaller than the code size {m}")
    if y_sft.radius != p:
        raise ValidationError(f"Y_p has radius {y_sft.radius}, expected {p}")
    if not is_member(candidate, y_sft).member:
        raise ValidationError(f"candidate {candidate.text()} is not a member of Y_{p}")
    output = apply(code, candidate)
    checked = []
    for r in range(p - m, -1, -1):
        checked.append(r)
        if is_member(output, target(r)).member:
            return ExtensionResult(output, r, checked)
    return ExtensionResult(output, None, checked)


def _sample_cells(source: Configuration, image: Configuration,
                  radius: int) -> Iterable[Tuple[Tuple[int, ...], Window, Letter]]:
    if isinstance(source, PeriodicConfig):
        if not isinstance(image, PeriodicConfig) or image.periods != source.periods:
            raise ValidationError("periodic samples need outputs with the same periods")
        for center in source.centers():
            yield center, project(source, center, radius), image.value_at(center)
        return
    if source.extent != image.extent:
        raise ValidationError("finite samples need equal input and output extents")
    if any(side < 2 * radius + 1 for side in source.extent):
        return
    for center in placements(source, radius):
        yield center, window_at(source, center, radius), image.at(center)


def detect_code(samples: Sequence[Tuple[Configuration, Configuration]], radius: int) -> DetectionResult:
    """
    Look for two cells with the same radius-n input window and different outputs.

    A consistent result only says the samples never contradict a size-n code.
    """
    seen: Dict[Window, Tuple[int, Tuple[int, ...], Letter]] = {}
    for index, (source, image) in enumerate(samples):
        for center, window, letter in _sample_cells(source, image, radius):
            previous = seen.setdefault(window, (index, center, letter))
            if previous[2] != letter:
                logger.debug("radius %d contradicted by window %s", radius, window.text())
                return DetectionResult(False, Counterexample(window, previous, (index, center, letter)))
    return DetectionResult(True)
