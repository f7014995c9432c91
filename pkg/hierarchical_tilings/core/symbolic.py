# File: /hierarchical_tilings/core/symbolic.py
# Directory: /hierarchical_tilings/core

"""
Symbolic substrate: alphabets, rectangular patterns, windows, periodic
configurations, shifts, window projection and containment.

Coordinates: the first axis is horizontal (columns, increasing rightward),
the second vertical (rows, increasing upward). A 2D pattern stores its cells
row by row from the bottom row up, so cell (c, r) sits at index r * width + c.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union

from ..exceptions import PatternError, ValidationError

Letter = str
Vector = Union[int, Tuple[int, ...]]

PRODUCT_SEPARATOR = "×"


def product_letter(horizontal: Letter, vertical: Letter) -> Letter:
    """Token of the product letter u×v."""
    return f"{horizontal}{PRODUCT_SEPARATOR}{vertical}"


def split_product(letter: Letter) -> Tuple[Letter, Letter]:
    horizontal, sep, vertical = letter.partition(PRODUCT_SEPARATOR)
    if not sep:
        raise ValidationError(f"{letter!r} is not a product letter")
    return horizontal, vertical


def as_vector(j: Vector, dimension: int) -> Tuple[int, ...]:
    if isinstance(j, int):
        j = (j,)
    j = tuple(j)
    if len(j) != dimension:
        raise ValidationError(f"vector {j} does not have dimension {dimension}")
    return j


@dataclass(frozen=True)
class Alphabet:
    """An ordered finite set of letter tokens."""
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValidationError("alphabet must be nonempty")
        if len(set(self.letters)) != len(self.letters):
            raise ValidationError(f"alphabet has duplicate letters: {self.letters}")

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters

    def index(self, letter: Letter) -> int:
        return self.letters.index(letter)

    def sort(self, letters: Iterable[Letter]) -> List[Letter]:
        """Sort letters by the alphabet's declared order."""
        return sorted(letters, key=self.index)


@dataclass(frozen=True)
class Pattern:
    """A total assignment of letters to the box [0, N) or [0, N) x [0, M)."""
    extent: Tuple[int, ...]
    cells: Tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "extent", tuple(self.extent))
        object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.extent) not in (1, 2):
            raise ValidationError(f"patterns are 1D or 2D, got extent {self.extent}")
        if any(side <= 0 for side in self.extent):
            raise ValidationError(f"pattern sides must be positive, got {self.extent}")
        area = 1
        for side in self.extent:
            area *= side
        if area != len(self.cells):
            raise ValidationError(f"extent {self.extent} does not match {len(self.cells)} cells")

    @classmethod
    def word(cls, letters: Union[str, Sequence[Letter]]) -> "Pattern":
        """1D pattern; a plain string is read one character per letter."""
        cells = tuple(letters)
        return cls((len(cells),), cells)

    @classmethod
    def block(cls, rows: Sequence[Sequence[Letter]]) -> "Pattern":
        """2D pattern from rows listed bottom row first."""
        rows = [tuple(row) for row in rows]
        if not rows or len({len(row) for row in rows}) != 1:
            raise ValidationError("block rows must be nonempty and of equal width")
        return cls((len(rows[0]), len(rows)), tuple(letter for row in rows for letter in row))

    @property
    def dimension(self) -> int:
        return len(self.extent)

    @property
    def width(self) -> int:
        return self.extent[0]

    @property
    def height(self) -> int:
        return self.extent[1] if self.dimension == 2 else 1

    def __len__(self) -> int:
        return len(self.cells)

    def at(self, coordinate: Vector) -> Letter:
        k = as_vector(coordinate, self.dimension)
        if self.dimension == 1:
            return self.cells[k[0]]
        return self.cells[k[1] * self.extent[0] + k[0]]

    def rows(self) -> List[Tuple[Letter, ...]]:
        """Rows bottom-up; a 1D pattern is a single row."""
        w = self.width
        return [self.cells[r * w:(r + 1) * w] for r in range(self.height)]

    def coordinates(self) -> Iterator[Tuple[int, ...]]:
        if self.dimension == 1:
            for i in range(self.extent[0]):
                yield (i,)
        else:
            for c in range(self.extent[0]):
                for r in range(self.extent[1]):
                    yield (c, r)

    def sub(self, origin: Vector, extent: Vector) -> "Pattern":
        o = as_vector(origin, self.dimension)
        e = as_vector(extent, self.dimension)
        if any(oi < 0 or oi + ei > si for oi, ei, si in zip(o, e, self.extent)):
            raise PatternError(f"box at {o} of extent {e} exceeds pattern of extent {self.extent}")
        if self.dimension == 1:
            return Pattern(e, self.cells[o[0]:o[0] + e[0]])
        w = self.extent[0]
        cells = []
        for r in range(o[1], o[1] + e[1]):
            cells.extend(self.cells[r * w + o[0]:r * w + o[0] + e[0]])
        return Pattern(e, tuple(cells))

    def letters(self) -> FrozenSet[Letter]:
        return frozenset(self.cells)

    def text(self) -> str:
        """Compact rendering; 2D rows are listed top-down separated by '/'."""
        def join(row):
            return "".join(row) if all(len(x) == 1 for x in row) else " ".join(row)
        if self.dimension == 1:
            return join(self.cells)
        return "/".join(join(row) for row in reversed(self.rows()))

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Window:
    """The restriction of a configuration to the cube [-n, n]^d."""
    radius: int
    pattern: Pattern

    def __post_init__(self):
        if self.radius < 0:
            raise ValidationError("window radius must be nonnegative")
        side = 2 * self.radius + 1
        if any(s != side for s in self.pattern.extent):
            raise ValidationError(
                f"window of radius {self.radius} needs side {side}, got {self.pattern.extent}"
            )

    @property
    def dimension(self) -> int:
        return self.pattern.dimension

    def at(self, offset: Vector) -> Letter:
        """Letter at an offset in [-n, n]^d relative to the center."""
        k = as_vector(offset, self.dimension)
        return self.pattern.at(tuple(x + self.radius for x in k))

    @property
    def center(self) -> Letter:
        return self.at((0,) * self.dimension)

    def restrict(self, radius: int) -> "Window":
        """Concentric subwindow of smaller radius."""
        if radius > self.radius:
            raise PatternError("cannot restrict a window to a larger radius")
        margin = self.radius - radius
        side = 2 * radius + 1
        return Window(radius, self.pattern.sub((margin,) * self.dimension, (side,) * self.dimension))

    def text(self) -> str:
        return self.pattern.text()

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class PeriodicConfig:
    """The configuration tiling Z^d by translates of a fundamental domain."""
    domain: Pattern

    @property
    def dimension(self) -> int:
        return self.domain.dimension

    @property
    def periods(self) -> Tuple[int, ...]:
        return self.domain.extent

    def value_at(self, k: Vector) -> Letter:
        k = as_vector(k, self.dimension)
        return self.domain.at(tuple(x % n for x, n in zip(k, self.periods)))

    def block(self, origin: Vector, extent: Vector) -> Pattern:
        """The finite pattern of this configuration on the box origin + [0, extent)."""
        o = as_vector(origin, self.dimension)
        e = as_vector(extent, self.dimension)
        if self.dimension == 1:
            return Pattern(e, tuple(self.value_at(o[0] + i) for i in range(e[0])))
        return Pattern(e, tuple(
            self.value_at((o[0] + c, o[1] + r)) for r in range(e[1]) for c in range(e[0])
        ))

    def centers(self) -> Iterator[Tuple[int, ...]]:
        """The lattice points of one fundamental domain."""
        return self.domain.coordinates()

    def text(self) -> str:
        return f"({self.domain.text()})^∞"


def shift(config: PeriodicConfig, j: Vector) -> PeriodicConfig:
    """sigma^j: the value at k becomes the input's value at k + j."""
    v = as_vector(j, config.dimension)
    return PeriodicConfig(config.block(v, config.periods))


def project(config: PeriodicConfig, center: Vector, radius: int) -> Window:
    """Pi_n of the configuration shifted to the given center."""
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    c = as_vector(center, config.dimension)
    side = 2 * radius + 1
    origin = tuple(x - radius for x in c)
    return Window(radius, config.block(origin, (side,) * config.dimension))


def window_at(pattern: Pattern, center: Vector, radius: int) -> Window:
    """The radius-n window of a finite pattern around a cell."""
    c = as_vector(center, pattern.dimension)
    side = 2 * radius + 1
    return Window(radius, pattern.sub(tuple(x - radius for x in c), (side,) * pattern.dimension))


def placements(pattern: Pattern, radius: int) -> Iterator[Tuple[int, ...]]:
    """Centers of every radius-n window fully inside the pattern."""
    side = 2 * radius + 1
    if any(s < side for s in pattern.extent):
        raise PatternError("window exceeds pattern")
    if pattern.dimension == 1:
        for i in range(radius, pattern.extent[0] - radius):
            yield (i,)
    else:
        for c in range(radius, pattern.extent[0] - radius):
            for r in range(radius, pattern.extent[1] - radius):
                yield (c, r)


def subwindows(pattern: Pattern, radius: int) -> FrozenSet[Window]:
    """All distinct radius-n windows occurring in a finite pattern."""
    return frozenset(window_at(pattern, center, radius) for center in placements(pattern, radius))


def factors(word: Pattern, length: int) -> FrozenSet[Pattern]:
    """Distinct length-m subwords of a 1D pattern (any m, even or odd)."""
    cells = word.cells
    if length > len(cells):
        return frozenset()
    return frozenset(Pattern((length,), cells[i:i + length]) for i in range(len(cells) - length + 1))


def contains(big: Pattern, small: Pattern) -> List[Vector]:
    """Every offset at which small occurs in big, in lexicographic order."""
    if big.dimension != small.dimension:
        raise ValidationError("containment needs patterns of equal dimension")
    if any(s > b for s, b in zip(small.extent, big.extent)):
        return []
    if big.dimension == 1:
        m = small.extent[0]
        return [i for i in range(big.extent[0] - m + 1) if big.cells[i:i + m] == small.cells]
    big_rows = big.rows()
    small_rows = small.rows()
    w, h = small.extent
    hits = []
    for c in range(big.extent[0] - w + 1):
        for r in range(big.extent[1] - h + 1):
            if all(big_rows[r + i][c:c + w] == small_rows[i] for i in range(h)):
                hits.append((c, r))
    return hits


def cyclic_factors(config: PeriodicConfig, length: int) -> List[Tuple[int, Pattern]]:
    """(position, word) for every length-m window of a 1D periodic configuration."""
    return [(i, config.block(i, length)) for i in range(config.periods[0])]
