# File: /hierarchical_tilings/core/tiling_line.py
# Directory: /hierarchical_tilings/core

"""
Fibonacci tilings of the line.

A tiling is stored hierarchically: the level-0 tile holding the origin, the
chain of supertiles above it (letter of each level and the child index of the
level below inside it), and the exact displacement of the origin from the
base tile's left endpoint. Coordinates are exact elements of Q[tau].

The chain is finite up to some depth and may continue through a seeded
choice of parents or a repeating cycle of parents. Tiles over a horizon are
produced by descending from the first supertile covering it.
"""

import bisect
import logging
import sys
import threading
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import TilingConfig
from ..exceptions import GeometryError, TilingError, ValidationError
from .golden import ONE, TAU, ZERO, GoldenLike, GoldenNumber, golden, golden_max
from .substitution import fibonacci
from .symbolic import Letter, Pattern

logger = logging.getLogger(__name__)

FIBONACCI = fibonacci()

Tile = Tuple[Letter, GoldenNumber, GoldenNumber]

# error floor of the metric's float candidate filter
_FLOAT_SLACK = 1e-9


def _float_slack(reach: float) -> float:
    """Bound on the error of a float metric estimate over points within +-reach."""
    return _FLOAT_SLACK + 8 * reach * sys.float_info.epsilon


@dataclass(frozen=True)
class TileSpec:
    """Lengths of the two prototiles A and B."""
    length_a: GoldenNumber
    length_b: GoldenNumber

    def __post_init__(self):
        object.__setattr__(self, "length_a", golden(self.length_a))
        object.__setattr__(self, "length_b", golden(self.length_b))
        if self.length_a <= 0 or self.length_b <= 0:
            raise ValidationError(f"tile lengths must be positive, got {self}")

    def __str__(self) -> str:
        return f"({self.length_a}, {self.length_b})"

    def length(self, letter: Letter) -> GoldenNumber:
        return supertile_lengths(self, 0)[letter]

    @property
    def max_length(self) -> GoldenNumber:
        return golden_max([self.length_a, self.length_b])

    @property
    def is_standard(self) -> bool:
        """|B| = tau |A|, the case with an inflation symmetry."""
        return self.length_b == TAU * self.length_a


def length_invariant(spec: TileSpec) -> GoldenNumber:
    """|A| + tau |B|; equal invariants are exactly the conjugate pairs."""
    return spec.length_a + TAU * spec.length_b


def standard_spec(invariant: GoldenLike) -> TileSpec:
    """The spec c(1, tau) whose invariant is the given value."""
    scale = golden(invariant) / (2 + TAU)
    return TileSpec(scale, scale * TAU)


@lru_cache(maxsize=None)
def supertile_lengths(spec: TileSpec, level: int) -> Dict[Letter, GoldenNumber]:
    """
    Lengths of the level-k supertiles.

    L_{k+1}(b) = L_k(a) + L_k(b) and L_{k+1}(a) = L_k(b).
    """
    if level < 0:
        raise ValidationError("level must be nonnegative")
    if level == 0:
        return {"a": spec.length_a, "b": spec.length_b}
    below = supertile_lengths(spec, level - 1)
    return {
        letter: sum((below[child] for child in FIBONACCI.rules[letter]), ZERO)
        for letter in FIBONACCI.alphabet
    }


def length_differences(source: TileSpec, target: TileSpec, level: int) -> Dict[Letter, GoldenNumber]:
    """
    L^X_k - L^Y_k per letter.

    With equal invariants these are tau*s_k for a and -s_k for b, where
    s_k = (-1/tau)^k (|B_Y| - |B_X|).
    """
    xs = supertile_lengths(source, level)
    ys = supertile_lengths(target, level)
    return {letter: xs[letter] - ys[letter] for letter in xs}


@dataclass(frozen=True)
class TowerExtension:
    """
    How a tower continues above its materialized levels.

    Exactly one of seed and cycle is set. The j-th generated level is
    base_depth + j; seeded choices draw from default_rng([seed, j]), cycles
    use cycle[j mod len(cycle)].
    """
    seed: Optional[int] = None
    cycle: Tuple[Tuple[Letter, int], ...] = ()
    base_depth: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cycle", tuple((p, int(i)) for p, i in self.cycle))
        if (self.seed is None) == (not self.cycle):
            raise ValidationError("a tower extension needs exactly one of seed or cycle")
        if self.seed is not None and self.seed < 0:
            raise ValidationError("extension seed must be nonnegative")

    def choose(self, letter: Letter, level: int) -> Tuple[Letter, int]:
        """(parent, child index) of the supertile above a letter at a level."""
        j = level - self.base_depth
        if j < 0:
            raise TilingError(f"level {level} is below the extension's base depth {self.base_depth}")
        if self.cycle:
            parent, index = self.cycle[j % len(self.cycle)]
            rule = FIBONACCI.rules[parent]
            if index >= len(rule) or rule[index] != letter:
                raise TilingError(f"cycle entry ({parent}, {index}) does not contain {letter!r}")
            return parent, index
        options = FIBONACCI.parents(letter)
        rng = np.random.default_rng([self.seed, j])
        return options[int(rng.integers(len(options)))]

    def shifted(self, levels: int) -> "TowerExtension":
        return replace(self, base_depth=self.base_depth + levels)


class Tower:
    """Letters of levels 0..N and child indices, deepened lazily on demand."""

    def __init__(self, letters: Sequence[Letter], indices: Sequence[int],
                 extension: Optional[TowerExtension] = None, max_depth: int = 256):
        if len(letters) != len(indices) + 1:
            raise ValidationError("a tower of depth N needs N+1 letters and N indices")
        for k, index in enumerate(indices):
            parent = letters[k + 1]
            if parent not in FIBONACCI.alphabet or letters[k] not in FIBONACCI.alphabet:
                raise ValidationError(f"unknown letter at level {k}")
            rule = FIBONACCI.rules[parent]
            if not 0 <= index < len(rule) or rule[index] != letters[k]:
                raise ValidationError(
                    f"level {k}: {letters[k]!r} is not child {index} of {parent!r}"
                )
        if letters[0] not in FIBONACCI.alphabet:
            raise ValidationError(f"unknown letter {letters[0]!r}")
        self._letters: List[Letter] = list(letters)
        self._indices: List[int] = [int(i) for i in indices]
        self.extension = extension
        self.max_depth = max_depth
        self._lock = threading.Lock()

    @property
    def depth(self) -> int:
        """Number of materialized levels above the base tile."""
        return len(self._indices)

    def ensure(self, depth: int) -> None:
        if depth <= len(self._indices):
            return
        if depth > self.max_depth:
            raise TilingError(f"tower depth {depth} exceeds the cap {self.max_depth}")
        if self.extension is None:
            raise TilingError(f"tower ends at depth {len(self._indices)}; {depth} requested")
        with self._lock:
            while len(self._indices) < depth:
                k = len(self._indices)
                parent, index = self.extension.choose(self._letters[k], k)
                self._letters.append(parent)
                self._indices.append(index)

    def letter(self, level: int) -> Letter:
        self.ensure(level)
        return self._letters[level]

    def index(self, level: int) -> int:
        self.ensure(level + 1)
        return self._indices[level]

    def entries(self, depth: Optional[int] = None) -> List[Tuple[int, Letter, int]]:
        """(level, letter, child index) triples for levels below the given depth."""
        depth = self.depth if depth is None else depth
        self.ensure(depth)
        return [(k, self._letters[k], self._indices[k]) for k in range(depth)]

    def with_lower(self, letters: Sequence[Letter], indices: Sequence[int]) -> "Tower":
        """Replace levels 0..k, keeping everything above k."""
        k = len(indices)
        self.ensure(k)
        if letters[-1] != self._letters[k]:
            raise TilingError(f"replacement path does not end at level-{k} letter {self._letters[k]!r}")
        return Tower(
            list(letters) + self._letters[k + 1:],
            list(indices) + self._indices[k:],
            self.extension,
            self.max_depth,
        )

    def prepended(self, letter: Letter, index: int) -> "Tower":
        """A tower one level taller, with a new base tile inside the old one."""
        extension = self.extension.shifted(1) if self.extension else None
        return Tower([letter] + self._letters, [index] + self._indices, extension, self.max_depth + 1)


class LineTiling:
    """A Fibonacci tiling with exact origin placement."""

    def __init__(self, spec: TileSpec, tower: Tower, offset: GoldenLike):
        """
        Args:
            spec: Prototile lengths
            tower: Address of the base tile
            offset: Displacement of the origin from the base tile's left endpoint

        Raises:
            ValidationError: If the offset is outside [0, |base tile|)
        """
        self.spec = spec
        self.tower = tower
        self.offset = golden(offset)
        if not ZERO <= self.offset < spec.length(tower.letter(0)):
            raise ValidationError(f"offset {self.offset} is outside the base tile")
        self._prefixes: List[GoldenNumber] = [ZERO]
        self._lock = threading.Lock()

    @classmethod
    def from_address(cls, spec: TileSpec, letters: Sequence[Letter], indices: Sequence[int],
                     offset: GoldenLike, extension: Optional[TowerExtension] = None,
                     max_depth: int = 256) -> "LineTiling":
        return cls(spec, Tower(letters, indices, extension, max_depth), offset)

    def __repr__(self) -> str:
        return f"LineTiling(spec={self.spec}, base={self.base_letter!r}, offset={self.offset})"

    @property
    def base_letter(self) -> Letter:
        return self.tower.letter(0)

    def level_prefix(self, level: int) -> GoldenNumber:
        """Length of the siblings left of the level-k supertile inside its parent."""
        parent = self.tower.letter(level + 1)
        lengths = supertile_lengths(self.spec, level)
        return sum((lengths[c] for c in FIBONACCI.rules[parent][:self.tower.index(level)]), ZERO)

    def prefix(self, level: int) -> GoldenNumber:
        """Distance from the level-k supertile's left endpoint to the base tile's."""
        while len(self._prefixes) <= level:
            k = len(self._prefixes) - 1
            value = self._prefixes[k] + self.level_prefix(k)
            with self._lock:
                if len(self._prefixes) == k + 1:
                    self._prefixes.append(value)
        return self._prefixes[level]

    def supertile(self, level: int) -> Tile:
        """(letter, left, right) of the level-k supertile holding the origin's tile."""
        letter = self.tower.letter(level)
        left = -self.offset - self.prefix(level)
        return letter, left, left + supertile_lengths(self.spec, level)[letter]

    def cover_level(self, lo: GoldenLike, hi: GoldenLike) -> int:
        """
        First level whose supertile covers [lo, hi].

        Raises:
            TilingError: If no supertile up to the tower cap covers it, which
                happens when the tower has a persistent boundary
        """
        lo, hi = golden(lo), golden(hi)
        for level in range(self.tower.max_depth + 1):
            _, left, right = self.supertile(level)
            if left <= lo and right >= hi:
                return level
        raise TilingError(
            f"[{lo}, {hi}] is not covered below depth {self.tower.max_depth}; "
            "the tower has a persistent boundary"
        )

    def tiles(self, lo: GoldenLike, hi: GoldenLike) -> List[Tile]:
        """Level-0 tiles meeting the closed interval [lo, hi], left to right."""
        lo, hi = golden(lo), golden(hi)
        if hi < lo:
            raise ValidationError("empty interval")
        level = self.cover_level(lo, hi)
        letter, left, _ = self.supertile(level)
        out: List[Tile] = []
        stack = [(letter, level, left)]
        while stack:
            letter, level, left = stack.pop()
            right = left + supertile_lengths(self.spec, level)[letter]
            if right < lo or left > hi:
                continue
            if level == 0:
                out.append((letter, left, right))
                continue
            lengths = supertile_lengths(self.spec, level - 1)
            children = []
            x = left
            for child in FIBONACCI.rules[letter]:
                children.append((child, level - 1, x))
                x = x + lengths[child]
            stack.extend(reversed(children))
        return out

    def boundary_points(self, horizon: GoldenLike) -> List[GoldenNumber]:
        """Tile endpoints in [-H, H], increasing."""
        h = golden(horizon)
        if h <= 0:
            raise ValidationError("horizon must be positive")
        tiles = self.tiles(-h, h)
        points = [left for _, left, _ in tiles] + [tiles[-1][2]]
        return [p for p in points if -h <= p <= h]

    def symbols(self, horizon: GoldenLike) -> Pattern:
        """Letters of the tiles meeting [-H, H]."""
        h = golden(horizon)
        return Pattern.word([letter for letter, _, _ in self.tiles(-h, h)])

    def tile_at(self, point: GoldenLike) -> Tile:
        """The tile [left, right) containing a point."""
        p = golden(point)
        for tile in self.tiles(p, p):
            if tile[1] <= p < tile[2]:
                return tile
        raise TilingError(f"no tile contains {p}")

    def translate(self, alpha: GoldenLike) -> "LineTiling":
        """sigma^alpha: the point alpha becomes the new origin."""
        return place_tower(self.spec, self.tower, -self.offset - golden(alpha))

    def address(self) -> List[Tuple[int, Letter, int]]:
        return self.tower.entries()

    def same_tiling(self, other: "LineTiling") -> bool:
        """Structural equality: same spec, offset, materialized tower and extension."""
        if self.spec != other.spec or self.offset != other.offset:
            return False
        if self.tower.extension != other.tower.extension:
            return False
        depth = max(self.tower.depth, other.tower.depth)
        if self.tower.extension is None and self.tower.depth != other.tower.depth:
            return False
        return self.tower.entries(depth) == other.tower.entries(depth) and \
            self.tower.letter(depth) == other.tower.letter(depth)


def place_tower(spec: TileSpec, tower: Tower, base_left: GoldenLike) -> LineTiling:
    """
    Put a tower's base tile at base_left and re-address the tile holding 0.

    Climbs until a supertile contains 0 in its half-open span, then descends
    to the level-0 tile that contains it.
    """
    base_left = golden(base_left)
    prefix = ZERO
    level = 0
    while True:
        letter = tower.letter(level)
        left = base_left - prefix
        right = left + supertile_lengths(spec, level)[letter]
        if left <= 0 < right:
            break
        if level >= tower.max_depth:
            raise TilingError("origin lies beyond a persistent boundary of the tower")
        parent = tower.letter(level + 1)
        lengths = supertile_lengths(spec, level)
        prefix = prefix + sum((lengths[c] for c in FIBONACCI.rules[parent][:tower.index(level)]), ZERO)
        level += 1

    letters = [letter]
    indices: List[int] = []
    for k in range(level, 0, -1):
        lengths = supertile_lengths(spec, k - 1)
        x = left
        for i, child in enumerate(FIBONACCI.rules[letters[0]]):
            if x <= 0 < x + lengths[child]:
                letters.insert(0, child)
                indices.insert(0, i)
                left = x
                break
            x = x + lengths[child]
    return LineTiling(spec, tower.with_lower(letters, indices), -left)


def translate(x: LineTiling, alpha: GoldenLike) -> LineTiling:
    return x.translate(alpha)


def boundary_points(x: LineTiling, horizon: GoldenLike) -> List[GoldenNumber]:
    return x.boundary_points(horizon)


def sample_tiling(spec: TileSpec, seed: int, max_depth: int = 256) -> LineTiling:
    """A seeded tiling: random base letter and offset, seeded parent choices."""
    rng = np.random.default_rng(seed)
    letter = FIBONACCI.alphabet.letters[int(rng.integers(2))]
    fraction = Fraction(int(rng.integers(0, 1024)), 1024)
    extension = TowerExtension(seed=seed, base_depth=0)
    return LineTiling.from_address(spec, [letter], [], spec.length(letter) * fraction, extension, max_depth)


def unit_tiling(seed: int = 0, offset: GoldenLike = 0) -> LineTiling:
    """All tiles of length 1, boundary through -offset."""
    spec = TileSpec(ONE, ONE)
    rng = np.random.default_rng(seed)
    letter = FIBONACCI.alphabet.letters[int(rng.integers(2))]
    return LineTiling.from_address(spec, [letter], [], offset, TowerExtension(seed=seed))


def _directed(a: Sequence[GoldenNumber], b: Sequence[GoldenNumber]) -> GoldenNumber:
    best = ZERO
    j = 0
    for point in a:
        while j + 1 < len(b) and b[j + 1] <= point:
            j += 1
        nearest = abs(point - b[j])
        if j + 1 < len(b):
            other = b[j + 1] - point
            if other < nearest:
                nearest = other
        if nearest > best:
            best = nearest
    return best


def hausdorff(a: Sequence[GoldenNumber], b: Sequence[GoldenNumber]) -> GoldenNumber:
    """
    Hausdorff distance of two sorted finite point sets.

    Raises:
        GeometryError: If either set is empty
    """
    if not a or not b:
        raise GeometryError("Hausdorff undefined on empty set")
    return golden_max([_directed(a, b), _directed(b, a)])


def _ball(points: Sequence[GoldenNumber], n: int) -> Sequence[GoldenNumber]:
    radius = GoldenNumber(n)
    return points[bisect.bisect_left(points, -radius):bisect.bisect_right(points, radius)]


def metric_term(x_points: Sequence[GoldenNumber], y_points: Sequence[GoldenNumber], n: int) -> GoldenNumber:
    """(1/n) m_H of the boundary points in the closed n-balls; 1 if exactly one ball is empty."""
    a, b = _ball(x_points, n), _ball(y_points, n)
    if not a and not b:
        return ZERO
    if not a or not b:
        return ONE
    return hausdorff(a, b) / n


def _directed_float(a: np.ndarray, b: np.ndarray) -> float:
    idx = np.searchsorted(b, a)
    below = b[np.clip(idx - 1, 0, len(b) - 1)]
    above = b[np.clip(idx, 0, len(b) - 1)]
    return float(np.max(np.minimum(np.abs(a - below), np.abs(a - above))))


@dataclass
class MetricResult:
    """sup_n of the metric terms; certified when the stopping rule fired."""
    value: GoldenNumber
    certified: bool
    horizon: int
    evaluated: List[int] = field(default_factory=list)


def tiling_metric(x: LineTiling, y: LineTiling, settings: Optional[TilingConfig] = None) -> MetricResult:
    """
    d(x, y) = sup over integers n >= 1 of (1/n) m_H[B_n(dx), B_n(dy)].

    Once n >= L (the longest tile of either spec) each term is at most L/n,
    so the scan stops as soon as L/n drops below the running maximum.

    Every term is evaluated exactly unless its float estimate is below the
    running maximum by more than the float error bound for the current
    horizon, so the returned sup never depends on float rounding.
    """
    settings = settings or TilingConfig()
    if x.same_tiling(y):
        return MetricResult(ZERO, True, 0)
    cap = settings.horizon_cap
    longest = golden_max([x.spec.max_length, y.spec.max_length])
    horizon = min(64, cap)
    best = ZERO
    evaluated: List[int] = []
    n = 1
    while n <= cap:
        if n == 1 or n > horizon:
            while horizon < n:
                horizon = min(2 * horizon, cap)
            bx, by = x.boundary_points(horizon), y.boundary_points(horizon)
            fx = np.array([float(p) for p in bx])
            fy = np.array([float(p) for p in by])
            slack = _float_slack(horizon + float(longest))
            logger.debug("metric horizon extended to %d (%d and %d points)", horizon, len(bx), len(by))
        lo_x, hi_x = bisect.bisect_left(bx, GoldenNumber(-n)), bisect.bisect_right(bx, GoldenNumber(n))
        lo_y, hi_y = bisect.bisect_left(by, GoldenNumber(-n)), bisect.bisect_right(by, GoldenNumber(n))
        if lo_x == hi_x or lo_y == hi_y:
            estimate = 1.0 if (lo_x == hi_x) != (lo_y == hi_y) else 0.0
        else:
            a, b = fx[lo_x:hi_x], fy[lo_y:hi_y]
            estimate = max(_directed_float(a, b), _directed_float(b, a)) / n
        if estimate >= float(best) - slack:
            term = metric_term(bx, by, n)
            evaluated.append(n)
            if term > best:
                best = term
        if longest <= n and best > 0 and longest / n < best:
            return MetricResult(best, True, n, evaluated)
        n += 1
    logger.info("metric stopping rule did not fire by horizon %d", cap)
    return MetricResult(best, False, cap, evaluated)


def relative_translation(x: LineTiling, y: LineTiling) -> GoldenNumber:
    """
    The translation carrying y's supertiles onto x's, read off at the lowest
    level above which the two towers agree.

    Raises:
        TilingError: If the specs differ or the towers share no supertile
    """
    if x.spec != y.spec:
        raise TilingError("tilings over different specs are not translates")
    if x.tower.extension != y.tower.extension:
        raise TilingError("tilings with different tower extensions share no supertile")
    depth = max(x.tower.depth, y.tower.depth)
    if x.tower.letter(depth) != y.tower.letter(depth):
        raise TilingError(f"towers differ at level {depth}")
    level = depth
    while level > 0 and x.tower.index(level - 1) == y.tower.index(level - 1) \
            and x.tower.letter(level - 1) == y.tower.letter(level - 1):
        level -= 1
    return x.supertile(level)[1] - y.supertile(level)[1]
