# File: /hierarchical_tilings/core/tiling_plane.py
# Directory: /hierarchical_tilings/core

"""
Plane tilings by axis-parallel rectangles.

RowsTiling stacks unit-height Fibonacci rows, one line tiling per row.
ProductTiling crosses two line tilings. GridTiling lays a periodic symbolic
configuration on a grid of square cells. All three answer tiles_in(box) with
exact rectangles, which is all that patch comparison, neighborhood censuses
and the periodic-frame check need.
"""

import bisect
import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from ..config import TilingConfig
from ..exceptions import TilingError, ValidationError
from .conjugacy import conjugate
from .geometry import (
    Point,
    ThickenedRegion,
    check_independent,
    point,
    point_rect_distance_sq,
    rectangle,
    segment_region,
    tube,
)
from .golden import ONE, TAU, ZERO, GoldenLike, GoldenNumber, golden
from .symbolic import Letter, PeriodicConfig, product_letter
from .tiling_line import (
    FIBONACCI,
    LineTiling,
    TileSpec,
    Tower,
    TowerExtension,
    place_tower,
    supertile_lengths,
)

logger = logging.getLogger(__name__)

Box = Tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]

X_SIDE = TileSpec(ONE, ONE)
Y_SIDE = TileSpec(TAU, TAU - 1)


@dataclass(frozen=True)
class Rect:
    """A tile: letter plus exact lower-left corner and size."""
    letter: Letter
    x: GoldenNumber
    y: GoldenNumber
    w: GoldenNumber
    h: GoldenNumber

    def polygon(self):
        return rectangle(self.x, self.y, self.w, self.h)

    @property
    def center(self) -> Point:
        return self.x + self.w / 2, self.y + self.h / 2

    def contains(self, p: Point) -> bool:
        """Half-open containment, so every point has exactly one tile."""
        return self.x <= p[0] < self.x + self.w and self.y <= p[1] < self.y + self.h

    def translated(self, shift: Point) -> "Rect":
        return Rect(self.letter, self.x + shift[0], self.y + shift[1], self.w, self.h)


class PlaneTiling:
    """Anything that lists its tiles meeting a closed box."""

    def tiles_in(self, x0: GoldenLike, x1: GoldenLike, y0: GoldenLike, y1: GoldenLike) -> List[Rect]:
        raise NotImplementedError

    def tile_at(self, p: Point) -> Rect:
        for tile in self.tiles_in(p[0], p[0], p[1], p[1]):
            if tile.contains(p):
                return tile
        raise TilingError(f"no tile contains {p}")

    def tiles_meeting(self, region: ThickenedRegion) -> FrozenSet[Rect]:
        x0, x1, y0, y1 = region.bounding_box()
        return frozenset(t for t in self.tiles_in(x0, x1, y0, y1) if region.meets(t.polygon()))


def _zigzag(j: int) -> int:
    return 2 * j if j >= 0 else -2 * j - 1


class RowsTiling(PlaneTiling):
    """Rows j occupy [j, j+1); each row is its own line tiling, built on demand."""

    def __init__(self, spec: TileSpec, rows: range, factory: Callable[[int], LineTiling],
                 horizon: GoldenLike):
        if len(rows) < 1:
            raise ValidationError("a rows tiling needs at least one row")
        self.spec = spec
        self.rows = rows
        self.horizon = golden(horizon)
        self._factory = factory
        self._cache: Dict[int, LineTiling] = {}
        self._lock = threading.Lock()

    def row(self, j: int) -> LineTiling:
        if j not in self.rows:
            raise ValidationError(f"row {j} is outside {self.rows}")
        cached = self._cache.get(j)
        if cached is None:
            cached = self._factory(j)
            with self._lock:
                cached = self._cache.setdefault(j, cached)
        return cached

    def tiles_in(self, x0, x1, y0, y1) -> List[Rect]:
        x0, x1, y0, y1 = golden(x0), golden(x1), golden(y0), golden(y1)
        out = []
        for j in range(max(y0.floor() - 1, self.rows.start), min(y1.floor() + 1, self.rows.stop - 1) + 1):
            if j + 1 < y0 or j > y1:
                continue
            for letter, left, right in self.row(j).tiles(x0, x1):
                out.append(Rect(letter, left, GoldenNumber(j), right - left, ONE))
        return out


def rows_sample(seed: int, rows: int, horizon: GoldenLike) -> RowsTiling:
    """Unit squares in independent seeded Fibonacci rows, all edges on integers."""
    if rows < 1:
        raise ValidationError("rows must be at least 1")

    def factory(j: int) -> LineTiling:
        rng = np.random.default_rng([seed, _zigzag(j)])
        letter = FIBONACCI.alphabet.letters[int(rng.integers(2))]
        extension = TowerExtension(seed=int(rng.integers(2 ** 31)))
        return LineTiling.from_address(X_SIDE, [letter], [], ZERO, extension)

    return RowsTiling(X_SIDE, range(rows), factory, horizon)


def rows_conjugate(x: RowsTiling, target: TileSpec = Y_SIDE,
                   epsilon: GoldenLike = TilingConfig().epsilon) -> RowsTiling:
    """Push every row through the line conjugacy; rows keep their letters."""
    return RowsTiling(target, x.rows, lambda j: conjugate(x.row(j), target, epsilon), x.horizon)


def _grid_cells(values: List[GoldenNumber], resolution: GoldenNumber) -> int:
    return len({(value / resolution).floor() for value in values})


def distinct_offsets(y: RowsTiling, radius: GoldenLike,
                     resolution: GoldenLike = TilingConfig().offset_resolution) -> int:
    """
    Number of resolution-grid cells hit by shifts between adjacent rows within radius R.

    For every edge p of row j in [-R, R] the shift is the distance to the
    nearest edge of row j+1 at or right of p. Shifts are counted by their cell
    on the resolution grid, so the count never drops as R grows.
    """
    if len(y.rows) < 2:
        raise ValidationError("distinct_offsets needs at least two rows")
    radius = golden(radius)
    reach = radius + y.spec.max_length
    shifts = []
    for j in y.rows[:-1]:
        lower = y.row(j).boundary_points(radius)
        upper = y.row(j + 1).boundary_points(reach)
        for p in lower:
            k = bisect.bisect_left(upper, p)
            if k < len(upper):
                shifts.append(upper[k] - p)
    count = _grid_cells(shifts, golden(resolution))
    logger.debug("radius %s: %d shifts in %d grid cells", float(radius), len(shifts), count)
    return count


class ProductTiling(PlaneTiling):
    """Rectangles |u| x |v| for every pair of a horizontal and a vertical tile."""

    def __init__(self, horizontal: LineTiling, vertical: LineTiling):
        self.horizontal = horizontal
        self.vertical = vertical

    def tiles_in(self, x0, x1, y0, y1) -> List[Rect]:
        columns = self.horizontal.tiles(x0, x1)
        rows = self.vertical.tiles(y0, y1)
        return [
            Rect(product_letter(u, v), cl, rl, cr - cl, rr - rl)
            for v, rl, rr in rows
            for u, cl, cr in columns
        ]


def product_tiling(x: LineTiling, y: LineTiling) -> ProductTiling:
    return ProductTiling(x, y)


class GridTiling(PlaneTiling):
    """A periodic configuration drawn with square cells of a given side."""

    def __init__(self, config: PeriodicConfig, cell: GoldenLike = 1):
        if config.dimension != 2:
            raise ValidationError("grid tilings need a 2D configuration")
        self.config = config
        self.cell = golden(cell)

    def tiles_in(self, x0, x1, y0, y1) -> List[Rect]:
        c = self.cell
        c0, c1 = (golden(x0) / c).floor(), (golden(x1) / c).floor()
        r0, r1 = (golden(y0) / c).floor(), (golden(y1) / c).floor()
        out = []
        for r in range(r0 - 1, r1 + 1):
            for col in range(c0 - 1, c1 + 1):
                x, y = c * col, c * r
                if x + c < x0 or x > x1 or y + c < y0 or y > y1:
                    continue
                out.append(Rect(self.config.value_at((col, r)), x, y, c, c))
        return out


@dataclass(frozen=True)
class PatchEqualitySpec:
    """A thickened segment P^r and the tolerance for calling two tiles equal."""
    region: ThickenedRegion
    tolerance: GoldenNumber = ZERO

    @classmethod
    def segment(cls, a: Point, b: Point, radius: GoldenLike,
                tolerance: GoldenLike = 0) -> "PatchEqualitySpec":
        return cls(segment_region(a, b, radius), golden(tolerance))


def _close(a: Rect, b: Rect, tolerance: GoldenNumber) -> bool:
    return a.letter == b.letter and all(
        abs(p - q) <= tolerance for p, q in ((a.x, b.x), (a.y, b.y), (a.w, b.w), (a.h, b.h))
    )


def patches_agree(x: PlaneTiling, y: PlaneTiling, spec: PatchEqualitySpec) -> bool:
    """Whether x and y show the same tiles on the region."""
    ours = x.tiles_meeting(spec.region)
    theirs = y.tiles_meeting(spec.region)
    if not spec.tolerance:
        return ours == theirs
    return all(any(_close(a, b, spec.tolerance) for b in theirs) for a in ours) and \
        all(any(_close(b, a, spec.tolerance) for a in ours) for b in theirs)


@dataclass(frozen=True)
class FrameCondition:
    """One inclusion between the tiles of x and of a translate on a tube."""
    name: str
    holds: bool
    mismatch: Optional[Rect] = None


@dataclass
class FrameResult:
    """The four tube inclusions; a witness when all hold."""
    s: Point
    t: Point
    margin: GoldenNumber
    conditions: List[FrameCondition] = field(default_factory=list)

    @property
    def is_witness(self) -> bool:
        return all(c.holds for c in self.conditions)

    @property
    def first_failure(self) -> Optional[FrameCondition]:
        return next((c for c in self.conditions if not c.holds), None)


def _tube_conditions(x: PlaneTiling, region: ThickenedRegion, shift: Point,
                     label: str) -> List[FrameCondition]:
    # tiles of sigma^shift x on the region are tiles of x on region + shift, moved back
    here = x.tiles_meeting(region)
    there = x.tiles_meeting(region.translated(shift))
    back = (-shift[0], -shift[1])
    moved = {tile.translated(back) for tile in there}
    conditions = []
    for name, source, target in ((f"{label}: x in shifted", here, moved),
                                 (f"{label}: shifted in x", moved, here)):
        missing = sorted((t for t in source if t not in target), key=lambda t: (t.y, t.x))
        conditions.append(FrameCondition(name, not missing, missing[0] if missing else None))
    return conditions


def frame_check(x: PlaneTiling, s: Point, t: Point,
                margin: GoldenLike = TilingConfig().frame_margin, radius: GoldenLike = 1) -> FrameResult:
    """
    Check the periodic-frame conditions for translations s and t.

    x must agree with its translate by t on the tube along s of half-width
    margin*t, thickened by the closed unit ball, and with its translate by s
    on the tube along t. Agreement is exact tile equality, read as two
    inclusions per tube.
    """
    s, t = point(*s), point(*t)
    check_independent(s, t)
    margin = golden(margin)
    origin = (ZERO, ZERO)
    along_s = tube(origin, s, t, margin, radius)
    along_t = tube(origin, t, s, margin, radius)
    conditions = _tube_conditions(x, along_s, t, "tube along s, shift t") + \
        _tube_conditions(x, along_t, s, "tube along t, shift s")
    result = FrameResult(s, t, margin, conditions)
    if not result.is_witness:
        logger.info("frame refused: %s", result.first_failure.name)
    return result


def frame_witness_line(spec: TileSpec, level: int, seed: int = 0) -> LineTiling:
    """
    A line tiling whose origin sits at the midpoint of the first of two
    adjacent level-k b supertiles.

    psi^3(b) = a b b a b at level k; the first b of the pair is child 1 of a
    b, which is the only child of an a, which is child 0 of a b at level k+3.
    """
    if level < 0:
        raise ValidationError("level must be nonnegative")
    letters: List[Letter] = ["b"]
    while len(letters) <= level:
        letters.insert(0, FIBONACCI.rules[letters[0]][0])
    letters += ["b", "a", "b"]
    indices = [0] * level + [1, 0, 0]
    # levels 0..k descend through first children, so the base tile starts where b_k does
    tower = Tower(letters, indices, TowerExtension(seed=seed, base_depth=level + 3))
    half = supertile_lengths(spec, level)["b"] / 2
    return place_tower(spec, tower, -half)


def frame_witness(spec: TileSpec, level: int, seed: int = 0) -> Tuple[ProductTiling, Point, Point]:
    """Product tiling through a 2×2 block of level-k B×B supertiles with axis-aligned periods."""
    side = supertile_lengths(spec, level)["b"]
    if side * 3 <= 8:
        raise ValidationError(f"level-{level} b supertile of length {side} is too short for the margins")
    line = frame_witness_line(spec, level, seed)
    return ProductTiling(line, line), (side, ZERO), (ZERO, side)


@dataclass
class CensusResult:
    """Neighborhood classes up to translation, with the saturation flag."""
    radius: GoldenNumber
    samples: int
    classes: Dict[FrozenSet, int]
    saturated: bool
    last_new: int

    @property
    def count(self) -> int:
        return len(self.classes)


def neighborhood(x: PlaneTiling, tile: Rect, radius: GoldenNumber) -> FrozenSet:
    """Tiles meeting the open ball around the tile's center, relative to that center."""
    cx, cy = tile.center
    r_sq = radius * radius
    out = set()
    for other in x.tiles_in(cx - radius, cx + radius, cy - radius, cy + radius):
        if point_rect_distance_sq((cx, cy), other.x, other.y, other.w, other.h) < r_sq:
            out.add((other.letter, other.x - cx, other.y - cy, other.w, other.h))
    return frozenset(out)


def neighborhood_census(x: PlaneTiling, radius: GoldenLike, budget: int, box: Box,
                        seed: int = 0) -> CensusResult:
    """
    Classify neighborhoods of tiles at seeded random points of a box.

    Saturated when the second half of the budget found no new class.
    """
    if budget < 2:
        raise ValidationError("budget must be at least 2")
    radius = golden(radius)
    x0, x1, y0, y1 = (golden(v) for v in box)
    rng = np.random.default_rng(seed)
    grain = 2 ** 20
    classes: Dict[FrozenSet, int] = {}
    last_new = 0
    for i in range(budget):
        u = Fraction(int(rng.integers(grain)), grain)
        v = Fraction(int(rng.integers(grain)), grain)
        p = (x0 + (x1 - x0) * u, y0 + (y1 - y0) * v)
        key = neighborhood(x, x.tile_at(p), radius)
        if key not in classes:
            classes[key] = 0
            last_new = i
        classes[key] += 1
    saturated = last_new < budget // 2
    logger.debug("census R=%s: %d classes in %d samples, saturated=%s",
                 float(radius), len(classes), budget, saturated)
    return CensusResult(radius, budget, classes, saturated, last_new)
