# File: /hierarchical_tilings/core/conjugacy.py
# Directory: /hierarchical_tilings/core

"""
Conjugacies between Fibonacci tiling systems with equal length invariants.

The image of a tiling keeps its tower and moves the origin so that, for each
level N, the level-N supertiles of source and image share a midpoint. The
offset of the image is the limit of these midpoint-aligned approximants:

    delta_N = o + (P^X_N - P^Y_N) - (L^X_N - L^Y_N) / 2

where P_N is the distance from the level-N supertile's left end to the base
tile's and L_N its length. Successive corrections shrink like tau^{-N}; for a
tower that ends in a repeating cycle of parents the tail is a geometric
series and the limit is exact.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from ..config import TilingConfig
from ..exceptions import ConjugacyError, ValidationError
from .finite_type import periodic_points_1d, sft_from_language
from .golden import TAU, ZERO, GoldenLike, GoldenNumber, golden, golden_max, tau_power
from .symbolic import Pattern
from .tiling_line import (
    FIBONACCI,
    LineTiling,
    TileSpec,
    TowerExtension,
    length_differences,
    length_invariant,
    place_tower,
    relative_translation,
    sample_tiling,
    standard_spec,
)

logger = logging.getLogger(__name__)

# -1/tau, the per-level ratio of the length differences
CONTRACTION = GoldenNumber(1, -1)

# parent cycles above a b supertile; both keep the line covered on both sides
# and their conjugacy tails differ
WITNESS_CYCLES: Tuple[Tuple[Tuple[str, int], ...], ...] = (
    (("a", 0), ("b", 0), ("b", 1)),
    (("b", 1), ("a", 0), ("b", 0)),
)


def check_conjugate(source: TileSpec, target: TileSpec) -> None:
    """Raises ConjugacyError unless the two length invariants are equal."""
    if length_invariant(source) != length_invariant(target):
        raise ConjugacyError("not conjugate: length invariants differ")


def level_correction(x: LineTiling, target: TileSpec, level: int) -> GoldenNumber:
    """delta_{k+1} - delta_k."""
    parent = x.tower.letter(level + 1)
    letter = x.tower.letter(level)
    siblings = FIBONACCI.rules[parent][:x.tower.index(level)]
    below = length_differences(x.spec, target, level)
    above = length_differences(x.spec, target, level + 1)
    prefix = sum((below[c] for c in siblings), ZERO)
    return prefix - (above[parent] - below[letter]) / 2


def conjugacy_corrections(x: LineTiling, target: TileSpec, levels: int) -> List[GoldenNumber]:
    return [level_correction(x, target, k) for k in range(levels)]


def conjugacy_approximants(x: LineTiling, target: TileSpec, levels: int) -> List[GoldenNumber]:
    """delta_0, ..., delta_N for the midpoint alignment at each level."""
    check_conjugate(x.spec, target)
    delta = x.offset - length_differences(x.spec, target, 0)[x.base_letter] / 2
    out = [delta]
    for correction in conjugacy_corrections(x, target, levels):
        delta = delta + correction
        out.append(delta)
    return out


def correction_constant(source: TileSpec, target: TileSpec) -> GoldenNumber:
    """C with |delta_{N+1} - delta_N| <= C tau^{-N}."""
    return abs(target.length_b - source.length_b) * TAU / 2


def tail_bound(source: TileSpec, target: TileSpec, depth: int) -> GoldenNumber:
    """Bound on |delta_inf - delta_N|: the corrections past N sum to at most C tau^{2-N}."""
    return correction_constant(source, target) * tau_power(2 - depth)


def depth_for(source: TileSpec, target: TileSpec, epsilon: GoldenLike) -> int:
    """Smallest N whose tail bound is at most epsilon."""
    epsilon = golden(epsilon)
    if epsilon <= 0:
        raise ValidationError("epsilon must be positive")
    depth = 0
    while tail_bound(source, target, depth) > epsilon:
        depth += 1
    return depth


@dataclass
class ConjugacyOffset:
    """Offset of the image's origin inside the source's base tile position."""
    value: GoldenNumber
    depth: int
    tail_bound: GoldenNumber
    exact: bool


def conjugacy_offset(x: LineTiling, target: TileSpec,
                     epsilon: GoldenLike = TilingConfig().epsilon) -> ConjugacyOffset:
    """
    The limit offset, exact for cycle-extended towers, else within epsilon.

    Raises:
        ConjugacyError: If the invariants differ
    """
    check_conjugate(x.spec, target)
    if x.spec == target:
        return ConjugacyOffset(x.offset, 0, ZERO, True)
    extension = x.tower.extension
    if extension is not None and extension.cycle:
        base = extension.base_depth
        period = len(extension.cycle)
        head = conjugacy_approximants(x, target, base)[-1]
        block = sum((level_correction(x, target, base + j) for j in range(period)), ZERO)
        value = head + block / (1 - CONTRACTION ** period)
        logger.debug("exact conjugacy offset from cycle of length %d at depth %d", period, base)
        return ConjugacyOffset(value, base + period, ZERO, True)
    depth = max(depth_for(x.spec, target, epsilon), 0)
    value = conjugacy_approximants(x, target, depth)[-1]
    bound = tail_bound(x.spec, target, depth)
    logger.debug("conjugacy offset at depth %d, tail bound %s", depth, float(bound))
    return ConjugacyOffset(value, depth, bound, False)


def conjugate(x: LineTiling, target: TileSpec, epsilon: GoldenLike = TilingConfig().epsilon) -> LineTiling:
    """
    The image tiling over the target spec.

    The tower is unchanged; only the origin's placement moves.
    """
    offset = conjugacy_offset(x, target, epsilon)
    if x.spec == target:
        return x
    return place_tower(target, x.tower, -offset.value)


def substitute_tiling(x: LineTiling) -> LineTiling:
    """
    Inflate by tau about the origin and subdivide every tile.

    Each level-k supertile becomes level k+1, so the tower gains a level at the
    bottom.

    Raises:
        ValidationError: If |B| != tau |A|
    """
    if not x.spec.is_standard:
        raise ValidationError(f"spec {x.spec} has no inflation symmetry")
    child = FIBONACCI.rules[x.base_letter][0]
    tower = x.tower.prepended(child, 0)
    return place_tower(x.spec, tower, -(TAU * x.offset))


class ConjugatedSubstitution:
    """psi_Y = phi o psi o phi^{-1}, through the standard spec with the same invariant."""

    def __init__(self, target: TileSpec, epsilon: GoldenLike = TilingConfig().epsilon):
        self.target = target
        self.standard = standard_spec(length_invariant(target))
        self.epsilon = golden(epsilon)
        # each of the two conjugations may err; inflation scales the first by tau
        self._inner_epsilon = self.epsilon / 8

    def __call__(self, y: LineTiling) -> LineTiling:
        if y.spec != self.target:
            raise ValidationError(f"tiling spec {y.spec} is not {self.target}")
        if self.target == self.standard:
            return substitute_tiling(y)
        x = conjugate(y, self.standard, self._inner_epsilon)
        return conjugate(substitute_tiling(x), self.target, self._inner_epsilon)

    def commutation_residual(self, y: LineTiling, alpha: GoldenLike) -> GoldenNumber:
        """|psi_Y(sigma^alpha y) - sigma^{alpha tau} psi_Y(y)| as a relative translation."""
        alpha = golden(alpha)
        lhs = self(y.translate(alpha))
        rhs = self(y).translate(alpha * TAU)
        return abs(relative_translation(lhs, rhs))


def conjugated_substitution(target: TileSpec,
                            epsilon: GoldenLike = TilingConfig().epsilon) -> ConjugatedSubstitution:
    return ConjugatedSubstitution(target, epsilon)


@dataclass
class NonSBCWitness:
    """Two tilings agreeing on [-R, R] whose images differ by the translation t."""
    radius: GoldenNumber
    level: int
    x: LineTiling
    x_prime: LineTiling
    t: GoldenNumber


def non_sbc_witness(source: TileSpec, target: TileSpec, radius: GoldenLike, seed: int = 0,
                    min_level: int = 0) -> NonSBCWitness:
    """
    Build x and x' sharing a seeded tower up to a b supertile covering [-R, R]
    and continuing through the two witness cycles above it.

    Raises:
        ConjugacyError: If the invariants differ
    """
    check_conjugate(source, target)
    radius = golden(radius)
    if radius <= 0:
        raise ValidationError("radius must be positive")
    base = sample_tiling(source, seed)
    level = max(base.cover_level(-radius, radius), min_level)
    while base.tower.letter(level) != "b":
        level += 1
    letters = [base.tower.letter(k) for k in range(level + 1)]
    indices = [base.tower.index(k) for k in range(level)]
    pair = [
        LineTiling.from_address(source, letters, indices, base.offset,
                                TowerExtension(cycle=cycle, base_depth=level))
        for cycle in WITNESS_CYCLES
    ]
    t = conjugacy_offset(pair[0], target).value - conjugacy_offset(pair[1], target).value
    logger.debug("witness at R=%s: level %d, |t| = %s", float(radius), level, float(abs(t)))
    return NonSBCWitness(radius, level, pair[0], pair[1], t)


def witness_ladder(source: TileSpec, target: TileSpec, r0: GoldenLike, steps: int,
                   seed: int = 0) -> List[NonSBCWitness]:
    """Witnesses for R = r0 tau^j, each divergence level above the previous one."""
    witnesses = []
    min_level = 0
    for j in range(steps):
        w = non_sbc_witness(source, target, golden(r0) * tau_power(j), seed, min_level)
        witnesses.append(w)
        min_level = w.level + 1
    return witnesses


def _quantized(tiling: LineTiling, positions: Sequence[GoldenNumber], step: GoldenNumber) -> Pattern:
    tiles = tiling.tiles(positions[0], positions[-1])
    symbols = []
    for p in positions:
        letter, left, _ = next(t for t in tiles if t[1] <= p < t[2])
        symbols.append(f"{letter}{((p - left) / step).floor()}")
    return Pattern.word(symbols)


def discretized_samples(witness: NonSBCWitness, target: TileSpec,
                        points: int = 8) -> List[Tuple[Pattern, Pattern]]:
    """
    (input, output) symbol rows sampled at spacing |t|/2 around the origin.

    A symbol is the tile's letter followed by the quantized position inside
    it. The two inputs coincide while the outputs differ at the center.
    """
    if not witness.t:
        raise ValidationError("a zero translation has no discretization")
    step = abs(witness.t) / 2
    positions = [step * i for i in range(-points, points + 1)]
    samples = []
    for tiling in (witness.x, witness.x_prime):
        image = place_tower(target, tiling.tower, -conjugacy_offset(tiling, target).value)
        samples.append((_quantized(tiling, positions, step), _quantized(image, positions, step)))
    return samples


@dataclass
class ProbeResult:
    """Smallest ladder radius whose witnesses all translate by less than epsilon."""
    radius: Optional[GoldenNumber]
    step: Optional[int]
    translations: List[GoldenNumber] = field(default_factory=list)


def modulus_probe(source: TileSpec, target: TileSpec, epsilon: GoldenLike,
                  seeds: Iterable[int] = (0, 1, 2, 3), r0: GoldenLike = 1,
                  settings: Optional[TilingConfig] = None) -> ProbeResult:
    """
    Walk R = r0 tau^j and stop at the first R where every seeded witness has
    |t| < epsilon.
    """
    settings = settings or TilingConfig()
    check_conjugate(source, target)
    epsilon = golden(epsilon)
    seeds = list(seeds)
    translations = []
    for j in range(settings.ladder_steps):
        radius = golden(r0) * tau_power(j)
        worst = golden_max([abs(non_sbc_witness(source, target, radius, s).t) for s in seeds])
        translations.append(worst)
        if worst < epsilon:
            return ProbeResult(radius, j, translations)
    logger.info("modulus probe found no radius within %d ladder steps", settings.ladder_steps)
    return ProbeResult(None, None, translations)


@dataclass
class PeriodCheck:
    word: str
    period: GoldenNumber
    representable: bool


@dataclass
class ObstructionReport:
    """Periods of periodic tilings of the source approximation versus the target's tiles."""
    radius: int
    checks: List[PeriodCheck]

    @property
    def obstructed(self) -> bool:
        return bool(self.checks) and not any(c.representable for c in self.checks)


def _representable(period: GoldenNumber, spec: TileSpec) -> bool:
    # a |A| + b |B| = T with a, b >= 0 integers, a + b >= 1
    top = (period / spec.length_a).floor()
    for a in range(top + 1):
        rest = (period - spec.length_a * a) / spec.length_b
        if rest.is_rational() and rest.u.denominator == 1 and rest.u >= 0 and a + rest.u >= 1:
            return True
    return False


def finite_type_extension_check(source: TileSpec, target: TileSpec, radius: int = 1,
                                max_period: int = 8) -> ObstructionReport:
    """
    Whether a conjugacy could extend to the finite-type approximation at radius R.

    Periodic points of the radius-R approximation tile the line with period
    a|A_X| + b|B_X|; if no such period is a nonnegative integer combination of
    the target's tile lengths, no map from the approximation to the target
    tilings intertwines translations.
    """
    sft = sft_from_language(FIBONACCI, radius)
    checks = []
    for config in periodic_points_1d(sft, max_period):
        word = config.domain.cells
        period = sum((source.length(letter) for letter in word), ZERO)
        checks.append(PeriodCheck("".join(word), period, _representable(period, target)))
    return ObstructionReport(radius, checks)
