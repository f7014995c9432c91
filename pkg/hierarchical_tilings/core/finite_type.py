# File: /hierarchical_tilings/core/finite_type.py
# Directory: /hierarchical_tilings/core

"""
Finite-type approximations X_n of substitution subshifts.

X_n is the set of configurations all of whose radius-n windows occur in the
subshift. This module decides membership of periodic configurations in X_n,
enumerates 1D periodic points through the overlap graph, builds the periodic
configuration of the constant-block construction for 2D products, and
bundles the two into separation certificates X_n != X.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple, Union

import networkx as nx

from ..config import EnumerationConfig
from ..exceptions import HypothesisError, ValidationError
from .substitution import Substitution1D
from .substitution2d import Substitution2D
from .symbolic import (
    Alphabet,
    Pattern,
    PeriodicConfig,
    Window,
    contains,
    cyclic_factors,
    project,
)

logger = logging.getLogger(__name__)

System = Union[Substitution1D, Substitution2D]


@dataclass(frozen=True)
class WindowSFT:
    """X_n: configurations whose radius-n windows all lie in an allowed set."""
    dimension: int
    radius: int
    allowed: FrozenSet[Window]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "allowed", frozenset(self.allowed))
        if not self.allowed:
            raise ValidationError("allowed window set must be nonempty")
        for window in self.allowed:
            if window.radius != self.radius or window.dimension != self.dimension:
                raise ValidationError(f"window {window} does not match radius {self.radius}")
            if not window.pattern.letters() <= set(self.alphabet.letters):
                raise ValidationError(f"window {window} uses letters outside the alphabet")

    def allows(self, window: Window) -> bool:
        return window in self.allowed


@dataclass(frozen=True)
class TranscriptEntry:
    center: Tuple[int, ...]
    window: Window
    allowed: bool


@dataclass
class MembershipResult:
    """Outcome of a membership test with the window checked at each center."""
    member: bool
    transcript: List[TranscriptEntry] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.member


@dataclass(frozen=True)
class Refutation:
    """
    A window of a periodic configuration that the subshift does not admit.

    For 1D systems size is a window length m (radius (m-1)/2 when m is odd);
    for 2D systems size is a radius.
    """
    size: int
    unit: str
    window: Optional[Pattern]
    position: Optional[Tuple[int, ...]]

    @property
    def found(self) -> bool:
        return self.window is not None


@dataclass
class SeparationCertificate:
    """Finite evidence that X_n strictly contains the subshift."""
    radius: int
    config: PeriodicConfig
    transcript: List[TranscriptEntry]
    refutation: Refutation
    m_cap: int

    @property
    def certified(self) -> bool:
        return all(entry.allowed for entry in self.transcript) and self.refutation.found


@dataclass(frozen=True)
class CandidateOutcome:
    period: int
    word: Pattern
    passes_radius_1: bool
    refutation: Refutation


@dataclass
class AperiodicityReport:
    """Per-candidate refutations of periodic configurations up to a period cap."""
    max_period: int
    m_cap: int
    outcomes: List[CandidateOutcome]

    @property
    def survivors(self) -> List[CandidateOutcome]:
        return [o for o in self.outcomes if not o.refutation.found]

    @property
    def complete(self) -> bool:
        return not self.survivors

    def refutation_sizes(self) -> dict:
        """period -> list of refutation sizes of that period's candidates."""
        sizes: dict = {}
        for o in self.outcomes:
            sizes.setdefault(o.period, []).append(o.refutation.size if o.refutation.found else None)
        return sizes


def default_m_cap(config: PeriodicConfig, settings: Optional[EnumerationConfig] = None) -> int:
    settings = settings or EnumerationConfig()
    return settings.m_cap_factor * max(config.periods)


def sft_from_language(system: System, radius: int) -> WindowSFT:
    """X_n with allowed windows the subshift's radius-n language."""
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    if isinstance(system, Substitution1D):
        words = system.language(2 * radius + 1)
        allowed = frozenset(Window(radius, w) for w in words)
        return WindowSFT(1, radius, allowed, system.alphabet)
    allowed = system.language2d(radius)
    return WindowSFT(2, radius, allowed, system.alphabet)


def is_member(config: PeriodicConfig, sft: WindowSFT) -> MembershipResult:
    """Check every radius-n window centered in one fundamental domain."""
    if config.dimension != sft.dimension:
        raise ValidationError("configuration and SFT dimensions differ")
    transcript = []
    for center in config.centers():
        window = project(config, center, sft.radius)
        transcript.append(TranscriptEntry(center, window, sft.allows(window)))
    return MembershipResult(all(e.allowed for e in transcript), transcript)


def overlap_graph(sft: WindowSFT) -> nx.DiGraph:
    """Windows as vertices; w -> w' when w shifted by one agrees with w' on the overlap."""
    if sft.dimension != 1:
        raise ValidationError("overlap graphs are defined for 1D SFTs")
    graph = nx.DiGraph()
    by_prefix: dict = {}
    for window in sft.allowed:
        graph.add_node(window)
        by_prefix.setdefault(window.pattern.cells[:-1], []).append(window)
    for window in sft.allowed:
        for successor in by_prefix.get(window.pattern.cells[1:], []):
            graph.add_edge(window, successor)
    return graph


def primitive_root(word: Tuple[str, ...]) -> Tuple[str, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def canonical_rotation(word: Tuple[str, ...]) -> Tuple[str, ...]:
    return min(word[i:] + word[:i] for i in range(len(word)))


def periodic_points_1d(sft: WindowSFT, max_period: int) -> List[PeriodicConfig]:
    """
    Periodic points of X_n with least period at most P, one per shift orbit.

    Closed walks of length L in the overlap graph are bi-infinite periodic
    walks; reading the center letters gives the point.
    """
    if max_period < 1:
        raise ValidationError("max_period must be at least 1")
    graph = overlap_graph(sft)
    found = set()

    def walk(start: Window, path: List[Window], length: int) -> None:
        if len(path) == length:
            if graph.has_edge(path[-1], start):
                word = tuple(w.center for w in path)
                found.add(canonical_rotation(primitive_root(word)))
            return
        for successor in graph.successors(path[-1]):
            path.append(successor)
            walk(start, path, length)
            path.pop()

    for length in range(1, max_period + 1):
        for start in graph.nodes:
            walk(start, [start], length)
    points = sorted(found, key=lambda w: (len(w), w))
    return [PeriodicConfig(Pattern.word(w)) for w in points]


def constant_block_configuration(system: Substitution2D, radius: int,
                             settings: Optional[EnumerationConfig] = None) -> PeriodicConfig:
    """
    Periodic configuration built from a letter whose constant 2×2 block occurs.

    With W = psi^k(l) for the minimal k giving sides >= max(2n+1, 3), the
    configuration repeats W; each of its windows lies in psi^k of the constant
    2×2 block, so it belongs to X_n.

    Raises:
        HypothesisError: If no constant 2×2 block appears within the search depth
    """
    settings = settings or EnumerationConfig()
    if radius < 0:
        raise ValidationError("radius must be nonnegative")
    if radius == 0:
        occurring = {w.center for w in system.language2d(0)}
        letter = system.alphabet.sort(occurring)[0]
        return PeriodicConfig(Pattern.block([[letter]]))

    witness = None
    for level in range(settings.constant_block_search_depth + 1):
        for seed in system.alphabet:
            pattern = system.iterate2d(seed, level)
            for letter in system.alphabet:
                if contains(pattern, Pattern.block([[letter, letter], [letter, letter]])):
                    witness = letter
                    break
            if witness:
                break
        if witness:
            logger.debug("constant 2x2 block of %s found at level %d", witness, level)
            break
    if witness is None:
        raise HypothesisError("constant 2x2 block hypothesis not witnessed")

    side = max(2 * radius + 1, 3)
    level = 0
    while min(system.extent(witness, level)) < side:
        level += 1
    config = PeriodicConfig(system.iterate2d(witness, level))
    membership = is_member(config, sft_from_language(system, radius))
    if not membership.member:
        raise HypothesisError(
            f"configuration from {witness} at level {level} is not in X_{radius}"
        )
    return config


def refute_membership(config: PeriodicConfig, system: System, m_cap: int) -> Refutation:
    """
    Smallest window of the configuration absent from the subshift's language.

    1D systems are scanned by window length m = 1..m_cap, 2D systems by radius
    0..m_cap. A Refutation with no window means none was found within the cap.
    """
    if isinstance(system, Substitution1D):
        if config.dimension != 1:
            raise ValidationError("1D system needs a 1D configuration")
        for length in range(1, m_cap + 1):
            language = system.language(length)
            for position, word in cyclic_factors(config, length):
                if word not in language:
                    logger.info("%s refuted at window length %d by %s",
                                config.text(), length, word.text())
                    return Refutation(length, "length", word, (position,))
        return Refutation(m_cap, "length", None, None)

    if config.dimension != 2:
        raise ValidationError("2D system needs a 2D configuration")
    for radius in range(m_cap + 1):
        for center in config.centers():
            window = project(config, center, radius)
            if not system.admits(window):
                logger.info("%s refuted at radius %d, center %s", config.text(), radius, center)
                return Refutation(radius, "radius", window.pattern, center)
    return Refutation(m_cap, "radius", None, None)


def separation_certificate(system: System, radius: int, m_cap: Optional[int] = None,
                           settings: Optional[EnumerationConfig] = None) -> SeparationCertificate:
    """
    A periodic member of X_n together with a window the subshift rejects.

    2D systems use the constant-block configuration. 1D systems take the first
    periodic point of X_n, by period, that is refuted within the cap.
    """
    settings = settings or EnumerationConfig()
    sft = sft_from_language(system, radius)
    if isinstance(system, Substitution1D):
        candidates = periodic_points_1d(sft, settings.period_search_cap)
        if not candidates:
            raise HypothesisError(f"X_{radius} has no periodic point of period <= {settings.period_search_cap}")
        chosen = None
        for config in candidates:
            cap = m_cap if m_cap is not None else default_m_cap(config, settings)
            refutation = refute_membership(config, system, cap)
            if refutation.found:
                chosen = (config, refutation, cap)
                break
        if chosen is None:
            config = candidates[0]
            cap = m_cap if m_cap is not None else default_m_cap(config, settings)
            chosen = (config, refute_membership(config, system, cap), cap)
        config, refutation, cap = chosen
    else:
        config = constant_block_configuration(system, radius, settings)
        cap = m_cap if m_cap is not None else default_m_cap(config, settings)
        refutation = refute_membership(config, system, cap)

    membership = is_member(config, sft)
    logger.debug("certificate for X_%d: config %s, refuted=%s", radius, config.text(), refutation.found)
    return SeparationCertificate(radius, config, membership.transcript, refutation, cap)


def verify_certificate(certificate: SeparationCertificate, system: System) -> bool:
    """
    Re-validate a certificate from scratch.

    Windows are re-projected from the configuration and looked up in a freshly
    enumerated language (saturation for 2D, uncached saturation for 1D); the
    refutation window is re-confirmed absent the same way.
    """
    n = certificate.radius
    if isinstance(system, Substitution1D):
        allowed = {Window(n, w) for w in system.language(2 * n + 1, use_cache=False)}
    else:
        allowed = set(system.language2d(n, method="saturation"))
    for entry in certificate.transcript:
        window = project(certificate.config, entry.center, n)
        if window != entry.window or window not in allowed:
            return False
    centers = {entry.center for entry in certificate.transcript}
    if centers != set(certificate.config.centers()):
        return False

    refutation = certificate.refutation
    if not refutation.found:
        return False
    if isinstance(system, Substitution1D):
        if refutation.size <= 2 * n + 1:
            return False
        position = refutation.position[0]
        if certificate.config.block(position, refutation.size) != refutation.window:
            return False
        return refutation.window not in system.language(refutation.size, use_cache=False)
    if refutation.size <= n:
        return False
    window = project(certificate.config, refutation.position, refutation.size)
    if window.pattern != refutation.window:
        return False
    return window not in system.language2d(refutation.size, method="saturation")


def cyclic_words(alphabet: Alphabet, max_period: int) -> List[Tuple[str, ...]]:
    """Every primitive cyclic word of length <= P, one per rotation class."""
    words = set()
    for period in range(1, max_period + 1):
        for word in itertools.product(alphabet.letters, repeat=period):
            if primitive_root(word) == word:
                words.add(canonical_rotation(word))
    return sorted(words, key=lambda w: (len(w), w))


def aperiodicity_certificate_1d(system: Substitution1D, max_period: int,
                                m_cap: int) -> AperiodicityReport:
    """
    Refute every periodic configuration of least period <= P.

    Each candidate records whether its radius-1 windows are allowed and the
    shortest window length at which the subshift rejects it.
    """
    x1 = sft_from_language(system, 1)
    outcomes = []
    for word in cyclic_words(system.alphabet, max_period):
        config = PeriodicConfig(Pattern.word(word))
        passes = is_member(config, x1).member
        refutation = refute_membership(config, system, m_cap)
        if not refutation.found:
            logger.info("survivor %s up to window length %d", config.text(), m_cap)
        outcomes.append(CandidateOutcome(len(word), Pattern.word(word), passes, refutation))
    return AperiodicityReport(max_period, m_cap, outcomes)
