# File: /hierarchical_tilings/core/substitution2d.py
# Directory: /hierarchical_tilings/core

"""
Two-dimensional substitutions.

ProductSubstitution2D sends u×v to the block whose cell (c, r) is
psi_h(u)[c] × psi_v(v)[r]. BlockSubstitution2D sends every letter to a q×q
block. Both share recursive substitution, iteration and window enumeration.
"""

import logging
import threading
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

import numpy as np

from ..exceptions import SubstitutionError, ValidationError
from .substitution import Substitution1D, fibonacci
from .symbolic import (
    Alphabet,
    Letter,
    Pattern,
    Window,
    product_letter,
    split_product,
    subwindows,
)

logger = logging.getLogger(__name__)


def substitute_block(pattern: Pattern, rule) -> Pattern:
    """
    Replace every cell of a 2D pattern by its rule image and assemble the result.

    Images in one column must share a width and images in one row a height;
    anything else has no consistent placement.
    """
    width, height = pattern.extent
    images = {(c, r): rule(pattern.at((c, r))) for c in range(width) for r in range(height)}
    col_widths = [images[(c, 0)].extent[0] for c in range(width)]
    row_heights = [images[(0, r)].extent[1] for r in range(height)]
    for (c, r), image in images.items():
        if image.extent != (col_widths[c], row_heights[r]):
            raise SubstitutionError(
                f"image of cell {(c, r)} has extent {image.extent}, "
                f"expected {(col_widths[c], row_heights[r])}"
            )
    out_rows: List[List[Letter]] = []
    for r in range(height):
        block_rows = [[] for _ in range(row_heights[r])]
        for c in range(width):
            for i, row in enumerate(images[(c, r)].rows()):
                block_rows[i].extend(row)
        out_rows.extend(block_rows)
    return Pattern.block(out_rows)


class Substitution2D:
    """Shared behavior of rectangular 2D substitutions."""

    alphabet: Alphabet

    def __init__(self):
        self._lock = threading.Lock()
        self._levels: Dict[Tuple[Letter, int], Pattern] = {}

    def rule(self, letter: Letter) -> Pattern:
        raise NotImplementedError

    def extent(self, letter: Letter, level: int) -> Tuple[int, int]:
        raise NotImplementedError

    def is_primitive(self) -> bool:
        raise NotImplementedError

    def substitute(self, pattern: Pattern) -> Pattern:
        """One recursive substitution step on a finite 2D pattern."""
        return substitute_block(pattern, self.rule)

    def iterate_recursive(self, letter: Letter, level: int) -> Pattern:
        """psi^k(letter) by k substitution steps."""
        if letter not in self.alphabet:
            raise ValidationError(f"unknown letter {letter!r}")
        if level < 0:
            raise ValidationError("level must be nonnegative")
        key = (letter, level)
        cached = self._levels.get(key)
        if cached is not None:
            return cached
        pattern = Pattern.block([[letter]])
        for _ in range(level):
            pattern = self.substitute(pattern)
        with self._lock:
            self._levels.setdefault(key, pattern)
        return pattern

    def iterate2d(self, letter: Letter, level: int) -> Pattern:
        return self.iterate_recursive(letter, level)

    def admits(self, window: Window) -> bool:
        """Whether a window belongs to the subshift's language."""
        return window in self.language2d(window.radius)

    def language2d(self, radius: int, method: str = "saturation",
                   level_cap: Optional[int] = None) -> FrozenSet[Window]:
        if method != "saturation":
            raise ValidationError(f"unknown enumeration method {method!r}")
        return self._saturate(radius, level_cap)

    def _saturate(self, radius: int, level_cap: Optional[int]) -> FrozenSet[Window]:
        if radius < 0:
            raise ValidationError("radius must be nonnegative")
        primitive = self.is_primitive()
        if not primitive and level_cap is None:
            raise SubstitutionError("saturation not guaranteed")
        cap = level_cap if level_cap is not None else 32
        side = 2 * radius + 1

        def level_windows(k: int) -> FrozenSet[Window]:
            found: set = set()
            for letter in self.alphabet:
                pattern = self.iterate2d(letter, k)
                if min(pattern.extent) >= side:
                    found |= subwindows(pattern, radius)
            return frozenset(found)

        k = 0
        while k < cap and min(min(self.extent(a, k)) for a in self.alphabet) < side:
            k += 1
        current = level_windows(k)
        while k < cap:
            following = level_windows(k + 1)
            if following == current:
                logger.debug("language2d(%d) saturated with %d windows", radius, len(current),
                             extra={"level_tag": k})
                return current
            current = following
            k += 1
        if primitive and level_cap is None:
            raise SubstitutionError(f"language2d({radius}) did not saturate by level {cap}")
        return current

    def hierarchy_counts(self, letter: Letter, level: int) -> List[int]:
        """Number of level-j supertiles in psi^level(letter), for j = 0..level."""
        return [len(self.iterate2d(letter, level - j).cells) for j in range(level + 1)]

    def supertile_boxes(self, letter: Letter, level: int) -> Dict[int, List[Tuple[int, int, int, int]]]:
        """
        Boxes (x, y, width, height), in level-0 cell units, of every level-j
        supertile inside psi^level(letter).
        """
        boxes: Dict[int, List[Tuple[int, int, int, int]]] = {j: [] for j in range(level + 1)}

        def place(token: Letter, j: int, x: int, y: int) -> None:
            w, h = self.extent(token, j)
            boxes[j].append((x, y, w, h))
            if j == 0:
                return
            image = self.rule(token)
            xs = [x]
            for c in range(image.extent[0] - 1):
                xs.append(xs[-1] + self.extent(image.at((c, 0)), j - 1)[0])
            ys = [y]
            for r in range(image.extent[1] - 1):
                ys.append(ys[-1] + self.extent(image.at((0, r)), j - 1)[1])
            for c in range(image.extent[0]):
                for r in range(image.extent[1]):
                    place(image.at((c, r)), j - 1, xs[c], ys[r])

        place(letter, level, 0, 0)
        return boxes


class ProductSubstitution2D(Substitution2D):
    """The product of two 1D substitutions acting on the product alphabet."""

    def __init__(self, horizontal: Substitution1D, vertical: Substitution1D):
        super().__init__()
        self.horizontal = horizontal
        self.vertical = vertical
        self.alphabet = Alphabet(tuple(
            product_letter(u, v) for u in horizontal.alphabet for v in vertical.alphabet
        ))

    def __repr__(self) -> str:
        return f"ProductSubstitution2D({self.horizontal!r}, {self.vertical!r})"

    def rule(self, letter: Letter) -> Pattern:
        u, v = split_product(letter)
        hu = self.horizontal.rules[u]
        vv = self.vertical.rules[v]
        return Pattern.block([[product_letter(x, y) for x in hu] for y in vv])

    def extent(self, letter: Letter, level: int) -> Tuple[int, int]:
        u, v = split_product(letter)
        return self.horizontal.length(u, level), self.vertical.length(v, level)

    def is_primitive(self) -> bool:
        return self.horizontal.is_primitive() and self.vertical.is_primitive()

    def iterate2d(self, letter: Letter, level: int) -> Pattern:
        """psi_2^k(u×v) by the product formula."""
        if letter not in self.alphabet:
            raise ValidationError(f"unknown letter {letter!r}")
        u, v = split_product(letter)
        row = self.horizontal.iterate(u, level).cells
        column = self.vertical.iterate(v, level).cells
        return Pattern.block([[product_letter(x, y) for x in row] for y in column])

    def language2d(self, radius: int, method: str = "product",
                   level_cap: Optional[int] = None) -> FrozenSet[Window]:
        """
        Radius-n windows of the product subshift.

        Args:
            radius: Window radius n
            method: "product" pairs the two 1D languages of length 2n+1;
                "saturation" scans level-k letters until stable

        Returns:
            The window set
        """
        if method == "saturation":
            return self._saturate(radius, level_cap)
        if method != "product":
            raise ValidationError(f"unknown enumeration method {method!r}")
        side = 2 * radius + 1
        rows = self.horizontal.language(side, level_cap)
        columns = self.vertical.language(side, level_cap)
        return frozenset(
            Window(radius, Pattern.block([[product_letter(x, y) for x in u.cells] for y in v.cells]))
            for u in rows
            for v in columns
        )

    def admits(self, window: Window) -> bool:
        """Product membership: the window factors as u×v with u, v in the 1D languages."""
        pattern = window.pattern
        side = pattern.width
        try:
            row = tuple(split_product(pattern.at((c, 0)))[0] for c in range(side))
            column = tuple(split_product(pattern.at((0, r)))[1] for r in range(side))
        except ValidationError:
            return False
        expected = tuple(product_letter(row[c], column[r]) for r in range(side) for c in range(side))
        if expected != pattern.cells:
            return False
        return (Pattern.word(row) in self.horizontal.language(side)
                and Pattern.word(column) in self.vertical.language(side))


class BlockSubstitution2D(Substitution2D):
    """A uniform substitution sending every letter to a q×q block."""

    def __init__(self, alphabet, rules: Mapping[Letter, Pattern]):
        super().__init__()
        self.alphabet = alphabet if isinstance(alphabet, Alphabet) else Alphabet(tuple(alphabet))
        self.rules: Dict[Letter, Pattern] = {}
        sizes = set()
        for letter in self.alphabet:
            if letter not in rules:
                raise ValidationError(f"no rule for letter {letter!r}")
            image = rules[letter]
            if image.dimension != 2 or image.width != image.height:
                raise SubstitutionError(
                    f"rule for {letter!r} is not square; only product or uniform block rules are supported"
                )
            unknown = image.letters() - set(self.alphabet.letters)
            if unknown:
                raise ValidationError(f"rule for {letter!r} uses unknown letters {sorted(unknown)}")
            sizes.add(image.width)
            self.rules[letter] = image
        if len(sizes) != 1:
            raise SubstitutionError(f"block images must share one size, got {sorted(sizes)}")
        self.q = sizes.pop()
        if self.q < 2:
            raise ValidationError("block size q must be at least 2")

    def __repr__(self) -> str:
        return f"BlockSubstitution2D(q={self.q}, letters={self.alphabet.letters})"

    def rule(self, letter: Letter) -> Pattern:
        return self.rules[letter]

    def extent(self, letter: Letter, level: int) -> Tuple[int, int]:
        side = self.q ** level
        return side, side

    def is_primitive(self) -> bool:
        n = len(self.alphabet)
        support = np.zeros((n, n), dtype=np.int64)
        for j, letter in enumerate(self.alphabet):
            for child in self.rules[letter].cells:
                support[self.alphabet.index(child), j] = 1
        power = support.copy()
        for _ in range(n * n):
            if (power > 0).all():
                return True
            power = ((power @ support) > 0).astype(np.int64)
        return bool((power > 0).all())

    def desubstitute(self, pattern: Pattern) -> Pattern:
        """
        Inverse of one substitution step: read each q×q block of the grid as
        the letter whose rule image it is.

        Raises:
            SubstitutionError: If a block is not a rule image or the pattern
                is not a whole number of blocks
        """
        q = self.q
        if pattern.width % q or pattern.height % q:
            raise SubstitutionError(f"pattern extent {pattern.extent} is not a multiple of {q}")
        by_image = {image: letter for letter, image in self.rules.items()}
        if len(by_image) != len(self.rules):
            raise SubstitutionError("rule images are not distinct; desubstitution is ambiguous")
        rows = []
        for r in range(pattern.height // q):
            row = []
            for c in range(pattern.width // q):
                block = pattern.sub((c * q, r * q), (q, q))
                if block not in by_image:
                    raise SubstitutionError(f"block at {(c, r)} is not a rule image")
                row.append(by_image[block])
            rows.append(row)
        return Pattern.block(rows)


def product(horizontal: Substitution1D, vertical: Substitution1D) -> ProductSubstitution2D:
    """The product substitution psi_h × psi_v."""
    if not (horizontal.is_primitive() and vertical.is_primitive()):
        raise SubstitutionError("product factors must be primitive")
    return ProductSubstitution2D(horizontal, vertical)


# Chair orientations, named by the corner of the 2×2 block the chair points to.
CHAIR_ORIENTATIONS: Tuple[Letter, ...] = ("ne", "nw", "sw", "se")

_CORNER_CELL = {"sw": (0, 0), "se": (1, 0), "nw": (0, 1), "ne": (1, 1)}
_OPPOSITE = {"ne": "sw", "sw": "ne", "nw": "se", "se": "nw"}
_COUNTERCLOCKWISE = {"ne": "nw", "nw": "sw", "sw": "se", "se": "ne"}


def _chair_rule(orientation: Letter) -> Pattern:
    # the cell diagonal to the orientation's corner takes the next orientation
    # counterclockwise; the other three keep the parent's
    diagonal = _CORNER_CELL[_OPPOSITE[orientation]]
    cells = {
        cell: (_COUNTERCLOCKWISE[orientation] if cell == diagonal else orientation)
        for cell in _CORNER_CELL.values()
    }
    return Pattern.block([[cells[(c, r)] for c in range(2)] for r in range(2)])


CHAIR_RULES: Dict[Letter, Pattern] = {o: _chair_rule(o) for o in CHAIR_ORIENTATIONS}


def chair() -> BlockSubstitution2D:
    """The four-orientation 2×2 block coding of the chair substitution."""
    return BlockSubstitution2D(Alphabet(CHAIR_ORIENTATIONS), CHAIR_RULES)


def fibonacci_product() -> ProductSubstitution2D:
    """F(2), the product of the Fibonacci substitution with itself."""
    return product(fibonacci(), fibonacci())
