# hierarchical_tilings/utils/render.py

"""
SVG rendering of substitution patches and rectangle tilings.

Level-0 cells are filled by letter; supertiles of every level are drawn as
nested outlines, heavier for higher levels.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import svgwrite

from ..core.substitution import Substitution1D
from ..core.substitution2d import Substitution2D
from ..core.symbolic import Alphabet, Letter
from ..core.tiling_plane import Rect

logger = logging.getLogger(__name__)

PALETTE = (
    "#e8c547", "#5c80bc", "#cdd1c4", "#30323d", "#a23b72",
    "#3b8ea5", "#f18f01", "#6a994e", "#bc4749", "#8d99ae",
)

Box = Tuple[int, int, int, int]


@dataclass
class RenderSummary:
    """What was drawn: cell count and areas in level-0 units."""
    path: str
    cells: int
    cell_area: float
    patch_area: float
    outlines: Dict[int, int]


def letter_colors(alphabet: Alphabet) -> Dict[Letter, str]:
    return {letter: PALETTE[i % len(PALETTE)] for i, letter in enumerate(alphabet.letters)}


def _boxes_1d(system: Substitution1D, letter: Letter, level: int) -> Dict[int, List[Box]]:
    boxes: Dict[int, List[Box]] = {}
    for j in range(level + 1):
        x = 0
        boxes[j] = []
        for token in system.iterate(letter, level - j).cells:
            width = system.length(token, j)
            boxes[j].append((x, 0, width, 1))
            x += width
    return boxes


def supertile_outlines(system: Union[Substitution1D, Substitution2D], letter: Letter,
                       level: int) -> Dict[int, List[Box]]:
    """Boxes of every level-j supertile of psi^level(letter), in cell units."""
    if isinstance(system, Substitution1D):
        return _boxes_1d(system, letter, level)
    return system.supertile_boxes(letter, level)


def render_substitution(system: Union[Substitution1D, Substitution2D], letter: Letter, level: int,
                        path: str, cell: int = 16) -> RenderSummary:
    """
    Draw psi^level(letter) with its supertile hierarchy.

    Args:
        system: 1D or 2D substitution
        letter: Seed letter
        level: Number of substitution steps
        path: Output SVG path
        cell: Pixel size of one level-0 cell

    Returns:
        RenderSummary with the cell count and area check
    """
    if isinstance(system, Substitution1D):
        pattern = system.iterate(letter, level)
    else:
        pattern = system.iterate2d(letter, level)
    width, height = pattern.width, pattern.height
    colors = letter_colors(system.alphabet)
    outlines = supertile_outlines(system, letter, level)

    drawing = svgwrite.Drawing(path, size=(width * cell, height * cell), profile="tiny")
    drawing.viewbox(0, 0, width * cell, height * cell)
    cells = drawing.add(drawing.g(id="cells", stroke="#ffffff", stroke_width=0.5))
    area = 0
    for row, letters in enumerate(pattern.rows()):
        for column, token in enumerate(letters):
            y = (height - 1 - row) * cell
            cells.add(drawing.rect((column * cell, y), (cell, cell), fill=colors[token]))
            area += 1

    counts = {}
    for j in range(1, level + 1):
        group = drawing.add(drawing.g(id=f"level-{j}", fill="none", stroke="#000000",
                                      stroke_width=0.5 + j))
        for x, y, w, h in outlines[j]:
            group.add(drawing.rect((x * cell, (height - y - h) * cell), (w * cell, h * cell)))
        counts[j] = len(outlines[j])
    drawing.save()
    logger.debug("rendered %d cells and %s outlines to %s", area, counts, path)
    return RenderSummary(path, len(pattern.cells), float(area), float(width * height), counts)


def render_rects(rects: Sequence[Rect], path: str, scale: int = 32) -> RenderSummary:
    """Draw a finite patch of a rectangle tiling of the plane, one color per letter."""
    if not rects:
        raise ValueError("nothing to render")
    x0 = min(float(r.x) for r in rects)
    y0 = min(float(r.y) for r in rects)
    x1 = max(float(r.x + r.w) for r in rects)
    y1 = max(float(r.y + r.h) for r in rects)
    colors = letter_colors(Alphabet(tuple(sorted({r.letter for r in rects}))))

    drawing = svgwrite.Drawing(path, size=((x1 - x0) * scale, (y1 - y0) * scale), profile="tiny")
    drawing.viewbox(0, 0, (x1 - x0) * scale, (y1 - y0) * scale)
    tiles = drawing.add(drawing.g(id="tiles", stroke="#000000", stroke_width=0.5))
    area = 0.0
    for r in rects:
        w, h = float(r.w), float(r.h)
        x, y = float(r.x) - x0, y1 - float(r.y) - h
        tiles.add(drawing.rect((x * scale, y * scale), (w * scale, h * scale), fill=colors[r.letter]))
        area += w * h
    drawing.save()
    return RenderSummary(path, len(rects), area, (x1 - x0) * (y1 - y0), {})
