"""
Staircase Export

In two variables the membership region of a sum of boxes is a union of
quadrants {x >=_e a, y >=_e' b}; after dropping dominated boxes the quadrant
corners form a descending staircase. This module computes the corners and renders
them as JSON records or as a standalone SVG document.

Example:
    >>> from cli.parser import parse_expr
    >>> path = staircase_2d(parse_expr("I[1,2;0,0]+I[2,1;0,1]", 2).elaborate())
    >>> [str(c) for c in path.corners]
    ['(1, 2)', '(2, 1+)']
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from core.errors import DimensionMismatchError, EmptyRegionError
from core.exponent import Flag, geq_eps
from core.ideal import AfgIdeal
from core.monomial import Monomial, check_dims
from decomposition.transform import prune_dominated_boxes

logger = logging.getLogger(__name__)

SVG_SIZE = 400
SVG_MARGIN = 20


@dataclass(frozen=True)
class StairCorner:
    x: Fraction
    y: Fraction
    x_open: bool = False
    y_open: bool = False

    def admits(self, m: Monomial) -> bool:
        x, y = m.exps
        return geq_eps(x, self.x, Flag(int(self.x_open))) and geq_eps(y, self.y, Flag(int(self.y_open)))

    def sort_key(self) -> tuple:
        return (self.x, self.x_open)

    def to_json_data(self) -> dict:
        return {"x": str(self.x), "y": str(self.y), "x_open": self.x_open, "y_open": self.y_open}

    def __str__(self) -> str:
        x = f"{self.x}{'+' if self.x_open else ''}"
        y = f"{self.y}{'+' if self.y_open else ''}"
        return f"({x}, {y})"


@dataclass(frozen=True)
class StaircasePath:
    """
    Corners ordered by x ascending; y descends along the path. The region is
    everything above and to the right of some corner.
    """
    corners: Tuple[StairCorner, ...]

    def __post_init__(self):
        for left, right in zip(self.corners, self.corners[1:]):
            if not (left.x, left.x_open) < (right.x, right.x_open):
                raise ValueError("Staircase corners must strictly increase in x")
            if not (left.y, left.y_open) > (right.y, right.y_open):
                raise ValueError("Staircase corners must strictly decrease in y")

    def __len__(self) -> int:
        return len(self.corners)

    def contains(self, m: Monomial) -> bool:
        check_dims(2, m.dim)
        return any(corner.admits(m) for corner in self.corners)

    def to_json_data(self) -> List[dict]:
        return [corner.to_json_data() for corner in self.corners]

    def to_svg(self) -> str:
        """The staircase as an SVG document; the shaded area is the membership region."""
        top = max(max(c.x for c in self.corners), max(c.y for c in self.corners)) + 1
        scale = (SVG_SIZE - 2 * SVG_MARGIN) / float(top)

        def sx(value: Fraction) -> float:
            return round(SVG_MARGIN + float(value) * scale, 3)

        def sy(value: Fraction) -> float:
            return round(SVG_SIZE - SVG_MARGIN - float(value) * scale, 3)

        outline = [(sx(self.corners[0].x), sy(top))]
        for corner, following in zip(self.corners, self.corners[1:] + (None,)):
            outline.append((sx(corner.x), sy(corner.y)))
            outline.append((sx(following.x) if following else sx(top), sy(corner.y)))
        region = outline + [(sx(top), sy(top))]

        def points(pairs: List[Tuple[float, float]]) -> str:
            return " ".join(f"{x},{y}" for x, y in pairs)

        lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
            f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
            f'  <line x1="{SVG_MARGIN}" y1="{sy(Fraction(0))}" x2="{SVG_SIZE - SVG_MARGIN}" '
            f'y2="{sy(Fraction(0))}" stroke="black"/>',
            f'  <line x1="{SVG_MARGIN}" y1="{SVG_MARGIN}" x2="{SVG_MARGIN}" '
            f'y2="{sy(Fraction(0))}" stroke="black"/>',
            f'  <polygon points="{points(region)}" fill="#cfe2f3" stroke="none"/>',
            f'  <polyline points="{points(outline)}" fill="none" stroke="#1f4e79" stroke-width="2"/>',
        ]
        for corner in self.corners:
            fill = "white" if corner.x_open or corner.y_open else "#1f4e79"
            lines.append(
                f'  <circle cx="{sx(corner.x)}" cy="{sy(corner.y)}" r="4" '
                f'fill="{fill}" stroke="#1f4e79"><title>{corner}</title></circle>'
            )
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def staircase_2d(ideal: AfgIdeal) -> StaircasePath:
    """
    The staircase of a nonzero sum of boxes in two variables.
    """
    if ideal.dim != 2:
        raise DimensionMismatchError(f"Staircases need dimension 2, got {ideal.dim}")
    boxes = prune_dominated_boxes(ideal.boxes)
    if not boxes:
        raise EmptyRegionError("empty region: the zero ideal has no staircase")
    corners = sorted(
        (
            StairCorner(
                x.alpha.value,
                y.alpha.value,
                x.eps is Flag.OPEN,
                y.eps is Flag.OPEN,
            )
            for x, y in (box.rays for box in boxes)
        ),
        key=StairCorner.sort_key,
    )
    logger.debug("staircase: %d boxes -> %d corners", len(ideal.boxes), len(corners))
    return StaircasePath(tuple(corners))
