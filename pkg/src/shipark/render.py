"""Deterministic SVG picture of the n = 3 arrangement with its labels.

The drawing lives in the sum-zero plane.  A projected point maps to the
plane coordinates (a, b) = (x_1 - x_2, x_2 - x_3), in which the six
hyperplanes become the straight lines a = 0, a = 1, b = 0, b = 1,
a + b = 0, and a + b = 1.  Every label sits at the projection of its
region's computed witness.  All layout arithmetic is exact; numbers are
formatted through one fixed-precision helper, so the output bytes are a
pure function of the input.
"""

from __future__ import annotations

from fractions import Fraction

from .bijections import pak_stanley_label
from .errors import ValidationError
from .geometry import enumerate_regions, project_to_sum_zero

_SCALE = 120  # pixels per unit
_FONT = 12


def _fmt(value: Fraction) -> str:
    """Fraction to a 2-decimal string via integer math only."""
    scaled = value * 100
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    # round half away from zero without touching floats
    if 2 * rem >= scaled.denominator:
        whole += 1
    sign = "-" if whole < 0 else ""
    q, r = divmod(abs(whole), 100)
    return f"{sign}{q}.{r:02d}"


def render_arrangement_svg(n: int) -> str:
    """The figure for n = 3: six lines and sixteen region labels."""
    if n != 3:
        raise ValidationError("rendering is implemented for n = 3 only")

    spots = []  # (a, b, label text)
    for sv, witness in enumerate_regions(3):
        p = project_to_sum_zero(witness.point).coords
        a, b = p[0] - p[1], p[1] - p[2]
        label = pak_stanley_label(sv)
        spots.append((a, b, "".join(str(v) for v in label.entries)))

    pad = Fraction(1)
    a_lo = min(a for a, _, _ in spots) - pad
    a_hi = max(a for a, _, _ in spots) + pad
    b_lo = min(b for _, b, _ in spots) - pad
    b_hi = max(b for _, b, _ in spots) + pad

    def to_px(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
        return ((a - a_lo) * _SCALE, (b_hi - b) * _SCALE)

    width = (a_hi - a_lo) * _SCALE
    height = (b_hi - b_lo) * _SCALE

    segments = []
    for c in (Fraction(0), Fraction(1)):
        segments.append(((c, b_lo), (c, b_hi)))  # a = c
        segments.append(((a_lo, c), (a_hi, c)))  # b = c
        # a + b = c clipped to the viewport rectangle
        start = max(a_lo, c - b_hi)
        stop = min(a_hi, c - b_lo)
        segments.append(((start, c - start), (stop, c - stop)))

    lines = []
    for (a1, b1), (a2, b2) in segments:
        x1, y1 = to_px(a1, b1)
        x2, y2 = to_px(a2, b2)
        lines.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )

    texts = []
    for a, b, label in spots:
        x, y = to_px(a, b)
        texts.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}">{label}</text>')

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g stroke="#444" stroke-width="1">',
        *lines,
        "</g>",
        f'<g font-family="monospace" font-size="{_FONT}" '
        f'text-anchor="middle" fill="#000">',
        *texts,
        "</g>",
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
