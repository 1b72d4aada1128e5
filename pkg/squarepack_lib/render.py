# SPDX-License-Identifier: BSD-2-Clause

import colorsys
import logging

import svgwrite


__all__ = ["render_manifest", "write_svg", "CANVAS_SIZE", "HUE_BUCKETS"]


logger = logging.getLogger(__name__)


CANVAS_SIZE = 1000
HUE_BUCKETS = 12
MARGIN = 10


def _colour(bucket):
    r, g, b = colorsys.hsv_to_rgb(bucket / HUE_BUCKETS, 0.55, 0.9)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def render_manifest(manifest):
    """Draw the target outline, the placed squares and the leftover rectangles as SVG text.

    The longer side of the target spans ``CANVAS_SIZE`` pixels and ``y`` grows
    upwards. Squares are filled by index, ``HUE_BUCKETS`` consecutive blocks
    of indices sharing a hue.
    """
    target = manifest.target
    scale = CANVAS_SIZE / max(target.dx, target.dy)
    width = target.dx * scale + 2 * MARGIN
    height = target.dy * scale + 2 * MARGIN

    def box(x0, y0, x1, y1):
        insert = (round(MARGIN + (x0 - target.x0) * scale, 4),
                  round(MARGIN + (target.y1 - y1) * scale, 4))
        size = (round((x1 - x0) * scale, 4), round((y1 - y0) * scale, 4))
        return insert, size

    drawing = svgwrite.Drawing(size=(f"{width:.4f}", f"{height:.4f}"), profile="full", debug=False)
    drawing.viewbox(0, 0, round(width, 4), round(height, 4))

    squares = drawing.g(class_="squares", stroke="none")
    bucket_size = max(1, -(-len(manifest.squares) // HUE_BUCKETS))
    for offset, square in enumerate(manifest.squares):
        insert, size = box(square.x, square.y, square.x1, square.y1)
        squares.add(drawing.rect(insert=insert, size=size, class_="square",
                                 fill=_colour(offset // bucket_size)))
    drawing.add(squares)

    leftovers = drawing.g(class_="leftovers", fill="none", stroke="#555555", stroke_width=0.5)
    for rect in manifest.leftovers:
        insert, size = box(rect.x0, rect.y0, rect.x1, rect.y1)
        leftovers.add(drawing.rect(insert=insert, size=size, class_="leftover"))
    drawing.add(leftovers)

    insert, size = box(target.x0, target.y0, target.x1, target.y1)
    drawing.add(drawing.rect(insert=insert, size=size, class_="target", fill="none",
                             stroke="black", stroke_width=1))
    logger.debug("rendered %d squares and %d leftovers", len(manifest.squares),
                 len(manifest.leftovers))
    return drawing.tostring()


def write_svg(manifest, path):
    with open(path, "w") as f:
        f.write(render_manifest(manifest))
