# SPDX-License-Identifier: BSD-2-Clause

__all__ = ["format_table"]


def format_table(headers, rows):
    """Left-aligned plain-text table with a dashed rule under the header."""
    cells = [[str(cell) for cell in row] for row in [headers] + list(rows)]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for index, row in enumerate(cells):
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if index == 0:
            lines.append("  ".join("-" * width for width in widths))
    return "\n".join(lines)
