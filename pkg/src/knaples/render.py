"""ASCII and throwaway-vector renderings of paths and trees.

The staircase renderer draws one character per step ('/' for U, '\\' for D)
with a dashed ruler on the y = 0 line, so k-Dyck dips below the axis are
visible.  The SVG and DOT emitters are thin string builders with no
external dependencies.
"""

from __future__ import annotations

from .paths import UP, heights, validate_step_word
from .trees import EMPTY_MARK, all_addresses


def render_path_ascii(word: str) -> str:
    validate_step_word(word)
    if not word:
        return "(empty path)"
    hs = heights(word)
    top = max(hs)
    bottom = min(hs)
    lines = []
    for level in range(top, bottom, -1):
        row = []
        for t, ch in enumerate(word, 1):
            if ch == UP and hs[t] == level:
                row.append("/")
            elif ch != UP and hs[t - 1] == level:
                row.append("\\")
            else:
                row.append(" ")
        lines.append("".join(row).rstrip())
        if level == 1:
            lines.append("-" * len(word))
    if top <= 0:
        lines.insert(0, "-" * len(word))
    return "\n".join(lines)


def render_path_svg(word: str, unit: int = 12) -> str:
    validate_step_word(word)
    hs = heights(word)
    top = max(hs + [0])
    points = " ".join(f"{t * unit},{(top - h) * unit}"
                      for t, h in enumerate(hs))
    width = max(1, len(word)) * unit
    axis_y = top * unit
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{(top - min(hs)) * unit + unit}">\n'
        f'  <line x1="0" y1="{axis_y}" x2="{width}" y2="{axis_y}" '
        f'stroke="#999" stroke-dasharray="4"/>\n'
        f'  <polyline points="{points}" fill="none" stroke="black"/>\n'
        f'</svg>'
    )


def render_tree_ascii(b) -> str:
    if b is None:
        return EMPTY_MARK

    def walk(sub, prefix: str, tag: str) -> list[str]:
        lines = [f"{prefix}{tag}●"]
        child_prefix = prefix + " " * len(tag)
        if sub[0] is not None:
            lines.extend(walk(sub[0], child_prefix, "L:"))
        elif sub[1] is not None:
            lines.append(f"{child_prefix}L:{EMPTY_MARK}")
        if sub[1] is not None:
            lines.extend(walk(sub[1], child_prefix, "R:"))
        elif sub[0] is not None:
            lines.append(f"{child_prefix}R:{EMPTY_MARK}")
        return lines

    return "\n".join(walk(b, "", ""))


def render_tree_dot(b) -> str:
    lines = ["digraph tree {"]
    for addr in all_addresses(b):
        name = addr or "root"
        lines.append(f'  "{name}";')
        if addr:
            parent = addr[:-1] or "root"
            lines.append(f'  "{parent}" -> "{name}" [label="{addr[-1]}"];')
    lines.append("}")
    return "\n".join(lines)


def render_tree_svg(b, unit: int = 28) -> str:
    """Nested-box rendering: each node is a box containing its children."""
    boxes: list[str] = []

    def walk(sub, x: int, y: int) -> int:
        # returns the width consumed, in units
        if sub is None:
            return 0
        left_w = walk(sub[0], x, y + 1)
        right_w = walk(sub[1], x + left_w + 1, y + 1)
        w = max(1, left_w + right_w + 1)
        boxes.append(f'  <rect x="{x * unit}" y="{y * unit}" '
                     f'width="{w * unit}" height="{unit}" '
                     f'fill="none" stroke="black"/>')
        return w

    total = walk(b, 0, 0)
    depth = 1 + max((len(a) for a in all_addresses(b)), default=0)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{max(total, 1) * unit}" height="{depth * unit}">\n'
            + "\n".join(boxes) + "\n</svg>")
