"""Text renderings of Young, domino and bi-tableaux: box-drawing ascii, json, latex."""

from __future__ import annotations

import itertools
import json

from .core import BiTableau, DomainError, DominoTableau, YoungTableau

# (up, down, left, right) -> junction character
_JUNCTIONS = {
    (0, 0, 1, 1): "─", (1, 1, 0, 0): "│",
    (0, 1, 0, 1): "┌", (0, 1, 1, 0): "┐", (1, 0, 0, 1): "└", (1, 0, 1, 0): "┘",
    (1, 1, 0, 1): "├", (1, 1, 1, 0): "┤", (0, 1, 1, 1): "┬", (1, 0, 1, 1): "┴",
    (1, 1, 1, 1): "┼", (0, 0, 0, 0): " ",
    (1, 0, 0, 0): "│", (0, 1, 0, 0): "│", (0, 0, 1, 0): "─", (0, 0, 0, 1): "─",
}


def _pieces(t) -> tuple[dict[tuple[int, int], int], dict[int, str], dict[int, tuple[int, int]]]:
    """cell -> piece id, piece id -> label text, piece id -> its first cell."""
    owner: dict[tuple[int, int], int] = {}
    label: dict[int, str] = {}
    anchor: dict[int, tuple[int, int]] = {}
    if isinstance(t, DominoTableau):
        for k, d in enumerate(t.dominoes):
            for cell in d.cells:
                owner[cell] = k
            label[k] = str(d.label)
            anchor[k] = d.cells[0]
    else:
        k = 0
        for r, row in enumerate(t.rows, 1):
            for c, v in enumerate(row, 1):
                owner[(r, c)] = k
                label[k] = str(v)
                anchor[k] = (r, c)
                k += 1
    return owner, label, anchor


def _ascii_grid(t) -> list[str]:
    owner, label, anchor = _pieces(t)
    if not owner:
        return []
    nrows = max(r for r, _ in owner)
    ncols = max(c for _, c in owner)
    w = max(len(s) for s in label.values()) + 2
    at = lambda r, c: owner.get((r, c))
    # horizontal edge above cell (r, c): between rows r-1 and r
    h_edge = lambda r, c: at(r - 1, c) != at(r, c)
    v_edge = lambda r, c: at(r, c - 1) != at(r, c)
    lines = []
    for r in range(1, nrows + 2):
        # border line above row r
        border = []
        for c in range(1, ncols + 2):
            up = v_edge(r - 1, c) if r > 1 else False
            down = v_edge(r, c) if r <= nrows else False
            left = h_edge(r, c - 1) if c > 1 else False
            right = h_edge(r, c) if c <= ncols else False
            border.append(_JUNCTIONS[(int(up), int(down), int(left), int(right))])
            if c <= ncols:
                border.append(("─" if h_edge(r, c) else " ") * w)
        lines.append("".join(border).rstrip())
        if r > nrows:
            break
        body = []
        c = 1
        while c <= ncols + 1:
            body.append("│" if v_edge(r, c) else " ")
            if c > ncols:
                break
            piece = at(r, c)
            if piece is not None and anchor[piece] == (r, c) and at(r, c + 1) == piece:
                # horizontal domino: centre over both cells and the gap between them
                body.append(label[piece].center(2 * w + 1))
                c += 2
                continue
            text = label[piece] if piece is not None and anchor[piece] == (r, c) else ""
            body.append(text.center(w))
            c += 1
        lines.append("".join(body).rstrip())
    return lines


def render_ascii(t) -> str:
    if isinstance(t, BiTableau):
        left, right = _ascii_grid(t.t1), _ascii_grid(t.t2)
        if not left and not right:
            return ""
        width = max((len(s) for s in left), default=0)
        height = max(len(left), len(right))
        left += [""] * (height - len(left))
        right += [""] * (height - len(right))
        return "\n".join((a.ljust(width) + "   " + b).rstrip() for a, b in zip(left, right))
    return "\n".join(_ascii_grid(t))


def _latex_young(t: YoungTableau) -> str:
    if not t.rows:
        return ""
    ncols = max(len(r) for r in t.rows)
    out = ["\\begin{tabular}{" + "|c" * ncols + "|}", f"\\cline{{1-{len(t.rows[0])}}}"]
    for row in t.rows:
        out.append(" & ".join(map(str, row)) + " \\\\")
        out.append(f"\\cline{{1-{len(row)}}}")
    out.append("\\end{tabular}")
    return "\n".join(out)


def _latex_domino(t: DominoTableau) -> str:
    if not t.dominoes:
        return ""
    grid = t.cell_map()
    shape = t.shape
    ncols = shape[0]
    out = ["\\begin{tabular}{" + "|c" * ncols + "|}", f"\\cline{{1-{shape[0]}}}"]
    for r, length in enumerate(shape, 1):
        entries = []
        c = 1
        while c <= length:
            d = grid[(r, c)]
            if not d.vertical:
                sep = "|c|" if c == 1 else "c|"
                entries.append(f"\\multicolumn{{2}}{{{sep}}}{{{d.label}}}")
                c += 2
                continue
            entries.append(str(d.label) if d.row == r else "")
            c += 1
        out.append(" & ".join(entries) + " \\\\")
        # rule under each cell except where a vertical domino continues downward
        ruled = [c for c in range(1, length + 1)
                 if not (grid[(r, c)].vertical and grid[(r, c)].row == r)]
        for _, run in itertools.groupby(enumerate(ruled), key=lambda p: p[1] - p[0]):
            run = [c for _, c in run]
            out.append(f"\\cline{{{run[0]}-{run[-1]}}}")
    out.append("\\end{tabular}")
    return "\n".join(out)


def render_latex(t) -> str:
    if isinstance(t, BiTableau):
        parts = [_latex_young(t.t1), _latex_young(t.t2)]
        return "\\left(" + ",\\ ".join(p or "\\emptyset" for p in parts) + "\\right)"
    if isinstance(t, DominoTableau):
        return _latex_domino(t)
    return _latex_young(t)


def render_json(t) -> str:
    return json.dumps(t.to_json(), sort_keys=True)


def tableau_from_json(data: dict):
    """Rebuild whichever tableau type a json record describes."""
    if "dominoes" in data:
        return DominoTableau.from_json(data)
    if "t1" in data and "t2" in data:
        return BiTableau.from_json(data)
    if "rows" in data:
        return YoungTableau.from_json(data)
    raise DomainError("json record is not a tableau")


def render(t, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(t)
    if fmt == "json":
        return render_json(t)
    if fmt == "latex":
        return render_latex(t)
    raise DomainError(f"unknown format {fmt!r}")
