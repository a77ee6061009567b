import json

import pytest

from domino_qsym.core import BiTableau, DomainError, Domino, DominoTableau, YoungTableau
from domino_qsym.render import render, render_ascii, render_json, render_latex, tableau_from_json

BV_Q_ASCII = """\
┌───┬───────┬───┬───┐
│ 1 │   2   │ 5 │ 8 │
│   ├───────┤   │   │
│   │   3   │   │   │
├───┴───┬───┼───┴───┘
│   4   │ 9 │
├───┬───┤   │
│ 6 │ 7 │   │
│   │   ├───┘
│   │   │
└───┴───┘"""


def test_single_horizontal_domino():
    t = DominoTableau((Domino(1, 1, "H", 1),))
    assert render_ascii(t) == "┌───────┐\n│   1   │\n└───────┘"


def test_single_vertical_domino():
    t = DominoTableau((Domino(1, 1, "V", 1),))
    assert render_ascii(t) == "┌───┐\n│ 1 │\n│   │\n│   │\n└───┘"


def test_nine_domino_tableau(bv_q):
    assert render_ascii(bv_q) == BV_Q_ASCII
    # every label shows up exactly once
    text = render_ascii(bv_q)
    assert sorted(ch for ch in text if ch.isdigit()) == [str(i) for i in range(1, 10)]


def test_empty_tableaux():
    assert render_ascii(YoungTableau(())) == ""
    assert render_ascii(DominoTableau(())) == ""
    assert render_ascii(BiTableau(YoungTableau(()), YoungTableau(()))) == ""
    assert json.loads(render_json(YoungTableau(()))) == {"rows": []}


def test_young_and_bitableau_ascii():
    y = YoungTableau(((1, 3), (2,)))
    assert render_ascii(y) == "┌───┬───┐\n│ 1 │ 3 │\n├───┼───┘\n│ 2 │\n└───┘"
    b = BiTableau(y, YoungTableau(((4, 5),)))
    lines = render_ascii(b).splitlines()
    assert lines[1] == "│ 1 │ 3 │   │ 4 │ 5 │"
    assert len(lines) == 5


def test_wide_labels_stay_aligned():
    y = YoungTableau(((1, 2, 10), (11,)))
    lines = render_ascii(y).splitlines()
    assert lines[1] == "│ 1  │ 2  │ 10 │"
    assert lines[3] == "│ 11 │"


def test_latex_domino(bv_q):
    text = render_latex(bv_q)
    assert text.startswith("\\begin{tabular}{|c|c|c|c|c|}")
    assert text.endswith("\\end{tabular}")
    assert "tikz" not in text
    assert text.count("\\multicolumn{2}") == 3
    assert "\\multicolumn{2}{|c|}{4} & 9 \\\\" in text


def test_latex_bitableau_marks_empty_side():
    b = BiTableau(YoungTableau(()), YoungTableau(((1, 2),)))
    text = render_latex(b)
    assert text.startswith("\\left(\\emptyset,")
    assert "1 & 2 \\\\" in text


def test_all_formats_round_trip_through_json(bv_q, bv_p, dts_v, bit_t, bit_u, rsb_pair):
    tableaux = [bv_q, bv_p, dts_v, bit_t, bit_u, *rsb_pair, YoungTableau(((1, 3), (2,))),
                YoungTableau(()), DominoTableau(())]
    for t in tableaux:
        data = json.loads(render_json(t))
        back = tableau_from_json(data)
        assert back == t
        for fmt in ("ascii", "json", "latex"):
            assert render(back, fmt) == render(t, fmt)


def test_bad_inputs():
    with pytest.raises(DomainError):
        tableau_from_json({"cells": []})
    with pytest.raises(DomainError):
        render(YoungTableau(()), "svg")
