import pytest

from domino_qsym.core import BiTableau, Domino, DominoTableau, YoungTableau, parse_signed_permutation

# signed permutation whose domino and bi-tableau images are pinned below
BV_PERM = "-3,8,5,-2,1,-9,-7,4,-6"


def dominoes(*items, standard=True):
    return DominoTableau(tuple(Domino(r, c, o, v) for v, o, r, c in items), standard=standard)


@pytest.fixture
def bv_perm():
    return parse_signed_permutation(BV_PERM)


@pytest.fixture
def bv_q():
    # (label, orientation, row, col)
    return dominoes((1, "V", 1, 1), (2, "H", 1, 2), (3, "H", 2, 2), (4, "H", 3, 1), (5, "V", 1, 4),
                    (6, "V", 4, 1), (7, "V", 4, 2), (8, "V", 1, 5), (9, "V", 3, 3))


@pytest.fixture
def bv_p():
    return dominoes((1, "H", 1, 1), (2, "H", 2, 1), (3, "V", 1, 3), (4, "H", 1, 4), (5, "H", 2, 4),
                    (6, "V", 3, 1), (7, "V", 3, 2), (8, "V", 3, 3), (9, "H", 5, 1))


@pytest.fixture
def dts_t():
    return dominoes((1, "V", 1, 1), (2, "V", 1, 2), (3, "V", 1, 3), (4, "H", 3, 1), (5, "H", 1, 4),
                    (6, "H", 2, 4), (7, "V", 4, 1), (8, "H", 3, 3))


@pytest.fixture
def dts_u():
    return dominoes((1, "V", 1, 1), (2, "V", 1, 2), (3, "H", 1, 3), (4, "H", 2, 3), (5, "V", 1, 5),
                    (6, "H", 3, 1), (7, "V", 4, 1), (8, "H", 3, 3))


@pytest.fixture
def dts_v():
    return dominoes((0, "H", 1, 1), (0, "H", 1, 3), (2, "V", 2, 1), (2, "H", 2, 2), (5, "V", 4, 1),
                    (5, "H", 3, 2), (5, "V", 2, 4), (5, "V", 1, 5), (7, "H", 4, 2), standard=False)


@pytest.fixture
def bit_t():
    return BiTableau(YoungTableau(((3, 5, 6),)), YoungTableau(((1, 2), (4, 8), (7, 9))))


@pytest.fixture
def bit_u():
    return BiTableau(YoungTableau(((2, 5, 5),)), YoungTableau(((0, 1), (4, 6), (5, 7))), standard=False)


@pytest.fixture
def rsb_pair():
    p = BiTableau(YoungTableau(((2, 6), (3, 7), (9,))), YoungTableau(((1, 4), (5,), (8,))))
    q = BiTableau(YoungTableau(((1, 6), (4, 7), (9,))), YoungTableau(((2, 8), (3,), (5,))))
    return p, q


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
