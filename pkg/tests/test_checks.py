import random

import pytest

from helpers import random_rational

from qdesign import fixtures
from qdesign.braid import BoxMorphism, YDModule, yd_module_from_q
from qdesign.checks import check_box_naturality, check_inverse, check_ybe, yd_braiding_equals_diagonal
from qdesign.scalars import QMatrix


def test_ybe_report_text():
    report = check_ybe(fixtures.load_qmatrix("coca"))
    assert str(report) == "YBE: pass (512 triples)"
    assert report


def test_inverse_counts_pairs():
    report = check_inverse(QMatrix.constant(3, 2))
    assert report.checked == 9 and report.passed


def test_naturality_of_admissible_box():
    Q = fixtures.load_qmatrix("coca")
    report = check_box_naturality(Q, BoxMorphism("f", 1, 5))
    assert report.passed and report.checked == 8


def test_inadmissible_box_is_refused_or_reported():
    Q = fixtures.load_qmatrix("coca")
    f = BoxMorphism("f", 1, 2)
    with pytest.raises(ValueError):
        check_box_naturality(Q, f)
    forced = check_box_naturality(Q, f, force=True)
    assert not forced.passed
    assert all(v.startswith("partner ") for v in forced.violations)


def test_equal_rows_but_unequal_columns_is_caught():
    Q = QMatrix.rational([[1, 2, 3], [1, 2, 3], [4, 5, 6]])
    report = check_box_naturality(Q, BoxMorphism("f", 1, 2), force=True)
    assert not report.passed


def test_yd_matches_for_random_matrices():
    rng = random.Random(3)
    for _ in range(10):
        Q = random_rational(rng, rng.randint(1, 4))
        assert yd_braiding_equals_diagonal(yd_module_from_q(Q), Q).passed


def test_yd_detects_a_wrong_module():
    Q = QMatrix.rational([[1, 2], [3, 4]])
    wrong = YDModule(2, ((1, 0), (0, 1)), QMatrix.rational([[1, 2], [3, 5]]))
    report = yd_braiding_equals_diagonal(wrong, Q)
    assert not report.passed
    # only the pair that reads q_22 differs
    assert len(report.violations) == 1
    assert report.violations[0].startswith("(2,2):")
    assert report.violations[0].endswith("1, 5 != 1, 4")


def test_check_report_failure_text():
    Q = QMatrix.rational([[1, 2], [3, 4]])
    report = check_box_naturality(Q, BoxMorphism("g", 1, 2), force=True)
    text = str(report)
    assert text.splitlines()[0] == "naturality g:1>2: fail (2 partners)"
