"""Benchmark reports: exact counts, ratio arithmetic, deterministic rendering."""

import re
from fractions import Fraction

import pytest

from smoothntt.bench import (
    CSV_HEADER,
    emit_report,
    format_ratio,
    run_benchmark,
)
from smoothntt.field import FieldParams


@pytest.fixture(scope="module")
def tiny_report():
    return run_benchmark(FieldParams(5), 4, variant="recursive", trials=3)


@pytest.fixture(scope="module")
def headline_report():
    # the full-length field from the worked speedup example; direct
    # transform timing skipped by the default cutoff
    return run_benchmark(FieldParams(147457), 147456, variant="twiddle", trials=3)


def test_tiny_crossover(tiny_report):
    assert tiny_report.predicted.multiplications == 16
    assert tiny_report.naive_mults == 16
    assert tiny_report.mult_ratio == 1
    assert tiny_report.measured == tiny_report.predicted
    assert tiny_report.wall_clock_naive_ns is not None  # 4 <= cutoff


def test_headline_counts_and_ratios(headline_report):
    r = headline_report
    assert r.measured.multiplications == 2_949_120
    assert r.measured.additions == 2_654_208
    assert r.mult_ratio == Fraction(147456 * 147456, 2_949_120)
    assert r.mult_ratio == Fraction(36864, 5)  # 7372.8
    assert r.add_ratio == Fraction(147455, 18)
    assert r.wall_clock_naive_ns is None  # above cutoff


def test_csv_rendering(headline_report):
    text = emit_report(headline_report, "csv")
    lines = text.splitlines()
    assert len(lines) == 2  # one run + header
    assert lines[0] == CSV_HEADER
    cells = lines[1].split(",")
    assert len(cells) == len(CSV_HEADER.split(","))
    assert cells[0] == "147457"
    assert cells[6] == "2949120"  # pred_mul
    assert cells[10] == "7372.8"  # mult_ratio
    assert cells[11] == "147455/18"  # add_ratio, non-terminating
    assert cells[13] == ""  # naive timing skipped: empty, not zero


def test_csv_naive_field_present_when_measured(tiny_report):
    cells = emit_report(tiny_report, "csv").splitlines()[1].split(",")
    assert cells[13] != ""
    assert int(cells[13]) >= 0


def test_human_rendering(tiny_report):
    text = emit_report(tiny_report, "human")
    assert "F_5" in text
    assert "16 mul" in text


def test_reports_deterministic_modulo_timing():
    def masked(report):
        cells = emit_report(report, "csv").splitlines()[1].split(",")
        cells[12] = cells[13] = "X"
        return cells

    a = run_benchmark(FieldParams(97), 96, variant="twiddle", trials=3)
    b = run_benchmark(FieldParams(97), 96, variant="twiddle", trials=3)
    assert masked(a) == masked(b)


def test_format_ratio():
    assert format_ratio(Fraction(36864, 5)) == "7372.8"
    assert format_ratio(Fraction(1, 1)) == "1"
    assert format_ratio(Fraction(1, 4)) == "0.25"
    assert format_ratio(Fraction(147455, 18)) == "147455/18"


def test_radices_column_format(tiny_report):
    cells = emit_report(tiny_report, "csv").splitlines()[1].split(",")
    # the radix schedule cell must not smuggle in extra CSV separators
    assert re.fullmatch(r"[0-9*]+", cells[2])
    assert cells[2] == "2*2"
