"""Blame validation: the full verdict matrix, levels, ordering, rendering."""

import pytest

from coevolve.adapt import BEST_EFFORT, adapt_all
from coevolve.model import io as model_io
from coevolve.soundness import (EXPECTED, MODELS, VERDICT_BROKEN, VERDICT_GAP,
                                VERDICT_OK, assert_matrix, level_of,
                                render_delimited, render_table, validate)
from coevolve import fixtures


def _reports(name):
    sc = fixtures.scenario(name)
    before = validate(sc.before, trace=sc.diff)
    after = validate(adapt_all(sc.diff, sc.old, BEST_EFFORT).outputs,
                     trace=sc.diff)
    return before, after


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_catalog_row_matches_expected_matrix(name):
    before, after = _reports(name)
    assert_matrix(name, before, after)


def test_pristine_sets_are_level_three_with_zero_findings(all_scenarios):
    for sc in all_scenarios:
        report = validate(sc.old)
        assert report.level == 3, (sc.name, report.findings)
        assert report.findings == ()
        assert set(report.verdicts.values()) == {VERDICT_OK}


def test_level_of_all_combinations():
    symbols = (VERDICT_BROKEN, VERDICT_GAP, VERDICT_OK)
    for a in symbols:
        for b in symbols:
            for c in symbols:
                for d in symbols:
                    verdicts = dict(zip(MODELS, (a, b, c, d)))
                    level = level_of(verdicts)
                    if VERDICT_BROKEN in verdicts.values():
                        assert level == 1
                    elif VERDICT_GAP in verdicts.values():
                        assert level == 2
                    else:
                        assert level == 3


def test_graph_is_never_blamed_as_broken(all_scenarios):
    for sc in all_scenarios:
        for report in (validate(sc.before, trace=sc.diff), validate(sc.before)):
            assert report.verdicts["Graph"] != VERDICT_BROKEN, sc.name


def test_trace_degrades_rename_tooling_blame_to_gap():
    sc = fixtures.scenario("rename-class")
    with_trace = validate(sc.before, trace=sc.diff)
    without = validate(sc.before)
    assert with_trace.verdicts["Tooling"] == VERDICT_GAP
    assert without.verdicts["Tooling"] == VERDICT_BROKEN
    # mapping stays broken either way: the reference itself dangles
    assert with_trace.verdicts["Mapping"] == VERDICT_BROKEN
    assert without.verdicts["Mapping"] == VERDICT_BROKEN


def test_findings_are_ordered(all_scenarios):
    for sc in all_scenarios:
        report = validate(sc.before, trace=sc.diff)
        keys = [(f.model, f.code, f.subject) for f in report.findings]
        assert keys == sorted(keys)


def test_validation_is_deterministic(all_scenarios):
    for sc in all_scenarios:
        assert validate(sc.before, trace=sc.diff) == \
            validate(sc.before, trace=sc.diff)


def test_blame_report_serialization(mind_map):
    report = validate(mind_map.before, trace=mind_map.diff)
    doc = model_io.load_document(report.to_bytes(), expected_kind="blame")
    assert doc["level"] == report.level
    assert doc["perModel"] == report.verdicts
    assert len(doc["findings"]) == len(report.findings)


def test_render_table_shows_verdict_symbols():
    before, _ = _reports("rename-class")
    table = render_table(before)
    assert "×" in table and "○" in table
    assert "level    1" in table


def test_render_delimited_has_one_row_per_report():
    before, after = _reports("rename-class")
    text = render_delimited([("before", before), ("after", after)])
    lines = text.strip().split("\n")
    assert len(lines) == 3
    assert lines[0].split("\t") == ["scenario", *MODELS, "level"]
    assert lines[2].split("\t") == ["after", "•", "•", "•", "•", "3"]


def test_render_figure_writes_an_image(tmp_path, mind_map):
    from coevolve.soundness import render_figure
    report = validate(mind_map.before, trace=mind_map.diff)
    path = tmp_path / "matrix.png"
    render_figure([("mind-map before", report)], str(path))
    assert path.stat().st_size > 0
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
