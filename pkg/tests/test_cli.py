"""CLI behavior: exit codes, artifacts, idempotence."""

import json
from pathlib import Path

from click.testing import CliRunner

from coevolve.cli import cli, main
from conftest import FIXTURE_ROOT

MIND_MAP = FIXTURE_ROOT / "mind-map"


def _run(args):
    return CliRunner().invoke(cli, args, standalone_mode=False)


def test_diff_writes_canonical_document(tmp_path):
    out = tmp_path / "diff.json"
    result = _run(["diff", str(MIND_MAP / "old" / "mindmap.mm.json"),
                   str(MIND_MAP / "new.mm.json"), "--out", str(out)])
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "diff"
    assert len(doc["entries"]) == 5
    assert "5 diff entries" in result.output


def test_diff_of_identical_inputs_is_empty(tmp_path):
    mm = MIND_MAP / "old" / "mindmap.mm.json"
    out = tmp_path / "diff.json"
    result = _run(["diff", str(mm), str(mm), "--out", str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text())["entries"] == []


def test_malformed_input_exits_64(tmp_path):
    bad = tmp_path / "bad.mm.json"
    bad.write_text("{not json")
    assert main(["diff", str(bad), str(bad)]) == 64


def test_missing_file_exits_64(tmp_path):
    assert main(["validate", "--models", str(tmp_path)]) == 64


def test_unknown_scenario_exits_64():
    assert main(["scenario", "definitely-not-a-scenario"]) == 64


def test_validate_exit_codes_encode_levels(tmp_path):
    # pristine -> 0
    assert main(["validate", "--models", str(MIND_MAP / "old")]) == 0
    # evolved domain with stale companions -> level 1 -> exit 1
    broken = tmp_path / "broken"
    broken.mkdir()
    for f in (MIND_MAP / "old").iterdir():
        if not f.name.endswith(".mm.json"):
            (broken / f.name).write_bytes(f.read_bytes())
    (broken / "mindmap.mm.json").write_bytes((MIND_MAP / "new.mm.json").read_bytes())
    assert main(["validate", "--models", str(broken)]) == 1


def test_full_pipeline_and_idempotence(tmp_path):
    diff_path = tmp_path / "diff.json"
    assert main(["diff", str(MIND_MAP / "old" / "mindmap.mm.json"),
                 str(MIND_MAP / "new.mm.json"), "--out", str(diff_path)]) == 0

    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        assert main(["adapt", "--diff", str(diff_path),
                     "--models", str(MIND_MAP / "old"),
                     "--strategy", "best-effort", "--out", str(out)]) == 0
    files1 = sorted(p.name for p in out1.iterdir())
    assert files1 == sorted(p.name for p in out2.iterdir())
    for name in files1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()

    # adapted set validates at level 2 (capability gaps remain, nothing broken)
    assert main(["validate", "--models", str(out1),
                 "--trace", str(diff_path)]) == 2


def test_adapt_does_not_mutate_inputs(tmp_path):
    snapshot = {p.name: p.read_bytes() for p in (MIND_MAP / "old").iterdir()}
    diff_path = tmp_path / "diff.json"
    main(["diff", str(MIND_MAP / "old" / "mindmap.mm.json"),
          str(MIND_MAP / "new.mm.json"), "--out", str(diff_path)])
    main(["adapt", "--diff", str(diff_path), "--models", str(MIND_MAP / "old"),
          "--strategy", "best-effort", "--out", str(tmp_path / "out")])
    assert snapshot == {p.name: p.read_bytes()
                        for p in (MIND_MAP / "old").iterdir()}


def test_validate_json_format_and_figure(tmp_path):
    figure = tmp_path / "blame.png"
    result = _run(["validate", "--models", str(MIND_MAP / "old"),
                   "--format", "json", "--figure", str(figure)])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["kind"] == "blame"
    assert doc["level"] == 3
    assert figure.stat().st_size > 0


def test_schema_command(tmp_path):
    out = tmp_path / "schema.json"
    result = _run(["schema", str(MIND_MAP / "old" / "mindmap.mm.json"),
                   "--out", str(out)])
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "diffschema"
    assert len(doc["classes"]) == 9  # 3 source classes


def test_scenario_all_passes_and_writes_reports(tmp_path):
    report_dir = tmp_path / "report"
    result = _run(["scenario", "all", "--out", str(report_dir)])
    assert result.exit_code == 0
    assert result.output.count("PASS") == 13
    assert "13/13 passed" in result.output
    tsv = (report_dir / "matrix.tsv").read_text()
    assert tsv.splitlines()[0] == "scenario\tEmfGen\tGraph\tTooling\tMapping\tlevel"
    assert (report_dir / "matrix.png").stat().st_size > 0


def test_scenario_single_row():
    result = _run(["scenario", "rename-class"])
    assert result.exit_code == 0
    assert "PASS rename-class" in result.output
