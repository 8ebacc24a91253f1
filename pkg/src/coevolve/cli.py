"""Command-line front end.

Pipeline commands: ``diff`` two metamodels, ``adapt`` a model set against a
diff, ``validate`` a model set (exit code encodes the soundness level),
``schema`` to derive a difference schema, and ``scenario`` to run the
built-in fixtures against their expected verdict matrices.

Exit statuses: 0 success / level 3, 1 level 1, 2 level 2, 64 for usage,
parse, or model errors.  All outputs go to files named by the caller;
inputs are never mutated.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import fixtures
from .adapt import BEST_EFFORT, MINIMALISTIC, STRATEGIES, adapt_all
from .diff.catalog import classify_changes
from .diff.model import compute_diff, diff_from_bytes, diff_to_bytes
from .diff.schema import derive_difference_schema, schema_to_bytes
from .errors import ModelError
from .model import io as model_io
from .soundness import (EXPECTED, VERDICT_BROKEN, LEVEL_BROKEN, LEVEL_GAP,
                        LEVEL_SOUND, assert_matrix, render_delimited,
                        render_figure, render_table, validate)
from .workspace import load_model, load_model_set, write_model_set

_EXIT_BY_LEVEL = {LEVEL_BROKEN: 1, LEVEL_GAP: 2, LEVEL_SOUND: 0}

_path = click.Path(exists=True, dir_okay=False, path_type=Path)
_dir = click.Path(exists=True, file_okay=False, path_type=Path)
_out_path = click.Path(dir_okay=False, path_type=Path)


@click.group()
def cli() -> None:
    """Co-evolve graphical-editor definition models with their metamodel."""


@cli.command("diff")
@click.argument("old_path", metavar="OLD", type=_path)
@click.argument("new_path", metavar="NEW", type=_path)
@click.option("--out", "-o", type=_out_path, default=None,
              help="Write the diff document here instead of stdout.")
def cmd_diff(old_path: Path, new_path: Path, out: Path | None) -> int:
    """Compute the difference between two metamodel files."""
    old = load_model(old_path)
    new = load_model(new_path)
    diff = compute_diff(old, new)
    data = diff_to_bytes(diff)
    if out is None:
        click.echo(data.decode("utf-8"), nl=False)
        return 0
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(data)
    click.echo(f"{len(diff.entries)} diff entr"
               f"{'y' if len(diff.entries) == 1 else 'ies'} -> {out}")
    for change in classify_changes(diff, old, new):
        click.echo(f"  {change.kind} "
                   + " ".join(f"{k}={v}" for k, v in change.bindings))
    return 0


@cli.command("schema")
@click.argument("source", type=_path)
@click.option("--out", "-o", type=_out_path, default=None,
              help="Write the difference schema here instead of stdout.")
def cmd_schema(source: Path, out: Path | None) -> int:
    """Derive the difference schema for a metamodel file."""
    schema = derive_difference_schema(load_model(source))
    data = schema_to_bytes(schema)
    if out is None:
        click.echo(data.decode("utf-8"), nl=False)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(data)
        click.echo(f"{schema.name}: {len(schema.classes)} classes -> {out}")
    return 0


@cli.command("adapt")
@click.option("--diff", "diff_path", required=True, type=_path,
              help="Diff document driving the adaptation.")
@click.option("--models", "models_dir", required=True, type=_dir,
              help="Directory holding the five input model files.")
@click.option("--strategy", type=click.Choice(STRATEGIES),
              default=MINIMALISTIC, show_default=True)
@click.option("--out", "out_dir", required=True,
              type=click.Path(file_okay=False, path_type=Path),
              help="Directory for the adapted model files and the plan report.")
def cmd_adapt(diff_path: Path, models_dir: Path, strategy: str,
              out_dir: Path) -> int:
    """Adapt an editor model set to a metamodel diff."""
    mset, paths = load_model_set(models_dir)
    diff = diff_from_bytes(diff_path.read_bytes())
    plan = adapt_all(diff, mset, strategy)
    names = {kind: path.name for kind, path in paths.items()}
    write_model_set(out_dir, plan.outputs, names=names)
    (out_dir / "plan.json").write_bytes(plan.report_bytes())
    click.echo(f"{len(plan.firedRules)} rule(s) fired, "
               f"{len(plan.skipped)} skipped -> {out_dir}")
    for rule, bindings in plan.firedRules:
        click.echo(f"  {rule} " + " ".join(f"{k}={v}" for k, v in bindings))
    for note in plan.skipped:
        click.echo(f"  skipped: {note}")
    return 0


@cli.command("validate")
@click.option("--models", "models_dir", required=True, type=_dir,
              help="Directory holding the five model files.")
@click.option("--trace", "trace_path", type=_path, default=None,
              help="Diff document; distinguishes renames from deletions.")
@click.option("--format", "fmt", type=click.Choice(("table", "json")),
              default="table", show_default=True)
@click.option("--figure", type=_out_path, default=None,
              help="Also render the verdicts as an image file.")
def cmd_validate(models_dir: Path, trace_path: Path | None, fmt: str,
                 figure: Path | None) -> int:
    """Blame unsound editor models; the exit code encodes the level."""
    mset, _ = load_model_set(models_dir)
    trace = diff_from_bytes(trace_path.read_bytes()) if trace_path else None
    report = validate(mset, trace=trace)
    if fmt == "json":
        click.echo(report.to_bytes().decode("utf-8"), nl=False)
    else:
        click.echo(render_table(report), nl=False)
    if figure is not None:
        figure.parent.mkdir(parents=True, exist_ok=True)
        render_figure([(models_dir.name, report)], str(figure))
    return _EXIT_BY_LEVEL[report.level]


def _scenario_outcome(sc: fixtures.Scenario) -> tuple[bool, str, list]:
    """(passed, message, matrix rows) for one built-in scenario."""
    diff = sc.diff
    before = validate(sc.before, trace=diff)
    best = adapt_all(diff, sc.old, BEST_EFFORT)
    after = validate(best.outputs, trace=diff)
    rows = [(f"{sc.name} before", before), (f"{sc.name} after", after)]

    if sc.name in EXPECTED:
        try:
            assert_matrix(sc.name, before, after)
        except AssertionError as exc:
            return False, str(exc), rows
        return True, "matches the expected verdict matrix", rows
    if sc.name == "mind-map":
        broken = [m for m, v in after.verdicts.items() if v == VERDICT_BROKEN]
        if broken:
            return False, f"best-effort result still broken: {broken}", rows
        return True, "best-effort adaptation leaves no broken model", rows
    # add-class-as-specialization: the strategies must part ways
    minimal = adapt_all(diff, sc.old, MINIMALISTIC)
    min_report = validate(minimal.outputs, trace=diff)
    rows.insert(1, (f"{sc.name} minimal", min_report))
    untouched = (minimal.outputs.tooling == sc.old.tooling
                 and minimal.outputs.mapping == sc.old.mapping
                 and minimal.outputs.graph == sc.old.graph)
    if min_report.level == LEVEL_GAP and after.level == LEVEL_SOUND and untouched:
        return True, "minimalistic stays level 2, best-effort reaches level 3", rows
    return False, (f"minimalistic level {min_report.level} "
                   f"(companions untouched: {untouched}), "
                   f"best-effort level {after.level}"), rows


@cli.command("scenario")
@click.argument("name")
@click.option("--out", "out_dir", default=None,
              type=click.Path(file_okay=False, path_type=Path),
              help="Write matrix.tsv and matrix.png with the verdicts here.")
def cmd_scenario(name: str, out_dir: Path | None) -> int:
    """Run a built-in scenario (or 'all') against its expected verdicts."""
    if name == "all":
        names = fixtures.scenario_names()
    elif name in fixtures.scenario_names():
        names = (name,)
    else:
        raise click.UsageError(
            f"unknown scenario '{name}' (known: all, "
            f"{', '.join(fixtures.scenario_names())})")

    rows: list = []
    failures = 0
    for n in names:
        passed, message, scenario_rows = _scenario_outcome(fixtures.scenario(n))
        rows.extend(scenario_rows)
        failures += 0 if passed else 1
        click.echo(f"{'PASS' if passed else 'FAIL'} {n}: {message}")
    click.echo(f"{len(names) - failures}/{len(names)} passed")

    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "matrix.tsv").write_text(render_delimited(rows),
                                            encoding="utf-8")
        render_figure(rows, str(out_dir / "matrix.png"))
        click.echo(f"wrote {out_dir / 'matrix.tsv'} and {out_dir / 'matrix.png'}")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 64
    except click.ClickException as exc:
        exc.show()
        return 64
    except ModelError as exc:
        click.echo(f"error: {exc}", err=True)
        return 64
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 66
    return result if isinstance(result, int) else 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
