"""Rendering of blame reports: plain-text table, tab-delimited rows, and an
optional matrix figure written through matplotlib."""

from __future__ import annotations

from .validate import MODELS, BlameReport, VERDICT_BROKEN, VERDICT_GAP


def render_table(report: BlameReport) -> str:
    lines = ["model    verdict", "-----    -------"]
    for model, verdict in report.perModel:
        lines.append(f"{model:<8} {verdict}")
    lines.append(f"level    {report.level}")
    if report.findings:
        lines.append("")
        for f in report.findings:
            marker = "x" if f.severity == "Broken" else "o"
            lines.append(f"[{marker}] {f.model}/{f.code} {f.subject}: {f.message}")
    return "\n".join(lines) + "\n"


def render_delimited(rows: list[tuple[str, BlameReport]]) -> str:
    """One tab-delimited line per report: name, the four verdicts, level."""
    out = ["\t".join(("scenario", *MODELS, "level"))]
    for name, report in rows:
        verdicts = report.verdicts
        out.append("\t".join((name, *(verdicts[m] for m in MODELS),
                              str(report.level))))
    return "\n".join(out) + "\n"


def render_figure(rows: list[tuple[str, BlameReport]], path: str) -> None:
    """Write a verdict matrix (scenarios x models) as an image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    colors = {VERDICT_BROKEN: "#d9534f", VERDICT_GAP: "#f0ad4e"}
    fig, ax = plt.subplots(
        figsize=(1.6 + 0.9 * len(MODELS), 0.8 + 0.45 * max(len(rows), 1)))
    ax.set_xlim(0, len(MODELS))
    ax.set_ylim(0, len(rows))
    for y, (name, report) in enumerate(reversed(rows)):
        verdicts = report.verdicts
        for x, model in enumerate(MODELS):
            verdict = verdicts[model]
            ax.add_patch(plt.Rectangle(
                (x, y), 1, 1, facecolor=colors.get(verdict, "#5cb85c"),
                edgecolor="white"))
            ax.text(x + 0.5, y + 0.5, verdict, ha="center", va="center",
                    fontsize=12)
    ax.set_xticks([x + 0.5 for x in range(len(MODELS))])
    ax.set_xticklabels(MODELS)
    ax.set_yticks([y + 0.5 for y in range(len(rows))])
    ax.set_yticklabels([name for name, _ in reversed(rows)])
    ax.tick_params(length=0)
    for spine in ax.spines.values():
        spine.set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
