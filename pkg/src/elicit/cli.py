"""Command-line interface.

Exit codes: 0 success, 1 validation or spec failure (including bad usage),
2 empty denominator, 3 I/O error.
"""

from __future__ import annotations

import logging
import sys
from datetime import datetime, timezone
from pathlib import Path

import click

from elicit.codebook import Codebook, CodebookError, default_codebook
from elicit.indicators import EmptyDenominator, compute
from elicit.ingest import Dataset, FormatError, load, to_csv_text
from elicit.recode import Thresholds
from elicit.report import render, render_claim
from elicit.rubric import Claim, classify_claim
from elicit.synth import CountSpec, InfeasibleSpec, generate_fixture, pilot_spec

EXIT_OK, EXIT_INVALID, EXIT_EMPTY, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("elicit")


class _Group(click.Group):
    """Maps click's usage errors to exit 1 so that 2 stays 'empty denominator'."""

    def main(self, args=None, prog_name=None, complete_var=None, **extra):
        extra.pop("standalone_mode", None)
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_INVALID)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INVALID)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _load_codebook(path: str | None) -> Codebook:
    return Codebook.load(path) if path else default_codebook()


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        click.echo(text, nl=False)


def _dataset(input_path: str, fmt: str, codebook: str | None) -> Dataset:
    return load(input_path, None if fmt == "auto" else fmt, _load_codebook(codebook))


input_option = click.option(
    "--input", "input_path", required=True, help="Survey export (CSV or JSON-lines)."
)
format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["auto", "csv", "jsonl"]),
    default="auto",
    show_default=True,
    help="Input format; auto picks by file extension.",
)
codebook_option = click.option(
    "--codebook", type=click.Path(dir_okay=False), help="Codebook YAML (default: bundled)."
)
report_option = click.option(
    "--report",
    "report_fmt",
    type=click.Choice(["markdown", "json", "plain"]),
    default="markdown",
    show_default=True,
    help="Output rendering.",
)
out_option = click.option("--out", type=click.Path(dir_okay=False), help="Write to file.")


@click.group(cls=_Group)
@click.option("-v", "--verbose", is_flag=True, help="Log warnings (e.g. item1c repairs).")
def cli(verbose: bool) -> None:
    """Survey indicators: validate, compute, synth, claim-check."""
    logging.basicConfig(
        level=logging.WARNING if verbose else logging.ERROR,
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@input_option
@format_option
@codebook_option
def validate(input_path: str, fmt: str, codebook: str | None) -> int:
    """Check every row; list the reasons for each rejected row."""
    try:
        ds = _dataset(input_path, fmt, codebook)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    except (FormatError, CodebookError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INVALID

    prov = ds.provenance
    for row, issue in prov.warnings:
        click.echo(f"warning: row {row}: {issue}")
    for drop in prov.drops:
        click.echo(f"rejected: {drop}")
    click.echo(f"{len(ds)} of {prov.rows_read} rows valid")
    return EXIT_OK if not prov.drops else EXIT_INVALID


@cli.command(name="compute")
@input_option
@format_option
@codebook_option
@click.option("--confidence", type=float, default=0.95, show_default=True)
@click.option("--skill-cut", type=click.IntRange(0, 10), default=5, show_default=True,
              help="AI-skilled when item1a > cut.")
@click.option("--contribution-cut", type=click.IntRange(0, 100), default=66, show_default=True,
              help="High contribution when item1c >= cut.")
@click.option("--text-gate", type=click.IntRange(min=0), default=20, show_default=True,
              help="Metacognition when trimmed item10 length >= gate.")
@report_option
@out_option
@click.option("--stamp", is_flag=True, help="Add a generation timestamp.")
def compute_cmd(
    input_path, fmt, codebook, confidence, skill_cut, contribution_cut, text_gate,
    report_fmt, out, stamp,
) -> int:
    """Compute the three analyses and render the summary tables."""
    if not 0.0 < confidence < 1.0:
        raise click.BadParameter("must lie strictly between 0 and 1", param_hint="--confidence")
    thresholds = Thresholds(skill_cut, contribution_cut, text_gate)
    try:
        ds = _dataset(input_path, fmt, codebook)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    except (FormatError, CodebookError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INVALID
    try:
        report = compute(ds, thresholds, confidence, source=input_path)
    except EmptyDenominator as exc:
        click.echo(f"error: empty denominator for {exc.indicator}", err=True)
        return EXIT_EMPTY
    when = datetime.now(timezone.utc).isoformat(timespec="seconds") if stamp else None
    try:
        _write(render(report, report_fmt, ds.provenance, when), out)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    return EXIT_OK


@cli.command()
@click.option("--spec", "spec_path", type=click.Path(dir_okay=False),
              help="Count spec YAML (default: the bundled n=214 pilot counts).")
@click.option("--seed", type=int, default=0, show_default=True)
@out_option
def synth(spec_path: str | None, seed: int, out: str | None) -> int:
    """Generate a CSV fixture whose indicator counts match a count spec."""
    try:
        spec = CountSpec.load(spec_path) if spec_path else pilot_spec()
        ds = generate_fixture(spec, seed)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    except (InfeasibleSpec, TypeError) as exc:
        click.echo(f"error: infeasible spec: {exc}", err=True)
        return EXIT_INVALID
    try:
        _write(to_csv_text(ds), out)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_IO
    return EXIT_OK


@cli.command(name="claim-check")
@click.argument("stance")
@click.argument("purpose")
@click.argument("strength")
@report_option
def claim_check(stance: str, purpose: str, strength: str, report_fmt: str) -> int:
    """Assess a procurement claim: STANCE (Material|Immaterial|Unsure),
    PURPOSE (Exploration|Scale), STRENGTH (Need|Want)."""
    try:
        claim = Claim.parse(stance, purpose, strength)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc
    click.echo(render_claim(classify_claim(claim), report_fmt), nl=False)
    return EXIT_OK


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
