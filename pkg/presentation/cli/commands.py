# presentation/cli/commands.py
"""conjgen command tree.

Exit codes: 0 success, 1 lemma failure or a negative finding under
--strict, 2 usage or input error.
"""
import asyncio
import logging
from typing import Any, Callable, List, Optional, Sequence

import click
from pydantic import BaseModel

from application.container import Container
from domain.algebra.almost_cyclic_analysis import is_almost_cyclic
from domain.algebra.finite_group_core import is_abelian, is_cyclic
from domain.entities.catalog_entry import CatalogEntry
from domain.entities.presentation import VerdictClassification
from domain.entities.sweep_report import SweepReport
from domain.errors import GroupTheoryError
from domain.utils.result import Result
from presentation.cli.models import (
    GroupAnalysisResponse,
    GroupEntryResponse,
    GroupListResponse,
    SubgroupListResponse,
    SubgroupResponse,
    SweepReportResponse,
    VerdictResponse,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

format_option = click.option(
    "--format", "output_format", type=click.Choice(["json", "text"]), default="json", show_default=True,
    help="Output format; only json is machine-stable",
)
strict_option = click.option("--strict", is_flag=True, help="Exit 1 on a negative almost-cyclic finding")


class InputError(click.ClickException):
    """Unreadable input or a domain error raised by it"""
    exit_code = EXIT_INPUT


def _unwrap(result: Result) -> Any:
    if result.is_error:
        raise InputError(result.error)
    return result.value


def _container(ctx: click.Context) -> Container:
    return ctx.find_root().obj


def _emit(model: BaseModel, output_format: str, render_text: Callable[[BaseModel], List[str]]) -> None:
    if output_format == "json":
        click.echo(model.model_dump_json(indent=2))
    else:
        for line in render_text(model):
            click.echo(line)


def _entry_response(entry: CatalogEntry) -> GroupEntryResponse:
    return GroupEntryResponse(
        name=entry.name,
        order=entry.order,
        abelian=is_abelian(entry.group),
        cyclic=is_cyclic(entry.group).cyclic,
        almost_cyclic=is_almost_cyclic(entry.group),
        construction=entry.construction.to_dict(),
    )


def _render_group_list(model: GroupListResponse) -> List[str]:
    lines = [f"{'name':<16} {'order':>5}  abelian cyclic almost_cyclic  construction"]
    for g in model.groups:
        lines.append(
            f"{g.name:<16} {g.order:>5}  {str(g.abelian):<7} {str(g.cyclic):<6} "
            f"{str(g.almost_cyclic):<13}  {g.construction['family']}"
        )
    lines.append(f"{model.total_count} groups")
    return lines


@click.group()
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Conjugate generators and almost cyclic groups."""
    if ctx.obj is None:
        ctx.obj = Container()


# ===== GROUP =====

@cli.group()
def group() -> None:
    """Finite groups from JSON group files."""


@group.command("analyze")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@strict_option
@click.pass_context
def group_analyze(ctx: click.Context, path: str, output_format: str, strict: bool) -> None:
    """Orders, classes, center, conjugate generators and the almost-cyclic verdict."""
    service = _container(ctx).group_analysis_service()
    analysis = _unwrap(service.load_group(path).bind(service.analyze_group))
    model = GroupAnalysisResponse(**analysis.to_dict())

    def render(m: GroupAnalysisResponse) -> List[str]:
        return [
            f"order: {m.order}",
            f"element orders: {' '.join(map(str, m.element_orders))}",
            f"conjugacy classes: {len(m.conjugacy_classes)}",
            f"center: {{{', '.join(m.labels[i] for i in m.center)}}}",
            f"abelian: {m.abelian}",
            f"cyclic: {m.cyclic}",
            f"simple: {m.simple}",
            f"conjugate generators: {', '.join(m.labels[i] for i in m.conjugate_generators) or 'none'}",
            f"almost cyclic: {m.almost_cyclic}",
        ]

    _emit(model, output_format, render)
    if strict and not model.almost_cyclic:
        ctx.exit(EXIT_FAILURE)


@group.command("subgroups")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@click.pass_context
def group_subgroups(ctx: click.Context, path: str, output_format: str) -> None:
    """Every subgroup with normality and conjugate count."""
    service = _container(ctx).group_analysis_service()
    subgroups = _unwrap(service.load_group(path).bind(service.list_subgroups))
    model = SubgroupListResponse(
        subgroups=[SubgroupResponse(**info.to_dict()) for info in subgroups],
        total_count=len(subgroups),
    )

    def render(m: SubgroupListResponse) -> List[str]:
        lines = [
            f"order {s.order:>3}  {'normal' if s.normal else f'{s.conjugates} conjugates':<13} "
            f"{'cyclic' if s.cyclic else '':<7} {{{', '.join(s.labels)}}}"
            for s in m.subgroups
        ]
        return lines + [f"{m.total_count} subgroups"]

    _emit(model, output_format, render)


@group.command("export")
@click.argument("name")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--max-order", type=int, default=None, help="Catalog bound to search (default: sweep bound)")
@click.pass_context
def group_export(ctx: click.Context, name: str, path: str, max_order: Optional[int]) -> None:
    """Write catalog group NAME as a JSON group file."""
    container = _container(ctx)
    bound = max_order or container.config_service().get_limits().sweep_max_order
    entry = _unwrap(container.catalog_service().get_entry(name, bound))
    _unwrap(container.group_analysis_service().save_group(path, entry.group))
    click.echo(f"{entry.name} (order {entry.order}) written to {path}")


# ===== PRESENTATION =====

@cli.group()
def presentation() -> None:
    """Group presentations < generators | relators >."""


@presentation.command("analyze")
@click.argument("text")
@format_option
@strict_option
@click.pass_context
def presentation_analyze(ctx: click.Context, text: str, output_format: str, strict: bool) -> None:
    """Almost-cyclic verdict for a one-relator presentation."""
    service = _container(ctx).presentation_service()
    parsed = _unwrap(service.parse(text))
    verdict = _unwrap(service.analyze_presentation(parsed))
    model = VerdictResponse(presentation=str(parsed), **verdict.to_dict())

    def render(m: VerdictResponse) -> List[str]:
        lines = [m.presentation, f"verdict: {m.classification}"]
        lines += [f"  {step.rule}: {step.citation}" for step in m.justification]
        if m.transformed is not None:
            lines.append(f"rewritten: {m.transformed}")
        return lines

    _emit(model, output_format, render)
    if strict and verdict.classification == VerdictClassification.NOT_ALMOST_CYCLIC:
        ctx.exit(EXIT_FAILURE)


# ===== HARNESS =====

def _render_report(model: SweepReportResponse) -> List[str]:
    summary = model.summary
    lines = [
        f"groups: {model.groups}  checks: {len(model.checks)}",
        f"pass: {summary['pass']}  fail: {summary['fail']}  vacuous: {summary['vacuous']}",
        "",
        f"{'lemma':<26} {'pass':>5} {'fail':>5} {'vacuous':>8}",
    ]
    for lemma, counts in model.per_lemma.items():
        lines.append(f"{lemma:<26} {counts['pass']:>5} {counts['fail']:>5} {counts['vacuous']:>8}")
    for failure in model.counterexamples:
        lines.append(f"FAIL {failure['lemma']} on {failure['group']}: {failure['counterexample']}")
    if model.run is not None:
        lines.append(f"wall time: {model.run['wall_time_s']}s with {model.run['jobs']} job(s)")
    return lines


@cli.command("verify")
@click.option("--max-order", type=int, default=None, help="Largest catalog group order")
@click.option("--exhaustive-order", type=int, default=None, help="Largest exhaustively enumerated order")
@format_option
@click.option("--jobs", type=int, default=None, help="Worker processes")
@click.option("--group-file", "group_files", multiple=True, type=click.Path(dir_okay=False),
              help="Extra JSON group file to check (repeatable)")
@click.option("--cyclic-only", is_flag=True, help="Restrict the sweep to cyclic groups")
@click.pass_context
def verify(
    ctx: click.Context,
    max_order: Optional[int],
    exhaustive_order: Optional[int],
    output_format: str,
    jobs: Optional[int],
    group_files: Sequence[str],
    cyclic_only: bool,
) -> None:
    """Run every lemma check over the catalog and the exhaustive enumeration."""
    container = _container(ctx)
    try:
        config = container.config_service().get_sweep_config(
            max_order=max_order,
            exhaustive_order=exhaustive_order,
            jobs=jobs,
            group_files=tuple(group_files),
            cyclic_only=cyclic_only,
        )
    except (GroupTheoryError, ValueError) as e:
        raise InputError(str(e)) from e

    report: SweepReport = _unwrap(asyncio.run(container.sweep_service().verify_all(config)))
    _emit(SweepReportResponse(**report.to_dict()), output_format, _render_report)
    if report.failed:
        logger.warning("%d lemma check(s) failed", report.summary()["fail"])
        ctx.exit(EXIT_FAILURE)


@cli.command("enumerate")
@click.option("--order", type=int, required=True, help="Group order (at most the exhaustive cap)")
@format_option
@click.pass_context
def enumerate_command(ctx: click.Context, order: int, output_format: str) -> None:
    """One group per isomorphism class of the given order."""
    entries = _unwrap(_container(ctx).catalog_service().enumerate_groups(order))
    model = GroupListResponse(groups=[_entry_response(e) for e in entries], total_count=len(entries))
    _emit(model, output_format, _render_group_list)


@cli.command("catalog")
@click.option("--max-order", type=int, default=None, help="Largest group order (default: sweep bound)")
@format_option
@click.pass_context
def catalog_command(ctx: click.Context, max_order: Optional[int], output_format: str) -> None:
    """List the named catalog groups."""
    container = _container(ctx)
    bound = max_order or container.config_service().get_limits().sweep_max_order
    entries = _unwrap(container.catalog_service().build_catalog(bound))
    model = GroupListResponse(groups=[_entry_response(e) for e in entries], total_count=len(entries))
    _emit(model, output_format, _render_group_list)


def cli_main(argv: Optional[Sequence[str]] = None, container: Optional[Container] = None) -> int:
    """Run the command tree and return the process exit code"""
    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="conjgen",
            standalone_mode=False,
            obj=container,
        )
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAILURE
    # ctx.exit codes come back as the return value outside standalone mode
    return rv if isinstance(rv, int) else EXIT_OK
