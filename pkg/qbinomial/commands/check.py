import click
from pydantic import TypeAdapter

from qbinomial.commands.params import RangeType, output_format
from qbinomial.config import CHECK_WORKERS
from qbinomial.identities import get_identity, run_all, run_grid
from qbinomial.schemas import IdentityReport, IntRange, OutputFormat


@click.command("check")
@click.argument("identity")
@click.option("--a", "a_range", type=RangeType(), help="Диапазон a, например 0..6")
@click.option("--b", "b_range", type=RangeType(), help="Диапазон b")
@click.option("--n", "n_range", type=RangeType(), help="Диапазон n")
@click.option("--k", "k_range", type=RangeType(), help="Диапазон k")
@click.option("--workers", type=click.IntRange(min=1), default=CHECK_WORKERS, show_default=True,
              help="Число потоков для точек сетки")
@click.pass_context
def command(ctx: click.Context, identity: str, a_range: IntRange | None, b_range: IntRange | None,
            n_range: IntRange | None, k_range: IntRange | None, workers: int):
    """
    Проверяет тождество IDENTITY (или all) на сетке параметров.
    Код возврата 0 - все проверки прошли, 1 - есть расхождения.
    """
    ranges = {
        name: value
        for name, value in (("a", a_range), ("b", b_range), ("n", n_range), ("k", k_range))
        if value is not None
    }

    if identity == "all":
        if ranges:
            raise click.UsageError("Range flags cannot be combined with 'all'")
        reports = run_all(workers=workers)
    else:
        grid = get_identity(identity).grid.override(ranges) if ranges else None
        reports = [run_grid(identity, grid, workers=workers)]

    failing = [report for report in reports if not report.passed and not report.informational]

    if output_format(ctx) is OutputFormat.json:
        if identity == "all":
            click.echo(TypeAdapter(list[IdentityReport]).dump_json(reports).decode())
        else:
            click.echo(reports[0].model_dump_json())
    else:
        for report in reports:
            click.echo(report.to_text())
        if identity == "all":
            click.echo(f"all: {len(reports)} identities, {len(failing)} failing")

    if failing:
        ctx.exit(1)
