import click

from qbinomial.commands.params import NEGATIVE_FRIENDLY, emit
from qbinomial.identities import qbinneg_order, xprod_pos, xseries_inverse
from qbinomial.schemas import XSeriesSchema


@click.command("expand", context_settings=NEGATIVE_FRIENDLY)
@click.argument("mode", type=click.Choice(["pos", "neg"]))
@click.argument("n", type=click.IntRange(min=0))
@click.option("--order", type=click.IntRange(min=0), default=None,
              help="Порядок усечения (pos: по умолчанию N, neg: max(12, N+4))")
@click.pass_context
def command(ctx: click.Context, mode: str, n: int, order: int | None):
    """
    Коэффициенты при x^i:
    pos - ∏_{j<N} (1 + x q^j), neg - 1 / ∏_{j<N} (1 - x q^j).
    """
    if mode == "pos":
        series = xprod_pos(n, 0, order)
    else:
        series = xseries_inverse(xprod_pos(n, 0, qbinneg_order(n) if order is None else order).negate_x())
    emit(ctx, series.to_text(), XSeriesSchema.from_series(series))
