import click

from qbinomial.binomial import qbinom
from qbinomial.commands.params import NEGATIVE_FRIENDLY, emit, resolve_integer
from qbinomial.schemas import LaurentPolySchema


@click.command("binom", context_settings=NEGATIVE_FRIENDLY)
@click.argument("n", type=int, required=False)
@click.argument("k", type=int, required=False)
@click.option("--n", "n_option", type=int, help="n, если его неудобно передавать позиционно")
@click.option("--k", "k_option", type=int, help="k, если его неудобно передавать позиционно")
@click.pass_context
def command(ctx: click.Context, n: int | None, k: int | None, n_option: int | None, k_option: int | None):
    """
    Печатает q-биномиальный коэффициент [N, K] для любых целых N, K.
    """
    poly = qbinom(resolve_integer("n", n, n_option), resolve_integer("k", k, k_option))
    emit(ctx, poly.to_text(), LaurentPolySchema.from_poly(poly))
