from fractions import Fraction

import click

from qbinomial.binomial import qbinom
from qbinomial.commands.params import NEGATIVE_FRIENDLY, RationalType, emit, resolve_integer
from qbinomial.schemas import RationalSchema


@click.command("eval", context_settings=NEGATIVE_FRIENDLY)
@click.argument("n", type=int, required=False)
@click.argument("k", type=int, required=False)
@click.option("--n", "n_option", type=int, help="n, если его неудобно передавать позиционно")
@click.option("--k", "k_option", type=int, help="k, если его неудобно передавать позиционно")
@click.option("--q", "q0", type=RationalType(), required=True, help="Точка: целое число или дробь p/r")
@click.pass_context
def command(ctx: click.Context, n: int | None, k: int | None, n_option: int | None, k_option: int | None,
            q0: Fraction):
    """
    Точное значение [N, K] в рациональной точке q.
    """
    value = qbinom(resolve_integer("n", n, n_option), resolve_integer("k", k, k_option)).evaluate(q0)
    emit(ctx, str(value), RationalSchema.from_fraction(value))
