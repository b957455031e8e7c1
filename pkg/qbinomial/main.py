import sys
from uuid import uuid4

import click
from loguru import logger

from qbinomial.commands import binom, check, evaluate, expand
from qbinomial.config import LOG_FILE, LOG_FORMAT, LOG_LEVEL
from qbinomial.exceptions import QBinomialError
from qbinomial.schemas import OutputFormat


logger.remove()
logger.configure(extra={"run_id": "-"})
logger.add(sys.stderr, format=LOG_FORMAT, level=LOG_LEVEL)
if LOG_FILE:
    logger.add(LOG_FILE, format=LOG_FORMAT, level="INFO", enqueue=True)


class QBinomialGroup(click.Group):
    """
    Группа команд, которая помечает каждый запуск своим run_id в логах и превращает
    ошибки библиотеки в коды возврата.
    """

    def invoke(self, ctx: click.Context):
        with logger.contextualize(run_id=str(uuid4())):
            try:
                result = super().invoke(ctx)
            except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
                raise
            except QBinomialError as exc:
                logger.error(f"Command {ctx.invoked_subcommand} failed: {exc.detail}")
                error = click.ClickException(exc.detail)
                error.exit_code = exc.exit_code
                raise error from exc
            except Exception as exc:
                logger.opt(exception=exc).critical(f"Command {ctx.invoked_subcommand} crashed: {exc}")
                raise
            logger.info(f"Command {ctx.invoked_subcommand} finished")
            return result


@click.group(cls=QBinomialGroup)
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
              default=OutputFormat.text.value, show_default=True, help="Формат вывода")
@click.pass_context
def cli(ctx: click.Context, output_format: str):
    """
    q-биномиальные коэффициенты для любых целых аргументов и проверка тождеств для них.
    """
    ctx.ensure_object(dict)["format"] = OutputFormat(output_format)


cli.add_command(binom.command)
cli.add_command(evaluate.command)
cli.add_command(expand.command)
cli.add_command(check.command)
