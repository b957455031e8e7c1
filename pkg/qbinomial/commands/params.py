import re
from fractions import Fraction

import click
from pydantic import BaseModel

from qbinomial.exceptions import InvalidRange
from qbinomial.schemas import IntRange, OutputFormat


# Отрицательные числа ("-3") должны разбираться как позиционные аргументы, а не как опции.
NEGATIVE_FRIENDLY = {"ignore_unknown_options": True}

RATIONAL_LITERAL = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx) -> Fraction:
        if isinstance(value, Fraction):
            return value
        text = str(value).strip()
        if not RATIONAL_LITERAL.match(text):
            self.fail(f"{value!r} is not an integer or a fraction p/r", param, ctx)
        try:
            return Fraction(text)
        except ZeroDivisionError:
            self.fail(f"{value!r} has a zero denominator", param, ctx)


class RangeType(click.ParamType):
    name = "lo..hi"

    def convert(self, value, param, ctx) -> IntRange:
        if isinstance(value, IntRange):
            return value
        try:
            return IntRange.parse(value)
        except InvalidRange as exc:
            self.fail(exc.detail, param, ctx)


def resolve_integer(name: str, positional: int | None, option: int | None) -> int:
    """
    Значение из позиционного аргумента или из --<name>; оба сразу допустимы, только если совпадают.
    """
    if positional is None and option is None:
        raise click.UsageError(f"Missing {name}: pass it positionally or as --{name}")
    if positional is not None and option is not None and positional != option:
        raise click.UsageError(f"Conflicting values for {name}: {positional} and --{name} {option}")
    return positional if positional is not None else option


def output_format(ctx: click.Context) -> OutputFormat:
    return ctx.find_root().obj["format"]


def emit(ctx: click.Context, text: str, model: BaseModel) -> None:
    if output_format(ctx) is OutputFormat.json:
        click.echo(model.model_dump_json())
    else:
        click.echo(text)
