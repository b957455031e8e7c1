"""
Ряды по x с коэффициентами-многочленами Лорана (q-биномиальная теорема, её вариант для
отрицательной степени, правило произведения) и проверка суммационных тождеств на сетке параметров.

Каждая проверка возвращает список сравнений Comparison; точка сетки проходит, если выполнены все.
"""
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from math import comb

import anyio
from anyio import to_thread
from loguru import logger

from qbinomial import binomial
from qbinomial.config import CHECK_WORKERS, QBINNEG_MIN_ORDER, QBINNEG_ORDER_SLACK
from qbinomial.exceptions import NegativeLength, NonUnitConstantTerm, UnknownIdentity
from qbinomial.models.laurent import ONE, ZERO, LaurentPoly, checked_exponent
from qbinomial.models.monomial import QMonomial
from qbinomial.models.xseries import XSeries
from qbinomial.qseries import pochhammer, pochhammer_reversed, tri
from qbinomial.schemas import FailureSchema, GridSpec, IdentityReport, IntRange


@dataclass(frozen=True, slots=True)
class Comparison:
    lhs: LaurentPoly | XSeries | Fraction | bool
    rhs: LaurentPoly | XSeries | Fraction | bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


# --- ряды по x ---

def xprod_pos(n: int, shift: int = 0, order: int | None = None) -> XSeries:
    """
    ∏_{j=0}^{n-1} (1 + x·q^{shift+j}) как ряд порядка n (или заданного order).
    """
    if n < 0:
        raise NegativeLength(f"Product length must be nonnegative, got {n}")
    coeffs = [ONE]
    for j in range(n):
        factor = LaurentPoly.monomial(checked_exponent(shift + j))
        coeffs = [
            (coeffs[i] if i < len(coeffs) else ZERO) + (factor * coeffs[i - 1] if i else ZERO)
            for i in range(len(coeffs) + 1)
        ]
    return XSeries.from_coeffs(coeffs, n if order is None else order)


def xseries_inverse(s: XSeries) -> XSeries:
    if s[0] != ONE:
        raise NonUnitConstantTerm(f"Constant term {s[0]} is not 1")
    inverse = [ONE]
    for m in range(1, s.order + 1):
        total = ZERO
        for j in range(1, m + 1):
            total = total + s[j] * inverse[m - j]
        inverse.append(-total)
    return XSeries(tuple(inverse))


def qbinpos_series(n: int, order: int | None = None) -> XSeries:
    """Σ_k q^{k(k-1)/2} [n, k] x^k."""
    coeffs = [binomial.qbinom(n, k).shift(tri(k)) for k in range(n + 1)]
    return XSeries.from_coeffs(coeffs, n if order is None else order)


def qbinneg_series(n: int, order: int) -> XSeries:
    """Σ_k [n+k-1, n-1] x^k до x^order."""
    return XSeries(tuple(binomial.qbinom(n + k - 1, n - 1) for k in range(order + 1)))


def qbinneg_order(n: int) -> int:
    return max(QBINNEG_MIN_ORDER, n + QBINNEG_ORDER_SLACK)


# --- вспомогательные ---

def _term(sign: int, exp: int, *factors: LaurentPoly) -> LaurentPoly:
    result = LaurentPoly.monomial(checked_exponent(exp), sign)
    for factor in factors:
        result = result * factor
    return result


def _sign(power: int) -> int:
    return -1 if power % 2 else 1


def _sum(terms: Iterable[LaurentPoly]) -> LaurentPoly:
    total = ZERO
    for term in terms:
        total = total + term
    return total


def _integer_binomial(n: int, k: int) -> int:
    """Обычный биномиальный коэффициент с отрицательными аргументами (значение [n, k] при q = 1)."""
    if n >= 0:
        return comb(n, k) if 0 <= k <= n else 0
    if k >= 0:
        return _sign(k) * comb(-n + k - 1, k)
    if k <= n:
        return _sign(n - k) * comb(-k - 1, n - k)
    return 0


def qb(n: int, k: int) -> LaurentPoly:
    return binomial.qbinom(n, k)


# --- проверки для отдельных [n, k] ---

def check_symmetry_point(n: int, k: int) -> list[Comparison]:
    return [Comparison(*binomial.symmetry_sides(n, k))]


def check_absorption_point(n: int, k: int) -> list[Comparison]:
    return [Comparison(*binomial.absorption_sides(n, k))]


def check_zeros(n: int, k: int) -> list[Comparison]:
    return [Comparison(qb(n, k).is_zero, binomial.is_zero_region(n, k))]


def check_reciprocal_forms(n: int, k: int) -> list[Comparison]:
    comparisons = []
    for applies, transform in ((k >= 0, binomial.trans1), (k <= n, binomial.trans2)):
        if applies:
            sign, exp, args = transform(n, k)
            comparisons.append(Comparison(
                binomial.reciprocal(n, k),
                _term(sign, -exp, binomial.reciprocal(*args)),
            ))
    return comparisons


def check_selfrec(n: int, k: int) -> list[Comparison]:
    self_reciprocal = Comparison(binomial.reciprocal(n, k), qb(n, k).shift(-k * (n - k)))
    return [self_reciprocal, *check_reciprocal_forms(n, k)]


def check_trans1(n: int, k: int) -> list[Comparison]:
    transform = binomial.trans1(n, k)
    return [Comparison(binomial.qbinom_oracle(n, k), transform.apply(qb(*transform.args)))]


def check_trans2(n: int, k: int) -> list[Comparison]:
    transform = binomial.trans2(n, k)
    return [Comparison(binomial.qbinom_oracle(n, k), transform.apply(qb(*transform.args)))]


def check_negdef(n: int, k: int) -> list[Comparison]:
    return [Comparison(qb(n, k), binomial.qbinom_oracle(n, k))]


def check_neg_one(k: int) -> list[Comparison]:
    sign = _sign(k) if k >= 0 else _sign(k + 1)
    return [Comparison(qb(-1, k), LaurentPoly.monomial(-k * (k + 1) // 2, sign))]


def check_q1_specialization(n: int, k: int) -> list[Comparison]:
    return [Comparison(qb(n, k).evaluate(1), Fraction(_integer_binomial(n, k)))]


def check_pochhammer_reversal(a: int, k: int) -> list[Comparison]:
    """Обе единицы знака: a = q^a и a = -q^a."""
    return [
        Comparison(pochhammer(QMonomial(sign, a), k), pochhammer_reversed(QMonomial(sign, a), k))
        for sign in (1, -1)
    ]


# --- q-биномиальные теоремы ---

def check_qbinpos(n: int) -> list[Comparison]:
    return [Comparison(xprod_pos(n), qbinpos_series(n))]


def check_qbinneg(n: int, order: int | None = None) -> list[Comparison]:
    if order is None:
        order = qbinneg_order(n)
    lhs = xseries_inverse(xprod_pos(n, 0, order).negate_x())
    return [Comparison(lhs, qbinneg_series(n, order))]


def check_product_rule(a: int, b: int) -> list[Comparison]:
    """
    Само правило произведения и сравнение коэффициентов, из которого выводится q-аналог
    тождества Чу-Вандермонда: второй множитель - ряд для b с заменой x -> x·q^a.
    """
    order = a + b
    shifted = xprod_pos(b, a, order)
    return [
        Comparison(xprod_pos(a, 0, order) * shifted, xprod_pos(order)),
        Comparison(shifted, qbinpos_series(b, order).scale_x(a)),
        Comparison(qbinpos_series(a, order) * qbinpos_series(b, order).scale_x(a), qbinpos_series(order)),
    ]


# --- суммационные тождества ---

def qbinsum1_printed_term(a: int, b: int, n: int, k: int) -> LaurentPoly:
    return _term(1, (a - k) * (n - k), qb(a, k), qb(b, n - k))


def qbinsum1_reindexed_term(a: int, b: int, n: int, k: int) -> LaurentPoly:
    return _term(1, (b - n + k) * k, qb(a, k), qb(b, n - k))


def check_qbinsum1(a: int, b: int, n: int) -> list[Comparison]:
    rhs = qb(a + b, n)
    return [
        Comparison(_sum(qbinsum1_printed_term(a, b, n, k) for k in range(n + 1)), rhs),
        Comparison(_sum(qbinsum1_reindexed_term(a, b, n, k) for k in range(n + 1)), rhs),
    ]


def qbinsum2_printed_term(a: int, b: int, n: int, k: int) -> LaurentPoly:
    return _term(1, (b + 1) * k, qb(a + k, a), qb(b + n - k, b))


def qbinsum2_reindexed_term(a: int, b: int, n: int, k: int) -> LaurentPoly:
    return _term(1, (a + 1) * (n - k), qb(a + k, a), qb(b + n - k, b))


def check_qbinsum2(a: int, b: int, n: int) -> list[Comparison]:
    rhs = qb(n + a + b + 1, n)
    return [
        Comparison(_sum(qbinsum2_printed_term(a, b, n, k) for k in range(n + 1)), rhs),
        Comparison(_sum(qbinsum2_reindexed_term(a, b, n, k) for k in range(n + 1)), rhs),
    ]


def qbinsum3_term(a: int, b: int, n: int, k: int) -> LaurentPoly:
    return _term(_sign(k), tri(k), qb(a, k), qb(b + n - k, b))


def qbinsum3_case2_rhs(a: int, b: int, n: int) -> LaurentPoly:
    return _term(_sign(n), b * n + tri(n + 1), qb(a - b - 1, n))


def qbinsum3_rhs(a: int, b: int, n: int) -> LaurentPoly:
    if a <= b:
        return _term(1, a * n, qb(n - a + b, n))
    return qbinsum3_case2_rhs(a, b, n)


def qbinsum3_sum(a: int, b: int, n: int) -> LaurentPoly:
    return _sum(qbinsum3_term(a, b, n, k) for k in range(n + 1))


def check_qbinsum3(a: int, b: int, n: int) -> list[Comparison]:
    # сравнение коэффициентов до замены b на b+1
    unshifted = _sum(
        _term(_sign(n - k), tri(k), qb(a, k), qb(b + n - k - 1, b - 1)) for k in range(n + 1)
    )
    return [
        Comparison(qbinsum3_sum(a, b, n), qbinsum3_rhs(a, b, n)),
        Comparison(unshifted, _term(1, b * n + tri(n), qb(a - b, n))),
    ]


def check_qbinsum3_case2_all(a: int, b: int, n: int) -> list[Comparison]:
    return [Comparison(qbinsum3_sum(a, b, n), qbinsum3_case2_rhs(a, b, n))]


def check_qbinsum3_special(a: int, n: int) -> list[Comparison]:
    """Частные случаи b = a-1 и a = n, b = 0."""
    return [
        Comparison(qbinsum3_sum(a, a - 1, n), qbinsum3_rhs(a, a - 1, n)),
        Comparison(qbinsum3_sum(n, 0, n), qbinsum3_rhs(n, 0, n)),
    ]


def qbinsum4_rhs(a: int, b: int, n: int) -> LaurentPoly:
    if a <= b:
        return _term(1, (a - b) * n, qb(n - a + b, n))
    return _term(_sign(n), tri(n + 1), qb(a - b - 1, n))


def check_qbinsum4(a: int, b: int, n: int) -> list[Comparison]:
    lhs = _sum(
        _term(_sign(k), (a - b) * (n - k) + tri(k + 1), qb(a, k), qb(b + n - k, b))
        for k in range(n + 1)
    )
    return [Comparison(lhs, qbinsum4_rhs(a, b, n))]


def derived_transform_term(a: int, b: int, n: int, k: int) -> LaurentPoly:
    return _term(1, a * (n - k), qb(a + k - 1, a - 1), qb(b + n - k, b))


def check_derived_transform(a: int, b: int, n: int) -> list[Comparison]:
    lhs = _sum(derived_transform_term(a, b, n, k) for k in range(n + 1))
    return [Comparison(lhs, qb(n + a + b, n))]


def check_link_qbinsum1(a: int, b: int, n: int) -> list[Comparison]:
    """
    Вторая ветка суммы с [a, k][b+n-k, b] при b -> -b-1: после trans2 каждое слагаемое,
    умноженное на (-1)^n q^{bn+n-n(n+1)/2}, совпадает со слагаемым q-Чу-Вандермонда с q^{k(b-n+k)};
    замена k -> n-k и a <-> b даёт исходное слагаемое q^{(a-k)(n-k)}.
    """
    factor = LaurentPoly.monomial(checked_exponent(b * n + n - tri(n + 1)), _sign(n))
    comparisons = [Comparison(factor * qbinsum3_case2_rhs(a, -b - 1, n), qb(a + b, n))]
    for k in range(n + 1):
        comparisons.append(Comparison(
            factor * qbinsum3_term(a, -b - 1, n, k),
            qbinsum1_reindexed_term(a, b, n, k),
        ))
        comparisons.append(Comparison(
            qbinsum1_printed_term(a, b, n, k),
            qbinsum1_reindexed_term(b, a, n, n - k),
        ))
    return comparisons


def check_link_qbinsum2(a: int, b: int, n: int) -> list[Comparison]:
    """
    Первая ветка при a -> -a: после trans1 каждое слагаемое, умноженное на q^{an}, совпадает со
    слагаемым промежуточного тождества; a -> a+1, k -> n-k, a <-> b даёт слагаемое q^{(b+1)k}.
    """
    factor = LaurentPoly.monomial(checked_exponent(a * n))
    comparisons = [Comparison(factor * qbinsum3_rhs(-a, b, n), qb(n + a + b, n))]
    for k in range(n + 1):
        comparisons.append(Comparison(factor * qbinsum3_term(-a, b, n, k), derived_transform_term(a, b, n, k)))
        comparisons.append(Comparison(
            derived_transform_term(b + 1, a, n, n - k),
            qbinsum2_printed_term(a, b, n, k),
        ))
    return comparisons


# --- реестр и прогон по сетке ---

def _grid(**ranges: tuple[int, int]) -> GridSpec:
    return GridSpec(ranges={name: IntRange(lo=lo, hi=hi) for name, (lo, hi) in ranges.items()})


def _always(**_: int) -> bool:
    return True


def _nonnegative(**params: int) -> bool:
    return all(value >= 0 for value in params.values())


@dataclass(frozen=True)
class Identity:
    name: str
    check: Callable[..., list[Comparison]]
    grid: GridSpec
    precondition: Callable[..., bool] = field(default=_always)
    informational: bool = False


NK_GRID = _grid(n=(-12, 12), k=(-12, 12))
ABN_GRID = _grid(a=(0, 6), b=(0, 6), n=(0, 6))
SHIFTED_ABN_GRID = _grid(a=(1, 6), b=(0, 6), n=(0, 6))

IDENTITIES: dict[str, Identity] = {
    identity.name: identity
    for identity in (
        Identity("symmetry", check_symmetry_point, NK_GRID),
        Identity("absorption", check_absorption_point, NK_GRID),
        Identity("zeros", check_zeros, NK_GRID),
        Identity("selfrec", check_selfrec, NK_GRID),
        Identity("reciprocal_forms", check_reciprocal_forms, NK_GRID),
        Identity("pochhammer_reversal", check_pochhammer_reversal, _grid(a=(-6, 6), k=(0, 8)),
                 lambda a, k: k >= 0),
        Identity("trans1", check_trans1, _grid(n=(-12, 12), k=(0, 12)), lambda n, k: k >= 0),
        Identity("trans2", check_trans2, NK_GRID, lambda n, k: k <= n),
        Identity("negdef", check_negdef, NK_GRID),
        Identity("neg_one", check_neg_one, _grid(k=(-8, 8))),
        Identity("q1_specialization", check_q1_specialization, NK_GRID),
        Identity("qbinpos", check_qbinpos, _grid(n=(0, 12)), _nonnegative),
        Identity("qbinneg", check_qbinneg, _grid(n=(1, 8)), _nonnegative),
        Identity("product_rule", check_product_rule, _grid(a=(0, 8), b=(0, 8)), _nonnegative),
        Identity("qbinsum1", check_qbinsum1, ABN_GRID, _nonnegative),
        Identity("qbinsum2", check_qbinsum2, ABN_GRID, _nonnegative),
        Identity("qbinsum3", check_qbinsum3, ABN_GRID, _nonnegative),
        Identity("qbinsum3_special", check_qbinsum3_special, _grid(a=(1, 6), n=(1, 6)), _nonnegative),
        Identity("qbinsum4", check_qbinsum4, ABN_GRID, _nonnegative),
        Identity("derived_transform", check_derived_transform, SHIFTED_ABN_GRID,
                 lambda a, b, n: a >= 1 and b >= 0 and n >= 0),
        Identity("link_qbinsum1", check_link_qbinsum1, ABN_GRID, _nonnegative),
        Identity("link_qbinsum2", check_link_qbinsum2, SHIFTED_ABN_GRID,
                 lambda a, b, n: a >= 1 and b >= 0 and n >= 0),
        Identity("qbinsum3_case2_all", check_qbinsum3_case2_all, ABN_GRID, _nonnegative,
                 informational=True),
    )
}


def get_identity(name: str) -> Identity:
    identity = IDENTITIES.get(name)
    if identity is None:
        raise UnknownIdentity(f"Unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    return identity


Outcome = tuple[dict[str, int], list[Comparison]]


async def _evaluate_concurrently(identity: Identity, points: list[dict[str, int]], workers: int) -> list[Outcome]:
    limiter = anyio.CapacityLimiter(workers)
    outcomes: list[Outcome] = []
    errors: list[tuple[dict[str, int], Exception]] = []

    async def evaluate(point: dict[str, int]) -> None:
        try:
            comparisons = await to_thread.run_sync(partial(identity.check, **point), limiter=limiter)
        except Exception as exc:
            errors.append((point, exc))
        else:
            outcomes.append((point, comparisons))

    async with anyio.create_task_group() as task_group:
        for point in points:
            task_group.start_soon(evaluate, point)

    if errors:
        _, first = min(errors, key=lambda item: tuple(item[0].values()))
        raise first
    return outcomes


def run_grid(name: str, grid: GridSpec | None = None, workers: int | None = None) -> IdentityReport:
    """
    Проверяет тождество во всех точках сетки (по умолчанию - в его стандартной сетке).
    Точки, не удовлетворяющие условию тождества, пропускаются и не считаются.
    Отчёт не зависит от порядка вычисления: результаты сортируются по кортежу параметров.
    """
    identity = get_identity(name)
    grid = grid or identity.grid
    workers = CHECK_WORKERS if workers is None else workers

    points = [point for point in grid.points() if identity.precondition(**point)]
    logger.debug(f"{name}: {len(points)} grid points, {workers} worker(s)")

    if workers > 1 and len(points) > 1:
        outcomes = anyio.run(_evaluate_concurrently, identity, points, workers)
    else:
        outcomes = [(point, identity.check(**point)) for point in points]

    failures = []
    for point, comparisons in sorted(outcomes, key=lambda item: tuple(item[0].values())):
        for comparison in comparisons:
            if not comparison.holds:
                failures.append(FailureSchema(params=point, lhs=str(comparison.lhs), rhs=str(comparison.rhs)))

    if failures:
        logger.warning(f"{name}: {len(failures)} failing comparison(s) on {len(points)} point(s)")
    return IdentityReport(
        identity=name,
        grid=grid,
        checked=len(points),
        failures=failures,
        informational=identity.informational,
    )


def run_all(workers: int | None = None) -> list[IdentityReport]:
    return [run_grid(name, workers=workers) for name in IDENTITIES]
