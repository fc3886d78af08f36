"""Two-variable counting polynomials for bicolored posets.

The objects being counted are maps phi from a poset P into the chain
1..x.  In weak mode phi preserves order weakly (a < b forces
phi(a) <= phi(b)) and every celeste element lands at or above the
threshold y; in strict mode the order is preserved strictly and celeste
elements land strictly above y.  Both counts are polynomials in (x, y).

Four routes to these polynomials live here and are played against each
other by the test suite:

* closed forms for chains and for ascent/descent-constrained words,
* the decomposition of a poset's polynomial as the sum of its linear
  extensions' word polynomials,
* brute-force enumeration of all x^n maps (vectorized, exact),
* Lagrange interpolation of the brute counts through an integer grid.

Counts and polynomials agree on the validity region 0 <= y <= x in
strict mode and 1 <= y <= x + 1 in weak mode; outside it the polynomial
is still defined but no longer counts anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .poset import (
    BicoloredPoset,
    Word,
    ascents,
    covers,
    descents,
    is_natural_labeling,
    is_reverse_natural_labeling,
    linear_extensions,
    natural_labeling,
    reverse_natural_labeling,
    word_of,
)
from .ratpoly import ONE, X, Y, BiPoly, binom_poly

DEFAULT_BUDGET = 10_000_000

MODES = ("strict", "weak")


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would visit more objects than allowed."""


def _check_budget(count: int, budget: int | None) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if count > limit:
        raise BudgetExceededError(
            f"enumeration of {count} objects exceeds budget {limit}"
        )


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification; a failure always carries a witness."""

    name: str
    passed: bool
    witness: dict | None = None

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError("failed check must carry a witness")

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


# closed forms ---------------------------------------------------------------

# The chain sums below are memoized on the four integers that determine
# them, so repeated decompositions cost dictionary lookups.


@lru_cache(maxsize=None)
def _strict_sum(n: int, k: int, prefix_shift: int, full_shift: int) -> BiPoly:
    # sum_{i=0}^{k} binom(y + prefix, i) * binom(x - y + full - prefix, n - i)
    arg_low = Y + prefix_shift
    arg_high = X - Y + (full_shift - prefix_shift)
    total = BiPoly.zero()
    for i in range(k + 1):
        total = total + binom_poly(arg_low, i) * binom_poly(arg_high, n - i)
    return total


@lru_cache(maxsize=None)
def _weak_sum(n: int, k: int, prefix_shift: int, full_shift: int) -> BiPoly:
    # sum_{i=0}^{k} binom(y - prefix - 2 + i, i)
    #             * binom(x - y + prefix - full + n - i, n - i)
    total = BiPoly.zero()
    for i in range(k + 1):
        arg_low = Y + (i - prefix_shift - 2)
        arg_high = X - Y + (prefix_shift - full_shift + n - i)
        total = total + binom_poly(arg_low, i) * binom_poly(arg_high, n - i)
    return total


def _validate_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("chain length must be nonnegative")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} must lie in 0..{n}")


def chain_strict(n: int, k: int) -> BiPoly:
    """Strict counting polynomial of an n-chain whose lowest celeste element
    sits at position k+1 (k = n means no celeste element at all).

    Maps phi(a_1) < ... < phi(a_n) into 1..x with phi > y from position
    k+1 on split by how many of the first k values lie at or below y.
    """
    _validate_nk(n, k)
    return _strict_sum(n, k, 0, 0)


def chain_weak(n: int, k: int) -> BiPoly:
    """Weak counterpart of chain_strict: phi weakly increasing, phi >= y
    from position k+1 on."""
    _validate_nk(n, k)
    return _weak_sum(n, k, 0, 0)


def _word_stats(w: Word, stat: Callable[[Iterable[int]], set[int]]) -> tuple[int, int, int]:
    n = len(w)
    if w.celeste_pos is None:
        k = n
        prefix = 0
    else:
        k = w.celeste_pos - 1
        prefix = len(stat(w.letters[: w.celeste_pos]))
    return k, prefix, len(stat(w.letters))


def word_poly_strict(w: Word) -> BiPoly:
    """Strict counting polynomial of a word: maps phi on positions 1..n
    with phi(j) <= phi(j+1) at ascents of w, phi(j) < phi(j+1) elsewhere,
    and phi above y from the marked position on.

    This is the chain polynomial with x shifted by the ascent count of w
    and y by the ascent count of the prefix ending at the mark.
    """
    k, a, full = _word_stats(w, ascents)
    return _strict_sum(len(w), k, a, full)


def word_poly_weak(w: Word) -> BiPoly:
    """Weak counting polynomial of a word: phi(j) < phi(j+1) at descents,
    phi(j) <= phi(j+1) elsewhere, phi at or above y from the mark on.
    Shifts use descent counts with the opposite sign."""
    k, d, full = _word_stats(w, descents)
    return _weak_sum(len(w), k, d, full)


# decomposition over linear extensions ---------------------------------------


def strict_word_decomposition(
    P: BicoloredPoset, labeling: tuple[int, ...] | None = None
) -> tuple[tuple[Word, BiPoly], ...]:
    """The (word, word polynomial) summands of order_poly_strict.

    The labeling must be reverse natural; any such labeling gives the
    same total, which the tests exercise.
    """
    if labeling is None:
        labeling = reverse_natural_labeling(P)
    elif not is_reverse_natural_labeling(P, tuple(labeling)):
        raise ValueError("strict decomposition needs a reverse natural labeling")
    out = []
    for ext in linear_extensions(P):
        w = word_of(ext, labeling, P)
        out.append((w, word_poly_strict(w)))
    return tuple(out)


def weak_word_decomposition(
    P: BicoloredPoset, labeling: tuple[int, ...] | None = None
) -> tuple[tuple[Word, BiPoly], ...]:
    """The (word, word polynomial) summands of order_poly_weak; the
    labeling must be natural."""
    if labeling is None:
        labeling = natural_labeling(P)
    elif not is_natural_labeling(P, tuple(labeling)):
        raise ValueError("weak decomposition needs a natural labeling")
    out = []
    for ext in linear_extensions(P):
        w = word_of(ext, labeling, P)
        out.append((w, word_poly_weak(w)))
    return tuple(out)


@lru_cache(maxsize=None)
def _order_poly_strict_default(P: BicoloredPoset) -> BiPoly:
    total = BiPoly.zero()
    for _, poly in strict_word_decomposition(P):
        total = total + poly
    return total


@lru_cache(maxsize=None)
def _order_poly_weak_default(P: BicoloredPoset) -> BiPoly:
    total = BiPoly.zero()
    for _, poly in weak_word_decomposition(P):
        total = total + poly
    return total


def order_poly_strict(
    P: BicoloredPoset, labeling: tuple[int, ...] | None = None
) -> BiPoly:
    """Polynomial counting strict order preserving maps of P into 1..x
    with every celeste element sent strictly above y."""
    if labeling is None:
        return _order_poly_strict_default(P)
    total = BiPoly.zero()
    for _, poly in strict_word_decomposition(P, labeling):
        total = total + poly
    return total


def order_poly_weak(
    P: BicoloredPoset, labeling: tuple[int, ...] | None = None
) -> BiPoly:
    """Polynomial counting weak order preserving maps of P into 1..x with
    every celeste element sent to y or above."""
    if labeling is None:
        return _order_poly_weak_default(P)
    total = BiPoly.zero()
    for _, poly in weak_word_decomposition(P, labeling):
        total = total + poly
    return total


# brute-force enumeration -----------------------------------------------------


@lru_cache(maxsize=8)
def _value_rows(n: int, x_max: int) -> np.ndarray:
    """All maps from n positions into 1..x_max, one row per map."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rows = np.indices((x_max,) * n, dtype=np.int64).reshape(n, -1).T + 1
    rows.setflags(write=False)
    return rows


def _profile_to_cum(prof: np.ndarray) -> np.ndarray:
    """From tally[m, t] to T[m, t] = sum over m' <= m, t' >= t."""
    cum = prof.cumsum(axis=0)
    return cum[:, ::-1].cumsum(axis=1)[:, ::-1]


@lru_cache(maxsize=4096)
def _map_cum_table(P: BicoloredPoset, mode: str, x_max: int) -> np.ndarray:
    """Cumulative tally of valid maps by (max value, min celeste value).

    Column x_max + 1 holds the maps of celeste-free posets.  Strict and
    weak counts for every (x0 <= x_max, y0) fall out of one enumeration.
    """
    rows = _value_rows(P.n, x_max)
    mask = np.ones(len(rows), dtype=bool)
    for a, b in covers(P):
        if mode == "strict":
            mask &= rows[:, a] < rows[:, b]
        else:
            mask &= rows[:, a] <= rows[:, b]
    if P.n:
        maxv = rows.max(axis=1)
    else:
        maxv = np.zeros(len(rows), dtype=np.int64)
    if P.celeste:
        mincel = rows[:, sorted(P.celeste)].min(axis=1)
    else:
        mincel = np.full(len(rows), x_max + 1, dtype=np.int64)
    width = x_max + 2
    code = maxv[mask] * width + mincel[mask]
    prof = np.bincount(code, minlength=(x_max + 1) * width).reshape(x_max + 1, width)
    table = _profile_to_cum(prof)
    table.setflags(write=False)
    return table


def _mode_ok(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")


def _counts_ok(x0: int, y0: int) -> None:
    if x0 < 0 or y0 < 0:
        raise ValueError("x0 and y0 must be nonnegative integers")


def brute_count_strict(
    P: BicoloredPoset, x0: int, y0: int, budget: int | None = None
) -> int:
    """Count by enumerating all x0^n maps; raises BudgetExceededError
    instead of attempting an enumeration larger than the budget."""
    _counts_ok(x0, y0)
    _check_budget(x0**P.n, budget)
    table = _map_cum_table(P, "strict", x0)
    if not P.celeste:
        return int(table[x0, 0])
    return int(table[x0, min(y0 + 1, x0 + 1)])


def brute_count_weak(
    P: BicoloredPoset, x0: int, y0: int, budget: int | None = None
) -> int:
    _counts_ok(x0, y0)
    _check_budget(x0**P.n, budget)
    table = _map_cum_table(P, "weak", x0)
    if not P.celeste:
        return int(table[x0, 0])
    return int(table[x0, min(y0, x0 + 1)])


def brute_count(
    P: BicoloredPoset, mode: str, x0: int, y0: int, budget: int | None = None
) -> int:
    _mode_ok(mode)
    if mode == "strict":
        return brute_count_strict(P, x0, y0, budget)
    return brute_count_weak(P, x0, y0, budget)


# interpolation ----------------------------------------------------------------


def _grid(n: int, mode: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # y values cover a full column of the validity region; x values sit
    # strictly above every y so each grid point is a genuine count
    if mode == "strict":
        ys = tuple(range(0, n + 1))
    else:
        ys = tuple(range(1, n + 2))
    x_lo = n + 2 + ys[-1]
    xs = tuple(range(x_lo, x_lo + n + 1))
    return xs, ys


@lru_cache(maxsize=None)
def _lagrange_basis(points: tuple[int, ...], var: str) -> tuple[BiPoly, ...]:
    v = X if var == "x" else Y
    out = []
    for i, pi in enumerate(points):
        b = ONE
        for j, pj in enumerate(points):
            if j != i:
                b = b * (v - pj) * Fraction(1, pi - pj)
        out.append(b)
    return tuple(out)


@lru_cache(maxsize=None)
def _tensor_basis(n: int, mode: str) -> tuple[tuple[int, ...], tuple[int, ...], tuple]:
    xs, ys = _grid(n, mode)
    bx = _lagrange_basis(xs, "x")
    by = _lagrange_basis(ys, "y")
    prods = tuple(tuple(bx[i] * by[j] for j in range(len(ys))) for i in range(len(xs)))
    return xs, ys, prods


def interpolate_poly(counter: Callable[[int, int], int], n: int, mode: str) -> BiPoly:
    """Reconstruct the unique polynomial of degree <= n in each variable
    through the counter's values on the mode's integer grid.

    The counter is any callable (x0, y0) -> count; feeding it a brute
    enumerator yields the polynomial without touching the closed forms.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _mode_ok(mode)
    xs, ys, prods = _tensor_basis(n, mode)
    acc: dict[tuple[int, int], Fraction] = {}
    for i, xv in enumerate(xs):
        for j, yv in enumerate(ys):
            v = int(counter(xv, yv))
            if not v:
                continue
            for e, c in prods[i][j].terms.items():
                acc[e] = acc.get(e, Fraction(0)) + v * c
    return BiPoly(acc)


def interpolate_brute(
    P: BicoloredPoset, mode: str, budget: int | None = None
) -> BiPoly:
    """Interpolated brute-force polynomial; one enumeration serves the
    whole grid."""
    _mode_ok(mode)
    xs, _ = _grid(P.n, mode)
    _check_budget(xs[-1] ** P.n, budget)
    if mode == "strict":
        return interpolate_poly(
            lambda a, b: brute_count_strict(P, a, b, budget), P.n, mode
        )
    return interpolate_poly(lambda a, b: brute_count_weak(P, a, b, budget), P.n, mode)


# reciprocity ------------------------------------------------------------------


def check_reciprocity_poset(P: BicoloredPoset) -> CheckReport:
    """Verify (-1)^n p_strict(-x, -y) == p_weak(x, y + 1) as polynomials."""
    lhs = order_poly_strict(P).negate_args() * (-1) ** P.n
    rhs = order_poly_weak(P).shift_y(1)
    if lhs == rhs:
        return CheckReport("poset-reciprocity", True)
    from .poset import poset_to_json

    witness = {"poset": poset_to_json(P), "lhs": lhs.text(), "rhs": rhs.text()}
    return CheckReport("poset-reciprocity", False, witness)


def check_reciprocity_word(w: Word) -> CheckReport:
    """Word-level reciprocity: negating both arguments of the strict word
    polynomial matches a weak chain sum driven by the reversed word.

    The reversed word's descent count equals the original's ascent count,
    and the prefix statistic stays with the original mark, so the right
    side is the weak sum with those shifts, taken at y + 1.  The report
    always records both sides.
    """
    n = len(w)
    k, a, full = _word_stats(w, ascents)
    lhs = word_poly_strict(w).negate_args() * (-1) ** n
    rhs = _weak_sum(n, k, a, full).shift_y(1)
    witness = {
        "word": list(w.letters),
        "celeste_pos": w.celeste_pos,
        "lhs": lhs.text(),
        "rhs": rhs.text(),
    }
    return CheckReport("word-reciprocity", lhs == rhs, witness)
