"""Classical Bernoulli, Euler, and Genocchi families via exact series.

Conventions (all arithmetic is exact, over Fraction):

* Bernoulli numbers from t/(exp(t)-1), so B_1 = -1/2.
* Euler numbers from 2/(exp(t)+1): the rational sequence E_0 = 1,
  E_1 = -1/2, E_2 = 0, E_3 = 1/4, ... (values of the Euler polynomials at 0,
  not the integer secant numbers).
* Genocchi numbers from 2t/(exp(t)+1): G_0 = 0, G_1 = 1, G_2 = -1, and the
  odd values G_3, G_5, ... vanish.
* Order-r Genocchi polynomials from 2*(1/(1+exp(t)))**r * exp(x*t).

Power sums f_k(n) = 1^k + ... + n^k and their alternating variants
-1^k + 2^k - ... are provided both as brute-force loops and through the
Bernoulli/Euler closed forms, so each route can verify the other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .records import VerificationRecord, frac_str, record_from_difference
from .series import Series, exp_xt

_GUARD_TERMS = 2  # extra series coefficients beyond the requested index


class NumberTable:
    """An immutable run of exactly computed numbers, indexed from 0."""

    __slots__ = ("kind", "values")

    def __init__(self, kind: str, values: tuple[Fraction, ...]) -> None:
        self.kind = kind
        self.values = values

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NumberTable):
            return self.kind == other.kind and self.values == other.values
        return NotImplemented

    def __repr__(self) -> str:
        return f"NumberTable({self.kind!r}, {[str(v) for v in self.values]})"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


@lru_cache(maxsize=None)
def _euler_gf(order: int) -> Series:
    """Series of 2/(exp(t)+1)."""
    halves = [Fraction(1)]
    halves += [Fraction(1, 2 * factorial(m)) for m in range(1, order + 1)]
    return Series(halves, order).recip()


@lru_cache(maxsize=None)
def bernoulli_numbers(n_max: int) -> NumberTable:
    """B_0 .. B_n_max from the reciprocal of (exp(t)-1)/t; B_1 = -1/2."""
    _require(n_max >= 0, "n_max must be >= 0")
    order = n_max + _GUARD_TERMS
    base = Series([Fraction(1, factorial(m + 1)) for m in range(order + 1)], order)
    inv = base.recip()
    values = tuple(inv.factorial_coeff(m) for m in range(n_max + 1))
    return NumberTable("B", values)


@lru_cache(maxsize=None)
def euler_numbers(n_max: int) -> NumberTable:
    """E_0 .. E_n_max from 2/(exp(t)+1); E_1 = -1/2."""
    _require(n_max >= 0, "n_max must be >= 0")
    gf = _euler_gf(n_max + _GUARD_TERMS)
    values = tuple(gf.factorial_coeff(m) for m in range(n_max + 1))
    return NumberTable("E", values)


@lru_cache(maxsize=None)
def genocchi_numbers(n_max: int) -> NumberTable:
    """G_0 .. G_n_max from 2t/(exp(t)+1); G_1 = 1, odd values above vanish."""
    _require(n_max >= 0, "n_max must be >= 0")
    gf = _euler_gf(n_max + _GUARD_TERMS).shift_up()
    values = tuple(gf.factorial_coeff(m) for m in range(n_max + 1))
    return NumberTable("G", values)


@lru_cache(maxsize=None)
def order_r_genocchi(r: int, n_max: int, x: Fraction = Fraction(0)) -> NumberTable:
    """G^(r)_0(x) .. G^(r)_n_max(x) from 2*(1/(1+exp(t)))**r * exp(x*t)."""
    _require(r >= 1, "order r must be >= 1")
    _require(n_max >= 0, "n_max must be >= 0")
    x = Fraction(x)
    order = n_max + _GUARD_TERMS
    one_plus_exp = Series(
        [Fraction(2)] + [Fraction(1, factorial(m)) for m in range(1, order + 1)], order
    )
    gf = one_plus_exp.recip() ** r * exp_xt(x, order) * Fraction(2)
    values = tuple(gf.factorial_coeff(m) for m in range(n_max + 1))
    return NumberTable(f"G^({r})", values)


def genocchi_poly(n: int, x: Fraction) -> Fraction:
    """Genocchi polynomial G_n(x) from the series 2t/(exp(t)+1) * exp(x*t)."""
    _require(n >= 0, "n must be >= 0")
    x = Fraction(x)
    order = n + _GUARD_TERMS
    gf = (_euler_gf(order) * exp_xt(x, order)).shift_up()
    return gf.factorial_coeff(n)


def genocchi_poly_binomial(n: int, x: Fraction) -> Fraction:
    """G_n(x) as sum(binom(n,k) * G_k * x**(n-k)); the independent route."""
    _require(n >= 0, "n must be >= 0")
    x = Fraction(x)
    table = genocchi_numbers(n)
    return sum(
        (comb(n, k) * table[k] * x ** (n - k) for k in range(n + 1)), Fraction(0)
    )


def euler_poly(k: int, x: Fraction) -> Fraction:
    """Euler polynomial E_k(x) from 2*exp(x*t)/(exp(t)+1)."""
    _require(k >= 0, "k must be >= 0")
    x = Fraction(x)
    order = k + _GUARD_TERMS
    gf = _euler_gf(order) * exp_xt(x, order)
    return gf.factorial_coeff(k)


def genocchi_relations_check(m: int) -> VerificationRecord:
    """Exact three-way comparison at even index 2m:

    G_{2m} (series)  ==  2*(1 - 2**(2m)) * B_{2m}  ==  2m * E_{2m-1}.
    """
    _require(m >= 1, "m must be >= 1")
    g = genocchi_numbers(2 * m)[2 * m]
    via_bernoulli = 2 * (1 - 2 ** (2 * m)) * bernoulli_numbers(2 * m)[2 * m]
    via_euler = 2 * m * euler_numbers(2 * m - 1)[2 * m - 1]
    difference = g - via_bernoulli
    if not difference:
        difference = g - via_euler
    return record_from_difference(
        "genocchi_relations",
        {"m": m},
        difference,
        details={
            "series": frac_str(g),
            "via_bernoulli": frac_str(via_bernoulli),
            "via_euler": frac_str(via_euler),
        },
    )


def power_sum(k: int, n: int) -> Fraction:
    """1**k + 2**k + ... + n**k by direct summation."""
    _require(k >= 1, "power k must be >= 1")
    _require(n >= 0, "n must be >= 0")
    return Fraction(sum(j**k for j in range(1, n + 1)))


def faulhaber_sum(n: int, k: int) -> Fraction:
    """Sum of the first k-1 n-th powers via the Bernoulli closed form.

    f_n(k-1) = (1/(n+1)) * sum_{i=0}^{n} binom(n+1, i) * B_i * k**(n+1-i).
    """
    _require(n >= 1, "power n must be >= 1")
    _require(k >= 1, "k must be >= 1")
    table = bernoulli_numbers(n)
    total = sum(
        (comb(n + 1, i) * table[i] * k ** (n + 1 - i) for i in range(n + 1)),
        Fraction(0),
    )
    return total / (n + 1)


def alt_power_sum(k: int, n: int) -> Fraction:
    """-1**k + 2**k - 3**k + ... + (-1)**(n-1) * (n-1)**k by direct summation."""
    _require(k >= 1, "power k must be >= 1")
    _require(n >= 2, "n must be >= 2")
    return Fraction(sum((-1) ** j * j**k for j in range(1, n)))


def alt_power_sum_via_euler(k: int, n: int) -> Fraction:
    """The same alternating sum through Euler polynomial values.

    Using j**k = (E_k(j+1) + E_k(j))/2, the sum telescopes to
    (-E_k(1) - (-1)**n * E_k(n)) / 2.
    """
    _require(k >= 1, "power k must be >= 1")
    _require(n >= 2, "n must be >= 2")
    value = -euler_poly(k, Fraction(1)) - (-1) ** n * euler_poly(k, Fraction(n))
    return value / 2


def euler_alt_formula(n: int, k: int) -> Fraction:
    """Literal evaluation of the alternating-sum formula in its printed shape:

    ((-1)**(k+1)/2) * sum_{l=0}^{k-1} binom(n,l) E_l k**(n-l)
      + (E_n/2) * (1 + (-1)**(k+1)).

    The caller chooses which integer plays n and which plays k, so both the
    literal reading and the index-swapped reading can be evaluated.
    """
    _require(n >= 1 and k >= 1, "n and k must be >= 1")
    table = euler_numbers(max(n, k - 1))
    sign = (-1) ** (k + 1)
    total = Fraction(0)
    for l in range(k):
        c = comb(n, l)
        if not c:
            continue  # also avoids negative powers of k when l > n
        total += c * table[l] * k ** (n - l)
    return Fraction(sign, 2) * total + Fraction(table[n], 2) * (1 + sign)


def alt_sum_formula_check(k: int, n: int, transposed: bool = False) -> VerificationRecord:
    """Compare the literal formula against the brute-force alternating sum.

    With transposed=True the two index roles are exchanged before
    substitution, documenting whether the swap repairs the formula.
    """
    brute = alt_power_sum(k, n)
    rhs = euler_alt_formula(k, n) if transposed else euler_alt_formula(n, k)
    identity = "alt_sum_formula_transposed" if transposed else "alt_sum_formula"
    return record_from_difference(identity, {"k": k, "n": n}, rhs - brute)
