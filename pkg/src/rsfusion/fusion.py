"""Fusion procedure for the idempotents of H_m(r, s).

The Baxterized generator T_i(x, y) = s T_i + (s - r) x / (y - x) is kept
with its scalar part as a factored fraction, so every denominator that can
arise is a binomial u_b - u_a. Psi(u_1..u_m) is built symbolically once per
(m, params), then specialized at the contents of a tableau by consecutive
substitution u_1 = sigma_1, u_2 = sigma_2, ...
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from gmpy2 import mpq

from .exactring import (
    FactoredFraction,
    Params,
    SingularPoint,
    substitute_consecutive,
)
from .hecke import HeckeElement, jm_idempotent
from .tableaux import (
    Partition,
    StandardTableau,
    all_standard_tableaux,
    b_stat,
    conjugate,
    hooks,
    longest_word,
)

DEFAULT_MAX_M = 6


def u(k: int) -> tuple:
    """Symbolic spectral variable u_k."""
    return ("u", k)


def _is_var(x) -> bool:
    return isinstance(x, tuple) and len(x) == 2 and x[0] == "u"


def baxter_scalar(x, y, arity: int) -> FactoredFraction:
    """(s - r) / (y/x - 1) without the (s - r) factor, i.e. x / (y - x)."""
    if not _is_var(x) and not _is_var(y) and mpq(x) == mpq(y):
        raise SingularPoint(f"T_i(x, y) is singular at x = y = {x}")
    if _is_var(x) and _is_var(y) and x == y:
        raise SingularPoint("T_i(x, y) is singular at x = y")
    inv = FactoredFraction.inverse_binomial(arity, y, x)
    num = FactoredFraction.variable(arity, x[1]) if _is_var(x) else mpq(x)
    return inv * num


def baxterized(i: int, x, y, m: int, params: Params) -> HeckeElement:
    """T_i(x, y) as a fraction-valued Hecke element.

    ``x`` and ``y`` are rationals or symbolic variables from :func:`u`.
    """
    if not 1 <= i < m:
        raise ValueError(f"generator index {i} out of range for m={m}")
    one = FactoredFraction.constant(m, 1)
    e = HeckeElement.one(m, params, one).times_gen(i).scale(params.s)
    return e + baxter_scalar(x, y, m) * (params.s - params.r)


def times_baxterized(E: HeckeElement, i: int, x, y) -> HeckeElement:
    """E * T_i(x, y) without forming the factor as an element."""
    p = E.params
    c = baxter_scalar(x, y, E.m) * (p.s - p.r)
    return E.times_gen(i).scale(p.s) + E.scale(c)


@lru_cache(maxsize=None)
def psi(m: int, params: Params) -> HeckeElement:
    """Psi(u_1..u_m) = prod_k [T_k(u_1,u_{k+1}) ... T_1(u_k,u_{k+1})] * T_{w_m}^{-1}."""
    if m < 1:
        raise ValueError("m must be positive")
    E = HeckeElement.one(m, params, FactoredFraction.constant(m, 1))
    for k in range(1, m):
        for a in range(1, k + 1):
            # T_{k-a+1}(u_a, u_{k+1})
            E = times_baxterized(E, k - a + 1, u(a), u(k + 1))
    for i in reversed(longest_word(m)):
        E = E.times_gen_inverse(i)
    return E


def f_const(lam, params: Params) -> mpq:
    """f(lambda) = (s/r)^{b(lambda')} s^{-C(m,2)} (1-s/r)^m prod (1-(s/r)^h)^{-1}."""
    lam = Partition.coerce(lam)
    m = lam.weight
    ratio = params.ratio
    val = ratio ** b_stat(conjugate(lam)) * params.s ** (-comb(m, 2)) * (1 - ratio) ** m
    for h in hooks(lam).values():
        val /= 1 - ratio ** h
    return val


def evaluate_consecutive(E: HeckeElement, values) -> HeckeElement:
    """Substitute u_1 = values[0], u_2 = values[1], ... in every coefficient.

    Raises NonzeroRemainder if any stage is not regular.
    """
    terms = dict(E.terms)
    for k, v in enumerate(values, 1):
        terms = {sig: substitute_consecutive(c, k, v) for sig, c in terms.items()}
    out = {}
    for sig, c in terms.items():
        val = c.constant_value()
        if val:
            out[sig] = val
    return HeckeElement(E.m, E.params, out)


def evaluated_psi(T, params: Params) -> HeckeElement:
    """Psi(u)|u_1=sigma_1|...|u_m=sigma_m for the contents of T."""
    T = StandardTableau.coerce(T)
    contents = [params.content(c) for c in T.content_exponents]
    return evaluate_consecutive(psi(T.m, params), contents)


def fused_idempotent(lam, T, params: Params, max_m: int = DEFAULT_MAX_M) -> HeckeElement:
    lam = Partition.coerce(lam)
    T = StandardTableau.coerce(T)
    if T.shape != lam:
        raise ValueError(f"tableau {T} does not have shape {lam}")
    if T.m > max_m:
        raise ValueError(
            f"fusion above m={max_m} is refused by default; raise the cap explicitly"
        )
    return evaluated_psi(T, params).scale(f_const(lam, params))


@dataclass
class FusionComparison:
    lam: Partition
    tableau: StandardTableau
    equal: bool
    millis: float
    error: str | None = None

    def to_dict(self) -> dict:
        d = {"lambda": str(self.lam), "tableau": str(self.tableau),
             "equal": self.equal, "millis": round(self.millis, 3)}
        if self.error:
            d["error"] = self.error
        return d


def verify_fusion_equals_jm(m: int, params: Params, max_m: int = DEFAULT_MAX_M,
                            shapes=None) -> list[FusionComparison]:
    """Compare fused and inductive idempotents for every standard tableau."""
    if shapes is not None:
        shapes = {Partition.coerce(s) for s in shapes}
    out = []
    for lam, T in all_standard_tableaux(m):
        if shapes is not None and lam not in shapes:
            continue
        t0 = time.perf_counter()
        try:
            equal = fused_idempotent(lam, T, params, max_m) == jm_idempotent(lam, T, params)
            err = None
        except ArithmeticError as exc:
            equal, err = False, f"{type(exc).__name__}: {exc}"
        out.append(FusionComparison(lam, T, equal, 1000 * (time.perf_counter() - t0), err))
    return out
