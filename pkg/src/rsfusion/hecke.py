"""The Hecke algebra H_m(r, s) in the T_sigma basis.

Generators satisfy the braid relations and (T_i - 1)(T_i + r/s) = 0, so

    T_sigma T_i = T_{sigma s_i}                       if l(sigma s_i) > l(sigma)
    T_sigma T_i = (1 - r/s) T_sigma + (r/s) T_{sigma s_i}   otherwise

and symmetrically on the left. Coefficients may be rationals or any ring
element supporting ``+``, ``*`` by rationals and ``bool`` (zero test), e.g.
:class:`~rsfusion.exactring.FactoredFraction`.
"""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from gmpy2 import mpq

from .exactring import Params, rational
from .tableaux import (
    Partition,
    Permutation,
    StandardTableau,
    addable_cells,
    longest_word,
    reduced_word,
    simple_times,
    times_simple,
)


def _acc(out: dict, key, c):
    v = out.get(key)
    if v is None:
        out[key] = c
    else:
        v = v + c
        if v:
            out[key] = v
        else:
            del out[key]


class HeckeElement:
    __slots__ = ("m", "params", "terms")

    def __init__(self, m: int, params: Params, terms: Mapping | None = None):
        self.m = m
        self.params = params
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, m, params, terms):
        e = cls.__new__(cls)
        e.m, e.params, e.terms = m, params, terms
        return e

    @classmethod
    def one(cls, m: int, params: Params, unit=None) -> "HeckeElement":
        return cls._raw(m, params, {tuple(range(1, m + 1)): mpq(1) if unit is None else unit})

    @classmethod
    def zero(cls, m: int, params: Params) -> "HeckeElement":
        return cls._raw(m, params, {})

    @classmethod
    def basis(cls, sigma, params: Params, coeff=None) -> "HeckeElement":
        sigma = tuple(sigma)
        return cls._raw(len(sigma), params, {sigma: mpq(1) if coeff is None else coeff})

    @property
    def identity_perm(self) -> tuple:
        return tuple(range(1, self.m + 1))

    def _check(self, other: "HeckeElement"):
        if self.m != other.m or self.params != other.params:
            raise ValueError("elements live in different Hecke algebras")

    # linear structure ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.one(self.m, self.params, other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return HeckeElement._raw(self.m, self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement._raw(self.m, self.params, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.one(self.m, self.params, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HeckeElement":
        out = {}
        for k, v in self.terms.items():
            w = v * c
            if w:
                out[k] = w
        return HeckeElement._raw(self.m, self.params, out)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return he_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / mpq(c))

    def __pow__(self, k: int):
        out = HeckeElement.one(self.m, self.params)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            if self.m != other.m or self.params != other.params:
                return False
            return not (self - other).terms
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, sigma):
        return self.terms.get(tuple(sigma), 0)

    # generator multiplication ----------------------------------------
    def times_gen(self, i: int) -> "HeckeElement":
        """self * T_i."""
        q = self.params.q
        p = 1 - q
        out: dict = {}
        for sigma, c in self.terms.items():
            tau = times_simple(sigma, i)
            if sigma[i - 1] < sigma[i]:
                _acc(out, tau, c)
            else:
                _acc(out, sigma, c * p)
                _acc(out, tau, c * q)
        return HeckeElement._raw(self.m, self.params, out)

    def gen_times(self, i: int) -> "HeckeElement":
        """T_i * self."""
        q = self.params.q
        p = 1 - q
        out: dict = {}
        for sigma, c in self.terms.items():
            tau = simple_times(i, sigma)
            if sigma.index(i) < sigma.index(i + 1):
                _acc(out, tau, c)
            else:
                _acc(out, sigma, c * p)
                _acc(out, tau, c * q)
        return HeckeElement._raw(self.m, self.params, out)

    def times_gen_inverse(self, i: int) -> "HeckeElement":
        """self * T_i^{-1} with T_i^{-1} = (s/r) T_i + (1 - s/r)."""
        ratio = self.params.ratio
        return self.times_gen(i).scale(ratio) + self.scale(1 - ratio)

    def times_word(self, word: Iterable[int]) -> "HeckeElement":
        out = self
        for i in word:
            out = out.times_gen(i)
        return out

    # presentation ------------------------------------------------------
    def to_dict(self) -> dict[str, str]:
        """One-line permutation string -> coefficient string (rational coefficients)."""
        return {
            "".join(map(str, k)): str(v)
            for k, v in sorted(self.terms.items(), key=lambda kv: (len(reduced_word(kv[0])), kv[0]))
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping[str, str], params: Params) -> "HeckeElement":
        if not data:
            raise ValueError("cannot infer arity of an empty element")
        m = len(next(iter(data)))
        terms = {tuple(Permutation.parse(k)): rational(v) for k, v in data.items()}
        return cls(m, params, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), key=lambda kv: (len(reduced_word(kv[0])), kv[0])):
            word = reduced_word(k)
            name = "T_" + "".join(map(str, word)) if word else "1"
            parts.append(f"({v})*{name}")
        return " + ".join(parts)


def he_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the T_sigma basis.

    a * T_sigma is built by right multiplication along a reduced word of
    sigma, memoized over the prefixes so every support element of b costs a
    single generator step.
    """
    a._check(b)
    if not a.terms or not b.terms:
        return HeckeElement.zero(a.m, a.params)
    ident = a.identity_perm
    cache: dict[tuple, HeckeElement] = {ident: a}

    def a_times(sigma: tuple) -> HeckeElement:
        hit = cache.get(sigma)
        if hit is not None:
            return hit
        word = reduced_word(sigma)
        prefix = times_simple(sigma, word[-1])
        val = a_times(prefix).times_gen(word[-1])
        cache[sigma] = val
        return val

    out: dict = {}
    for sigma in sorted(b.terms, key=lambda s: len(reduced_word(s))):
        cb = b.terms[sigma]
        for tau, ca in a_times(sigma).terms.items():
            _acc(out, tau, ca * cb)
    return HeckeElement._raw(a.m, a.params, out)


# ---------------------------------------------------------------------------
# distinguished elements


def generator(i: int, m: int, params: Params) -> HeckeElement:
    if not 1 <= i < m:
        raise ValueError(f"generator index {i} out of range for m={m}")
    return HeckeElement.one(m, params).times_gen(i)


def t_word(sigma, params: Params, word: Iterable[int] | None = None) -> HeckeElement:
    """T_sigma, built from ``word`` (which must be a reduced word for sigma) or
    from the canonical reduced word."""
    sigma = tuple(sigma)
    m = len(sigma)
    if word is None:
        word = reduced_word(sigma)
    word = tuple(word)
    p = tuple(range(1, m + 1))
    for i in word:
        p = times_simple(p, i)
    if p != sigma:
        raise ValueError(f"word {word} does not spell {sigma}")
    if len(word) != len(reduced_word(sigma)):
        raise ValueError(f"word {word} is not reduced")
    return HeckeElement.one(m, params).times_word(word)


def gen_inverse(i: int, m: int, params: Params) -> HeckeElement:
    """T_i^{-1} = (s/r) T_i + (1 - s/r)."""
    return HeckeElement.one(m, params).times_gen_inverse(i)


@lru_cache(maxsize=None)
def t_longest(k: int, m: int, params: Params) -> HeckeElement:
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    return HeckeElement.one(m, params).times_word(longest_word(k))


@lru_cache(maxsize=None)
def t_longest_inverse(k: int, m: int, params: Params) -> HeckeElement:
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    out = HeckeElement.one(m, params)
    for i in reversed(longest_word(k)):
        out = out.times_gen_inverse(i)
    return out


@lru_cache(maxsize=None)
def jm(k: int, m: int, params: Params) -> HeckeElement:
    """Jucys-Murphy element y_k: y_1 = 1, y_{k+1} = (s/r) T_k y_k T_k."""
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    if k == 1:
        return HeckeElement.one(m, params)
    prev = jm(k - 1, m, params)
    return prev.gen_times(k - 1).times_gen(k - 1).scale(params.ratio)


def embed(h: HeckeElement, m: int) -> HeckeElement:
    """Image of h under the inclusion H_k -> H_m."""
    if m < h.m:
        raise ValueError("cannot embed into a smaller algebra")
    tail = tuple(range(h.m + 1, m + 1))
    return HeckeElement._raw(m, h.params, {k + tail: v for k, v in h.terms.items()})


@lru_cache(maxsize=None)
def _jm_idempotent(T: StandardTableau, params: Params) -> HeckeElement:
    m = T.m
    if m == 1:
        return HeckeElement.one(1, params)
    U = T.remove_max()
    prev = embed(_jm_idempotent(U, params), m)
    alpha = T.cell_of(m)
    sigma = params.content(alpha[1] - alpha[0])
    y = jm(m, m, params)
    out = prev
    denom = mpq(1)
    for cell in addable_cells(U.shape):
        if cell == alpha:
            continue
        rho = params.content(cell[1] - cell[0])
        out = out * (y - rho)
        denom *= sigma - rho
    return out.scale(1 / denom)


def jm_idempotent(lam, T, params: Params) -> HeckeElement:
    """Primitive idempotent E_T by the inductive Jucys-Murphy rule."""
    lam = Partition.coerce(lam)
    T = StandardTableau.coerce(T)
    if T.shape != lam:
        raise ValueError(f"tableau {T} does not have shape {lam}")
    return _jm_idempotent(T, params)


def jm_product(k: int, m: int, params: Params) -> HeckeElement:
    out = HeckeElement.one(m, params)
    for j in range(1, k + 1):
        out = out * jm(j, m, params)
    return out


def longest_square_holds(k: int, m: int, params: Params,
                         exponent: Callable[[int], int] | None = None) -> dict[int, bool]:
    """Test T_{w_j}^2 == (r/s)^{exponent(j)} y_1...y_j for j = 1..k.

    The default exponent is C(j, 2), the one that actually holds; y_j carries
    a factor (s/r)^{j-1} relative to T_{j-1}...T_1 T_1...T_{j-1}.
    """
    if exponent is None:
        exponent = lambda j: j * (j - 1) // 2  # noqa: E731
    out = {}
    for j in range(1, k + 1):
        w = t_longest(j, m, params)
        out[j] = w * w == jm_product(j, m, params).scale(params.q ** exponent(j))
    return out


def relation_checks(m: int, params: Params) -> dict[str, bool]:
    """Defining relations, conjugation by T_{w_k}, T_{w_k}^2 and
    commutativity of the Jucys-Murphy elements, as element identities."""
    gens = [generator(i, m, params) for i in range(1, m)]
    one = HeckeElement.one(m, params)
    q = params.q
    res = {}
    res["H1 braid"] = all(
        gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1]
        for i in range(m - 2)
    )
    res["H2 far commutation"] = all(
        gens[i] * gens[j] == gens[j] * gens[i]
        for i in range(m - 1) for j in range(i + 2, m - 1)
    )
    res["H3 quadratic"] = all((g - one) * (g + q) == HeckeElement.zero(m, params) for g in gens)
    res["inverse"] = all(
        gens[i - 1] * gen_inverse(i, m, params) == one for i in range(1, m)
    )
    res["T_wk T_j = T_(k-j) T_wk"] = all(
        t_longest(k, m, params) * gens[j - 1] == gens[k - j - 1] * t_longest(k, m, params)
        for k in range(2, m + 1) for j in range(1, k)
    )
    res["T_wk^2 = (r/s)^C(k,2) y_1..y_k"] = all(longest_square_holds(m, m, params).values())
    ys = [jm(k, m, params) for k in range(1, m + 1)]
    res["JM commute"] = all(ys[i] * ys[j] == ys[j] * ys[i] for i in range(m) for j in range(i + 1, m))
    res["y_k T_l = T_l y_k"] = all(
        ys[k - 1] * gens[l - 1] == gens[l - 1] * ys[k - 1]
        for k in range(1, m + 1) for l in range(1, m) if l not in (k, k - 1)
    )
    res["T_w inverse"] = all(
        t_longest(k, m, params) * t_longest_inverse(k, m, params) == one for k in range(1, m + 1)
    )
    return res


def idempotent_family_checks(
    family: Mapping[tuple, HeckeElement], m: int, params: Params
) -> dict[str, bool]:
    """Idempotency, pairwise orthogonality and completeness of a family."""
    one = HeckeElement.one(m, params)
    elems = list(family.values())
    idem = all(e * e == e for e in elems)
    ortho = True
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i != j and not (a * b).is_zero():
                ortho = False
    total = HeckeElement.zero(m, params)
    for e in elems:
        total = total + e
    return {"idempotent": idem, "orthogonal": ortho, "complete": total == one}
