"""Exact scalars: rationals, the parameter pair (r, s), sparse multivariate
polynomials in u_1..u_m and fractions whose denominators stay factored into
linear binomials.

Variables are 1-based throughout (``u_1`` is variable index 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from gmpy2 import mpq

Rational = type(mpq(0))
Scalar = Union[int, "mpq"]


class ParamsError(ValueError):
    """The parameter pair fails the genericity gate."""


class NonzeroRemainder(ArithmeticError):
    """A synthetic division that was required to be exact left a remainder."""


class SingularPoint(ZeroDivisionError):
    """An evaluation point lies on a pole."""


class OutOfOrderSubstitution(ValueError):
    pass


def rational(value) -> mpq:
    """Parse ``"p/q"``, ``"p"``, an int, or an existing rational.

    Both the ASCII hyphen and the unicode minus sign are accepted.
    """
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not text:
            raise ValueError("empty rational")
        try:
            return mpq(text)
        except ValueError as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    return mpq(value)


def format_rational(x) -> str:
    return str(mpq(x))


@dataclass(frozen=True)
class Params:
    """The parameter pair (r, s).

    The gate requires r, s nonzero and r != +-s. For rationals this is
    enough to keep r/s away from every root of unity.
    """

    r: mpq = mpq(2)
    s: mpq = mpq(3)

    def __post_init__(self):
        r, s = rational(self.r), rational(self.s)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        if r == 0 or s == 0:
            raise ParamsError("parameters require r and s nonzero")
        if r == s or r == -s:
            raise ParamsError("parameters require r ≠ ±s")

    @classmethod
    def parse(cls, r: str | int = 2, s: str | int = 3) -> "Params":
        return cls(rational(r), rational(s))

    @property
    def q(self) -> mpq:
        """The ratio r/s appearing in the Hecke quadratic relation."""
        return self.r / self.s

    @property
    def ratio(self) -> mpq:
        """The ratio s/r; (r,s)-contents are its integer powers."""
        return self.s / self.r

    def content(self, exponent: int) -> mpq:
        return self.ratio ** exponent

    def __str__(self):
        return f"r={self.r}, s={self.s}"


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MultiPoly:
    """Sparse polynomial in u_1..u_arity with rational coefficients.

    ``terms`` maps exponent tuples of length ``arity`` to nonzero rationals.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple, Scalar] | None = None):
        self.arity = arity
        if terms:
            self.terms = {e: mpq(c) for e, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, arity, terms):
        p = cls.__new__(cls)
        p.arity = arity
        p.terms = terms
        return p

    @classmethod
    def constant(cls, arity: int, c: Scalar) -> "MultiPoly":
        return cls._raw(arity, {(0,) * arity: mpq(c)} if c else {})

    @classmethod
    def variable(cls, arity: int, var: int) -> "MultiPoly":
        e = [0] * arity
        e[var - 1] = 1
        return cls._raw(arity, {tuple(e): mpq(1)})

    @classmethod
    def linear(cls, arity: int, var: int, root) -> "MultiPoly":
        """u_var - root, where root is a scalar or a MultiPoly free of u_var."""
        p = cls.variable(arity, var)
        if isinstance(root, MultiPoly):
            return p - root
        return p - cls.constant(arity, root)

    def is_zero(self) -> bool:
        return not self.terms

    __bool__ = lambda self: bool(self.terms)  # noqa: E731

    def is_constant(self) -> bool:
        zero = (0,) * self.arity
        return all(e == zero for e in self.terms)

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.arity, mpq(0))

    def variables(self) -> set[int]:
        out = set()
        for e in self.terms:
            out.update(i + 1 for i, k in enumerate(e) if k)
        return out

    def degree_in(self, var: int) -> int:
        return max((e[var - 1] for e in self.terms), default=-1)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        return MultiPoly.constant(self.arity, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = mpq(other)
            if not c:
                return MultiPoly._raw(self.arity, {})
            return MultiPoly._raw(self.arity, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._raw(self.arity, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(self.arity, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def substitute(self, var: int, value) -> "MultiPoly":
        """Set u_var := value (a scalar)."""
        value = mpq(value)
        k = var - 1
        out: dict = {}
        for e, c in self.terms.items():
            d = e[k]
            if d:
                c = c * value ** d
                e = e[:k] + (0,) + e[k + 1:]
            v = out.get(e)
            out[e] = c if v is None else v + c
        return MultiPoly._raw(self.arity, {e: c for e, c in out.items() if c})

    def evaluate(self, point: Mapping[int, Scalar] | Iterable[Scalar]) -> mpq:
        """Evaluate at a full assignment (mapping var -> value or sequence u_1..)."""
        if not isinstance(point, Mapping):
            point = {i + 1: v for i, v in enumerate(point)}
        total = mpq(0)
        for e, c in self.terms.items():
            t = c
            for i, d in enumerate(e):
                if d:
                    t *= mpq(point[i + 1]) ** d
            total += t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"u{i + 1}" + (f"^{d}" if d > 1 else "") for i, d in enumerate(e) if d
            )
            c = self.terms[e]
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def _split_by(p: MultiPoly, var: int) -> dict[int, dict]:
    """Group the terms of p by their exponent of u_var."""
    k = var - 1
    groups: dict[int, dict] = {}
    for e, c in p.terms.items():
        groups.setdefault(e[k], {})[e[:k] + (0,) + e[k + 1:]] = c
    return groups


def _divide_by_binomial(p: MultiPoly, var: int, root: MultiPoly):
    """Synthetic division of p by (u_var - root), root free of u_var.

    Returns (quotient, remainder) with remainder free of u_var.
    """
    groups = _split_by(p, var)
    if not groups:
        return p, p
    deg = max(groups)
    zero = MultiPoly._raw(p.arity, {})
    # shifting by u_var^d is done by bumping the exponent at var-1
    k = var - 1
    quotient_terms: dict = {}
    carry = zero
    for d in range(deg, 0, -1):
        coeff = MultiPoly._raw(p.arity, dict(groups.get(d, {}))) + carry
        # quotient coefficient of u_var^(d-1)
        for e, c in coeff.terms.items():
            quotient_terms[e[:k] + (d - 1,) + e[k + 1:]] = c
        carry = coeff * root
    remainder = MultiPoly._raw(p.arity, dict(groups.get(0, {}))) + carry
    return MultiPoly._raw(p.arity, quotient_terms), remainder


def divide_linear(p: MultiPoly, var: int, root) -> MultiPoly:
    """Exact quotient of p by (u_var - root).

    Raises NonzeroRemainder when the division is not exact.
    """
    if not isinstance(root, MultiPoly):
        root = MultiPoly.constant(p.arity, root)
    if var in root.variables():
        raise ValueError("root must not involve the division variable")
    q, rem = _divide_by_binomial(p, var, root)
    if rem:
        raise NonzeroRemainder(f"u{var} - ({root!r}) does not divide {p!r}")
    return q


# ---------------------------------------------------------------------------
# factored fractions
#
# A denominator factor is one of
#   ("v", b, a)  meaning  u_b - u_a   with a < b
#   ("c", b, c)  meaning  u_b - c     with c rational


def factor_vars(f) -> tuple[int, ...]:
    return (f[1], f[2]) if f[0] == "v" else (f[1],)


@lru_cache(maxsize=None)
def _factor_poly(arity: int, f) -> MultiPoly:
    if f[0] == "v":
        return MultiPoly.linear(arity, f[1], MultiPoly.variable(arity, f[2]))
    return MultiPoly.linear(arity, f[1], f[2])


def _factor_power(arity, f, k):
    p = MultiPoly.constant(arity, 1)
    base = _factor_poly(arity, f)
    for _ in range(k):
        p = p * base
    return p


class FactoredFraction:
    """num / prod(factor ** mult) over variables u_1..u_arity.

    Any overall rational constant of the denominator is folded into the
    numerator, so the stored denominator is monic.
    """

    __slots__ = ("arity", "num", "den")

    def __init__(self, num: MultiPoly, den: Mapping | None = None):
        self.arity = num.arity
        self.num = num
        self.den = {f: k for f, k in (den or {}).items() if k}

    # constructors -----------------------------------------------------
    @classmethod
    def constant(cls, arity: int, c: Scalar) -> "FactoredFraction":
        return cls(MultiPoly.constant(arity, c))

    @classmethod
    def variable(cls, arity: int, var: int) -> "FactoredFraction":
        return cls(MultiPoly.variable(arity, var))

    @classmethod
    def inverse_binomial(cls, arity: int, b, a) -> "FactoredFraction":
        """1 / (b - a), where each of a, b is a variable index or a rational.

        Variable indices are passed as ``("u", k)`` tuples.
        """
        one = MultiPoly.constant(arity, 1)
        bv, av = _is_var(b), _is_var(a)
        if bv and av:
            ib, ia = b[1], a[1]
            if ib == ia:
                raise SingularPoint("coincident variables")
            if ia < ib:
                return cls(one, {("v", ib, ia): 1})
            return cls(-one, {("v", ia, ib): 1})
        if bv:
            return cls(one, {("c", b[1], mpq(a)): 1})
        if av:
            return cls(-one, {("c", a[1], mpq(b)): 1})
        diff = mpq(b) - mpq(a)
        if not diff:
            raise SingularPoint(f"pole at {b} = {a}")
        return cls.constant(arity, 1 / diff)

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def constant_value(self) -> mpq:
        if self.den:
            raise ValueError("fraction still has a denominator")
        return self.num.constant_value()

    def variables(self) -> set[int]:
        out = self.num.variables()
        for f in self.den:
            out.update(factor_vars(f))
        return out

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "FactoredFraction":
        if isinstance(other, FactoredFraction):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, MultiPoly):
            return FactoredFraction(other)
        return FactoredFraction.constant(self.arity, other)

    def __add__(self, other):
        if not isinstance(other, FactoredFraction):
            if isinstance(other, MultiPoly):
                other = FactoredFraction(other)
            else:
                if not other:
                    return self
                return FactoredFraction(
                    self.num + _den_poly(self.arity, self.den) * mpq(other), self.den
                )
        return frac_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return FactoredFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (FactoredFraction, MultiPoly)):
            c = mpq(other)
            if not c:
                return FactoredFraction(MultiPoly._raw(self.arity, {}))
            return FactoredFraction(self.num * c, self.den)
        return frac_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (FactoredFraction, MultiPoly, int, Rational)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def evaluate(self, point) -> mpq:
        if not isinstance(point, Mapping):
            point = {i + 1: v for i, v in enumerate(point)}
        d = mpq(1)
        for f, k in self.den.items():
            d *= _factor_poly(self.arity, f).evaluate(point) ** k
        if not d:
            raise SingularPoint("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    def normalize(self) -> "FactoredFraction":
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.num
        den = dict(self.den)
        for f in list(den):
            while den[f]:
                root = (
                    MultiPoly.variable(self.arity, f[2]) if f[0] == "v"
                    else MultiPoly.constant(self.arity, f[2])
                )
                q, rem = _divide_by_binomial(num, f[1], root)
                if rem:
                    break
                num = q
                den[f] -= 1
        return FactoredFraction(num, den)

    def __repr__(self):
        if not self.den:
            return f"({self.num!r})"
        dens = []
        for f, k in sorted(self.den.items(), key=lambda t: repr(t[0])):
            s = f"(u{f[1]} - u{f[2]})" if f[0] == "v" else f"(u{f[1]} - {f[2]})"
            dens.append(s + (f"^{k}" if k > 1 else ""))
        return f"({self.num!r}) / {'*'.join(dens)}"


def _is_var(x) -> bool:
    return isinstance(x, tuple) and len(x) == 2 and x[0] == "u"


def _den_poly(arity, den) -> MultiPoly:
    p = MultiPoly.constant(arity, 1)
    for f, k in den.items():
        p = p * _factor_power(arity, f, k)
    return p


def frac_add(a: FactoredFraction, b: FactoredFraction) -> FactoredFraction:
    """Sum over the multiset lcm of the two denominators."""
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    if a.num.is_zero():
        return b
    if b.num.is_zero():
        return a
    if a.den == b.den:
        return FactoredFraction(a.num + b.num, a.den)
    lcm = dict(a.den)
    for f, k in b.den.items():
        if lcm.get(f, 0) < k:
            lcm[f] = k
    na, nb = a.num, b.num
    for f, k in lcm.items():
        da, db = k - a.den.get(f, 0), k - b.den.get(f, 0)
        if da:
            na = na * _factor_power(a.arity, f, da)
        if db:
            nb = nb * _factor_power(a.arity, f, db)
    return FactoredFraction(na + nb, lcm)


def frac_mul(a: FactoredFraction, b: FactoredFraction) -> FactoredFraction:
    """Product; numerators multiply and denominator multisets merge."""
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    num = a.num * b.num
    if num.is_zero():
        return FactoredFraction(num)
    den = dict(a.den)
    for f, k in b.den.items():
        den[f] = den.get(f, 0) + k
    return FactoredFraction(num, den)


def substitute_consecutive(F: FactoredFraction, var: int, value) -> FactoredFraction:
    """Set u_var := value, cancelling poles at value by exact division.

    Every variable of lower index must already be eliminated. A denominator
    factor (u_var - value) is removed together with one exact division of the
    numerator; a leftover remainder means the point is genuinely singular.
    """
    value = mpq(value)
    for f in F.den:
        if (f[0] == "v" and f[2] < var) or f[1] < var:
            raise OutOfOrderSubstitution(
                f"u{var} substituted while lower variables remain in the denominator"
            )
    if any(v < var for v in F.num.variables()):
        raise OutOfOrderSubstitution(
            f"u{var} substituted while lower variables remain in the numerator"
        )
    num = F.num
    den: dict = {}
    scale = mpq(1)
    for f, k in F.den.items():
        if f[0] == "c" and f[1] == var:
            c = f[2]
            if c == value:
                for _ in range(k):
                    num = divide_linear(num, var, value)
            else:
                scale *= (value - c) ** k
        elif f[0] == "v" and f[2] == var:
            g = ("c", f[1], value)
            den[g] = den.get(g, 0) + k
        else:
            den[f] = den.get(f, 0) + k
    num = num.substitute(var, value)
    if scale != 1:
        num = num * (1 / scale)
    return FactoredFraction(num, den)
