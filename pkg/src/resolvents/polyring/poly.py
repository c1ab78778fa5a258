"""Sparse multivariate polynomials over the rationals.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; a Fraction
with denominator 1 is always collapsed back to ``int`` so integer-heavy
computations stay on the fast path.  Variables are global names and every
polynomial carries exactly the variables it uses, sorted by :func:`var_key`.

Terms are in graded lexicographic order.  For the lexicographic tie-break
the main variables ``x, y, X, Y`` rank highest, then the remaining variables
in natural order, so resolvents print the familiar way, e.g.
``Y^4 - 4*Delta*Y - 12*a*Delta`` and ``x1^2 - x2^2``.
"""

from __future__ import annotations

import heapq
import json
import re
from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational
from operator import add
from typing import Callable, Iterable, Mapping, Union

from ..errors import MissingBinding, NotDivisible

Coeff = Union[int, Fraction]
Exps = tuple

_SPLIT_DIGITS = re.compile(r"^(.*?)(\d*)$")


def var_key(name: str):
    """Natural, case-insensitive sort key: ``a0 < a1 < b < Delta < x < x2 < x10 < Y``."""
    stem, digits = _SPLIT_DIGITS.match(name).groups()
    return (stem.casefold(), int(digits) if digits else -1, name)


def as_rational(c) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return as_rational(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return as_rational(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Coeff, b: Coeff) -> Coeff:
    if type(a) is int and type(b) is int:
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


MAIN_VARIABLES = ("x", "y", "X", "Y")


@lru_cache(maxsize=4096)
def _priority(vars: tuple) -> tuple:
    def rank(i):
        v = vars[i]
        return (MAIN_VARIABLES.index(v), ()) if v in MAIN_VARIABLES else (len(MAIN_VARIABLES), var_key(v))

    return tuple(sorted(range(len(vars)), key=rank))


def term_order_key(e: Exps, vars: tuple):
    """Ascending sort with this key lists terms from leading to trailing."""
    return (-sum(e), tuple(-e[i] for i in _priority(vars)))


class MultiPoly:
    """Immutable sparse polynomial ``{exponent tuple: coefficient}`` over ``vars``."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Coeff] | None = None, vars: Iterable[str] = ()):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars}")
        clean: dict = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(vars):
                raise ValueError(f"exponent vector {e} does not match variables {vars}")
            if any(v < 0 for v in e):
                raise ValueError(f"negative exponent in {e}")
            c = as_rational(c)
            if c:
                clean[e] = _norm(clean.get(e, 0) + c)
        vars, clean = _canonical(vars, {e: c for e, c in clean.items() if c})
        self.vars = vars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple, terms: dict, trim: bool = True) -> "MultiPoly":
        """Build from already-normalized data; ``vars`` must be sorted."""
        obj = object.__new__(cls)
        if trim:
            vars, terms = _trim(vars, terms)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors ---------------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = as_rational(c)
        return cls._raw((), {(): c} if c else {}, trim=False)

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw((name,), {(1,): 1}, trim=False)

    @classmethod
    def monomial(cls, coeff, powers: Mapping[str, int]) -> "MultiPoly":
        names = tuple(sorted(powers, key=var_key))
        return cls({tuple(powers[n] for n in names): coeff}, names)

    @classmethod
    def from_terms(cls, items: Iterable[tuple]) -> "MultiPoly":
        """Sum of ``(coeff, {var: exp})`` pairs."""
        acc: dict = {}
        for coeff, powers in items:
            key = tuple(sorted((k, v) for k, v in powers.items() if v))
            acc[key] = acc.get(key, 0) + as_rational(coeff)
        names = tuple(sorted({k for key in acc for k, _ in key}, key=var_key))
        pos = {n: i for i, n in enumerate(names)}
        terms = {}
        for key, c in acc.items():
            e = [0] * len(names)
            for k, v in key:
                e[pos[k]] = v
            terms[tuple(e)] = c
        return cls(terms, names)

    @classmethod
    def from_coeffs(cls, var: str, coeffs: Mapping[int, "MultiPoly"]) -> "MultiPoly":
        """Inverse of :meth:`coeffs_in`: ``sum(coeffs[k] * var**k)``."""
        x = cls.var(var)
        out = cls.const(0)
        for k, c in coeffs.items():
            out = out + _coerce(c) * x ** k
        return out

    # basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Coeff:
        if self.vars:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), 0)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var``, or total degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        vars = self.vars
        return sorted(self.terms.items(), key=lambda t: term_order_key(t[0], vars))

    def leading_term(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = min(self.terms, key=lambda t: term_order_key(t, self.vars))
        return e, self.terms[e]

    def coeffs_in(self, var: str) -> dict:
        """View as a univariate polynomial in ``var``: ``{power: coefficient poly}``."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        groups: dict = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly._raw(rest, t) for k, t in groups.items()}

    def content_denominator(self) -> int:
        den = 1
        for c in self.terms.values():
            if type(c) is Fraction:
                den = lcm(den, c.denominator)
        return den

    # arithmetic -----------------------------------------------------------
    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()}, trim=False)

    def __pos__(self) -> "MultiPoly":
        return self

    def __add__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vars, a, b = _align(self, other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return MultiPoly._raw(vars, out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return MultiPoly._raw((), {}, trim=False)
        if not other.vars:
            k = other.terms[()]
            return MultiPoly._raw(self.vars, {e: _norm(c * k) for e, c in self.terms.items()}, trim=False)
        if not self.vars:
            return other * self
        vars, a, b = _align(self, other)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        out = {e: _norm(c) for e, c in out.items() if c}
        # a product of nonzero polynomials keeps every variable
        return MultiPoly._raw(vars, out, trim=False)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_constant():
            k = other.constant_value()
            if not k:
                raise ZeroDivisionError("division by zero polynomial")
            return MultiPoly._raw(self.vars, {e: _div(c, k) for e, c in self.terms.items()}, trim=False)
        return exact_div(self, other)

    def scale(self, k) -> "MultiPoly":
        return self * MultiPoly.const(k)

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # structural operations ------------------------------------------------
    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables.  Renaming two variables onto one name merges them."""
        new_names = [mapping.get(v, v) for v in self.vars]
        if len(set(new_names)) == len(new_names):
            order = sorted(range(len(new_names)), key=lambda i: var_key(new_names[i]))
            vars = tuple(new_names[i] for i in order)
            if order == list(range(len(order))):
                return MultiPoly._raw(vars, dict(self.terms), trim=False)
            return MultiPoly._raw(vars, {tuple(e[i] for i in order): c for e, c in self.terms.items()}, trim=False)
        return MultiPoly.from_terms(
            (c, _merge_powers(new_names, e)) for e, c in self.terms.items()
        )

    def substitute(self, bindings: Mapping[str, object]) -> "MultiPoly":
        """Simultaneous substitution ``var -> polynomial`` (or rational)."""
        bound = {v: _coerce(p) for v, p in bindings.items() if v in self.vars}
        if not bound:
            return self
        if all(_is_monomial(p) for p in bound.values()):
            return self._substitute_monomial(bound)
        keep = [i for i, v in enumerate(self.vars) if v not in bound]
        keep_vars = tuple(self.vars[i] for i in keep)
        slots = [(i, bound[v]) for i, v in enumerate(self.vars) if v in bound]
        powers: dict = {}

        def power(j, p, k):
            key = (j, k)
            if key not in powers:
                powers[key] = p ** k
            return powers[key]

        # group by the bound exponents so each distinct product is formed once
        groups: dict = {}
        for e, c in self.terms.items():
            bkey = tuple(e[i] for i, _ in slots)
            groups.setdefault(bkey, {})[tuple(e[i] for i in keep)] = c
        out = MultiPoly.const(0)
        for bkey, rest in groups.items():
            factor = MultiPoly.const(1)
            for (j, p), k in zip(slots, bkey):
                if k:
                    factor = factor * power(j, p, k)
            out = out + MultiPoly._raw(keep_vars, rest) * factor
        return out

    def _substitute_monomial(self, bound: dict) -> "MultiPoly":
        # every binding is c * monomial (or constant): remap exponents directly
        images = []
        names: set = set(v for v in self.vars if v not in bound)
        for v in self.vars:
            if v in bound:
                p = bound[v]
                if not p.terms:
                    images.append(None)
                    continue
                (e, c), = p.terms.items()
                images.append((c, dict(zip(p.vars, e))))
                names.update(p.vars)
            else:
                images.append((1, {v: 1}))
        vars = tuple(sorted(names, key=var_key))
        pos = {n: i for i, n in enumerate(vars)}
        out: dict = {}
        for e, c in self.terms.items():
            new = [0] * len(vars)
            coeff = c
            dead = False
            for k, img in zip(e, images):
                if not k:
                    continue
                if img is None:
                    dead = True
                    break
                ic, ipow = img
                if ic != 1:
                    coeff = coeff * ic ** k
                for n, p in ipow.items():
                    new[pos[n]] += p * k
            if dead:
                continue
            key = tuple(new)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = _norm(s)
            else:
                out.pop(key, None)
        return MultiPoly._raw(vars, out)

    def evaluate(self, point: Mapping[str, object]) -> Coeff:
        """Exact value at a rational point binding every variable."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise MissingBinding(f"no value for {missing}")
        vals = [as_rational(point[v]) for v in self.vars]
        total: Coeff = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x ** k
            total = total + t
        return _norm(total) if type(total) is Fraction else total

    def evaluate_with(self, point: Mapping[str, object], coerce: Callable = lambda c: c):
        """Evaluate with arbitrary numeric values (e.g. mpmath numbers)."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise MissingBinding(f"no value for {missing}")
        vals = [point[v] for v in self.vars]
        cache: dict = {}
        total = coerce(0)
        for e, c in self.terms.items():
            t = coerce(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = vals[i] ** k
                    t = t * cache[key]
            total = total + t
        return total

    def diff(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly.const(0)
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly._raw(self.vars, out)

    def map_coefficients(self, fn: Callable) -> "MultiPoly":
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, self.vars)

    # text and json --------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exps": list(e), "num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls(
            {tuple(t["exps"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]},
            data["vars"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


# ---------------------------------------------------------------------------
# helpers


def _coerce(x):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction, Rational)) and not isinstance(x, float):
        return MultiPoly.const(x)
    return NotImplemented


def _is_monomial(p: MultiPoly) -> bool:
    return len(p.terms) <= 1


def _merge_powers(names, e) -> dict:
    d: dict = {}
    for n, k in zip(names, e):
        if k:
            d[n] = d.get(n, 0) + k
    return d


def _trim(vars: tuple, terms: dict):
    if not vars:
        return vars, terms
    n = len(vars)
    used = [False] * n
    remaining = n
    for e in terms:
        for i in range(n):
            if e[i] and not used[i]:
                used[i] = True
                remaining -= 1
        if not remaining:
            return vars, terms
    keep = [i for i in range(n) if used[i]]
    return tuple(vars[i] for i in keep), {tuple(e[i] for i in keep): c for e, c in terms.items()}


def _canonical(vars: tuple, terms: dict):
    order = sorted(range(len(vars)), key=lambda i: var_key(vars[i]))
    if order != list(range(len(vars))):
        vars = tuple(vars[i] for i in order)
        terms = {tuple(e[i] for i in order): c for e, c in terms.items()}
    return _trim(vars, terms)


def _embed(p: MultiPoly, vars: tuple) -> dict:
    if p.vars == vars:
        return p.terms
    pos = [vars.index(v) for v in p.vars]
    n = len(vars)
    out = {}
    for e, c in p.terms.items():
        new = [0] * n
        for j, i in enumerate(pos):
            new[i] = e[j]
        out[tuple(new)] = c
    return out


def _align(p: MultiPoly, q: MultiPoly):
    if p.vars == q.vars:
        return p.vars, p.terms, q.terms
    vars = tuple(sorted(set(p.vars) | set(q.vars), key=var_key))
    return vars, _embed(p, vars), _embed(q, vars)


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Quotient ``p / q`` when ``q`` divides ``p``; raises :class:`NotDivisible` otherwise."""
    p, q = _coerce(p), _coerce(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return MultiPoly.const(0)
    vars, a, b = _align(p, q)
    prio = _priority(vars)

    def key(e):
        return (-sum(e), tuple(-e[i] for i in prio))

    lead_e = min(b, key=key)
    lead_c = b[lead_e]
    rem = dict(a)
    heap = [(key(e), e) for e in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        _, e = heapq.heappop(heap)
        if e not in rem:
            continue
        shift = tuple(x - y for x, y in zip(e, lead_e))
        if any(s < 0 for s in shift):
            raise NotDivisible(f"{format_poly(q)} does not divide {format_poly(p)}")
        c = _div(rem[e], lead_c)
        quot[shift] = c
        for eb, cb in b.items():
            t = tuple(map(add, eb, shift))
            s = rem.get(t, 0) - c * cb
            if s:
                if t not in rem:
                    heapq.heappush(heap, (key(t), t))
                rem[t] = _norm(s)
            else:
                rem.pop(t, None)
    return MultiPoly._raw(vars, quot)


# ---------------------------------------------------------------------------
# formatting


def _format_coeff(c: Coeff) -> str:
    if type(c) is int:
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(vars, e) -> str:
    parts = []
    for v, k in zip(vars, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    """Deterministic text form; :func:`parse_poly` inverts it exactly."""
    if not p.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(p.vars, e)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def sum_polys(polys: Iterable[MultiPoly]) -> MultiPoly:
    """Sum many polynomials with a single accumulator."""
    acc: dict = {}
    for p in polys:
        p = _coerce(p)
        for e, c in p.terms.items():
            key = tuple(sorted((v, k) for v, k in zip(p.vars, e) if k))
            acc[key] = acc.get(key, 0) + c
    return MultiPoly.from_terms((c, dict(key)) for key, c in acc.items() if c)
