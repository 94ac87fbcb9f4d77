"""Exact rationals and truncated Puiseux series.

Rationals are :class:`fractions.Fraction`.  A :class:`PuiseuxSeries` is a
finite sum ``sum c_e t^(e/k)`` over the rationals, either *exact* (no tail)
or known only modulo ``t^T`` for a rational truncation ``T``.
"""

from fractions import Fraction
from math import ceil, gcd, inf

from .errors import DivisionByZero, InputError, PrecisionLoss

INF = inf


def as_fraction(x):
    """Coerce int/str/Fraction to Fraction; strings use the ``"p/q"`` form."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {x!r}") from exc
    if isinstance(x, float):
        raise InputError("floats are not accepted in exact contexts")
    raise InputError(f"cannot interpret {x!r} as a rational")


def fraction_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _lcm(a, b):
    return a * b // gcd(a, b)


class PuiseuxSeries:
    """Truncated Puiseux series with rational coefficients.

    ``terms`` maps an integer ``e`` to the coefficient of ``t^(e/k)``.
    ``trunc`` is ``None`` for an exact series, otherwise a Fraction ``T``;
    every stored exponent is then ``< T``.  Values are immutable.
    """

    __slots__ = ("k", "_terms", "trunc", "_hash")

    def __init__(self, k=1, terms=None, trunc=None):
        k = int(k)
        if k <= 0:
            raise InputError("ramification must be positive")
        if trunc is not None:
            trunc = as_fraction(trunc)
        items = {}
        for e, c in (terms or {}).items():
            c = as_fraction(c)
            e = int(e)
            if c == 0:
                continue
            if trunc is not None and Fraction(e, k) >= trunc:
                continue
            items[e] = items.get(e, 0) + c
        items = {e: c for e, c in items.items() if c != 0}
        g = k
        for e in items:
            g = gcd(g, e)
        if g > 1:
            k //= g
            items = {e // g: c for e, c in items.items()}
        self.k = k
        self._terms = tuple(sorted(items.items()))
        self.trunc = trunc
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls(1, {0: 1})

    @classmethod
    def const(cls, c, trunc=None):
        return cls(1, {0: c}, trunc)

    @classmethod
    def monomial(cls, c, exponent, trunc=None):
        q = as_fraction(exponent)
        return cls(q.denominator, {q.numerator: c}, trunc)

    @classmethod
    def from_exponents(cls, mapping, trunc=None):
        """Build from ``{rational exponent: coefficient}``."""
        mapping = {as_fraction(e): as_fraction(c) for e, c in mapping.items()}
        k = 1
        for e in mapping:
            k = _lcm(k, e.denominator)
        return cls(k, {int(e * k): c for e, c in mapping.items()}, trunc)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, (str, dict)):
            return cls.from_json(x)
        return cls.const(as_fraction(x))

    # -- basic accessors ----------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """``(Fraction exponent, coefficient)`` pairs in increasing order."""
        return [(Fraction(e, self.k), c) for e, c in self._terms]

    @property
    def is_exact(self):
        return self.trunc is None

    @property
    def is_zero(self):
        """True only for the exact zero series."""
        return not self._terms and self.trunc is None

    def has_terms(self):
        return bool(self._terms)

    def ord(self):
        if self._terms:
            return Fraction(self._terms[0][0], self.k)
        if self.trunc is None:
            return INF
        raise PrecisionLoss(
            f"series is zero modulo t^{fraction_str(self.trunc)}; order unknown",
            bound=self.trunc,
        )

    def ord_lower_bound(self):
        """Least stored exponent, else the truncation, else infinity."""
        if self._terms:
            return Fraction(self._terms[0][0], self.k)
        return INF if self.trunc is None else self.trunc

    def leading_coefficient(self):
        """Residue of ``t^(-ord) f``: the coefficient at the order."""
        self.ord()
        if not self._terms:
            return Fraction(0)
        return self._terms[0][1]

    def coefficient(self, exponent):
        q = as_fraction(exponent)
        e = q * self.k
        if e.denominator != 1:
            return Fraction(0)
        return dict(self._terms).get(int(e), Fraction(0))

    # -- arithmetic ---------------------------------------------------

    def _aligned(self, other):
        k = _lcm(self.k, other.k)
        a = {e * (k // self.k): c for e, c in self._terms}
        b = {e * (k // other.k): c for e, c in other._terms}
        return k, a, b

    def _add(self, other, sign):
        k, a, b = self._aligned(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) + sign * c
        return PuiseuxSeries(k, a, _min_trunc(self.trunc, other.trunc))

    def __add__(self, other):
        try:
            other = PuiseuxSeries.coerce(other)
        except InputError:
            return NotImplemented
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = PuiseuxSeries.coerce(other)
        except InputError:
            return NotImplemented
        return self._add(other, -1)

    def __rsub__(self, other):
        return PuiseuxSeries.coerce(other) - self

    def __neg__(self):
        return PuiseuxSeries(self.k, {e: -c for e, c in self._terms}, self.trunc)

    def __mul__(self, other):
        try:
            other = PuiseuxSeries.coerce(other)
        except InputError:
            return NotImplemented
        k, a, b = self._aligned(other)
        bound = min(_plus(self.trunc, other.ord_lower_bound()),
                    _plus(other.trunc, self.ord_lower_bound()))
        trunc = None if bound == INF else Fraction(bound)
        prod = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                if trunc is not None and Fraction(e, k) >= trunc:
                    continue
                prod[e] = prod.get(e, 0) + ca * cb
        return PuiseuxSeries(k, prod, trunc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return NotImplemented
        c = as_fraction(other)
        if c == 0:
            raise DivisionByZero("division by zero scalar")
        return PuiseuxSeries(self.k, {e: v / c for e, v in self._terms}, self.trunc)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = PuiseuxSeries.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exponent):
        """Multiply by ``t^exponent``."""
        q = as_fraction(exponent)
        k = _lcm(self.k, q.denominator)
        s = int(q * k)
        terms = {e * (k // self.k) + s: c for e, c in self._terms}
        trunc = None if self.trunc is None else self.trunc + q
        return PuiseuxSeries(k, terms, trunc)

    def truncate(self, trunc):
        """Forget everything at exponent ``>= trunc`` (never loosens)."""
        trunc = _min_trunc(self.trunc, as_fraction(trunc))
        return PuiseuxSeries(self.k, dict(self._terms), trunc)

    def inverse(self, target):
        """``g`` with ``self * g == 1`` modulo ``t^target``."""
        target = as_fraction(target)
        if self.is_zero:
            raise DivisionByZero("inverse of exact zero series")
        q = self.ord()
        if not self._terms:
            raise PrecisionLoss("cannot invert a series of unknown order", self.trunc)
        c0 = self._terms[0][1]
        if len(self._terms) == 1 and self.trunc is None:
            return PuiseuxSeries.monomial(1 / c0, -q)
        if self.trunc is not None and self.trunc - q < target:
            raise PrecisionLoss(
                f"relative precision {fraction_str(self.trunc - q)} cannot support "
                f"target {fraction_str(target)}",
                bound=self.trunc,
            )
        k = self.k
        e0 = self._terms[0][0]
        unit = {e - e0: c / c0 for e, c in self._terms}
        n = max(0, ceil(target * k))
        tail = [(e, c) for e, c in sorted(unit.items()) if 0 < e < n]
        g = [Fraction(0)] * n
        if n:
            g[0] = Fraction(1)
        for i in range(1, n):
            acc = Fraction(0)
            for e, c in tail:
                if e > i:
                    break
                acc += c * g[i - e]
            g[i] = -acc
        terms = {i - e0: v / c0 for i, v in enumerate(g) if v}
        return PuiseuxSeries(k, terms, target - q)

    # -- numerics -----------------------------------------------------

    def eval(self, t):
        """Sum of stored terms at real ``t > 0`` (principal real powers)."""
        t = float(t)
        if t <= 0:
            raise InputError("numeric evaluation needs t > 0")
        total = 0.0
        for e, c in self._terms:
            total += float(c) * t ** (e / self.k)
        return complex(total)

    def error_bound(self, t):
        """Magnitude ``t^T`` of the unknown tail (0 for exact series)."""
        if self.trunc is None:
            return 0.0
        return float(t) ** float(self.trunc)

    # -- comparison / display ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxSeries.const(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (self.k, self._terms, self.trunc) == (other.k, other._terms, other.trunc)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self._terms, self.trunc))
        return self._hash

    def __repr__(self):
        parts = []
        for e, c in self._terms:
            q = Fraction(e, self.k)
            if q == 0:
                parts.append(fraction_str(c))
                continue
            mono = "t" if q == 1 else f"t^{fraction_str(q)}" if q.denominator == 1 and q > 0 \
                else f"t^({fraction_str(q)})"
            parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{fraction_str(c)}*{mono}")
        if self.trunc is not None:
            parts.append(f"O(t^{fraction_str(self.trunc)})")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    # -- JSON -----------------------------------------------------------

    def to_json(self):
        return {
            "k": self.k,
            "terms": [[e, fraction_str(c)] for e, c in self._terms],
            "trunc": "exact" if self.trunc is None else fraction_str(self.trunc),
        }

    @classmethod
    def parse(cls, text):
        """Exact series from text such as ``"t + 1"`` or ``"2*t^(3/2) - t^-1"``."""
        import sympy

        t = sympy.Symbol("t", positive=True)
        try:
            expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"t": t}))
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise InputError(f"cannot parse series {text!r}") from exc
        mapping = {}
        for term in sympy.Add.make_args(expr):
            coeff, rest = term.as_coeff_Mul()
            if rest == 1:
                e = sympy.Integer(0)
            elif rest == t:
                e = sympy.Integer(1)
            elif rest.is_Pow and rest.base == t and rest.exp.is_Rational:
                e = rest.exp
            else:
                raise InputError(f"not a finite Puiseux sum in t: {text!r}")
            if not coeff.is_Rational:
                raise InputError(f"non-rational coefficient in {text!r}")
            q = Fraction(int(e.p), int(e.q))
            mapping[q] = mapping.get(q, 0) + Fraction(int(coeff.p), int(coeff.q))
        return cls.from_exponents(mapping)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, int):
            return cls.const(obj)
        if isinstance(obj, str):
            if "t" in obj:
                return cls.parse(obj)
            return cls.const(as_fraction(obj))
        if not isinstance(obj, dict) or "terms" not in obj:
            raise InputError(f"bad series object {obj!r}")
        trunc = obj.get("trunc", "exact")
        trunc = None if trunc == "exact" else as_fraction(trunc)
        terms = {}
        for pair in obj["terms"]:
            e, c = pair
            if not isinstance(e, int):
                raise InputError("series exponents must be integers (units of 1/k)")
            terms[e] = terms.get(e, 0) + as_fraction(c)
        return cls(obj.get("k", 1), terms, trunc)


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _plus(trunc, bound):
    if trunc is None or bound == INF:
        return INF
    return trunc + bound


def series(mapping, trunc=None):
    """Shorthand: ``series({0: 1, "3/2": 2})`` is ``1 + 2 t^(3/2)``."""
    return PuiseuxSeries.from_exponents(mapping, trunc)


T = PuiseuxSeries.monomial(1, 1)


def ps_ord(f):
    return f.ord()


def ps_combine(op, a, b):
    a, b = PuiseuxSeries.coerce(a), PuiseuxSeries.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InputError(f"unknown series operation {op!r}")


def ps_inverse(f, target_truncation):
    return f.inverse(target_truncation)


def ps_eval_numeric(f, t):
    return f.eval(t)
