"""Sparse multivariate (Laurent) polynomials, term orders and Buchberger.

Every order here follows the *minimum convention*: the initial (leading)
term of ``f`` is its order-minimal term.  An order is keyed by a tuple
function; ``alpha`` precedes ``beta`` when ``key(alpha) < key(beta)``.
"""

from fractions import Fraction
from itertools import combinations

from .errors import InputError, OrderNotWellFounded, ZeroPolynomial
from .exact import PuiseuxSeries, as_fraction, fraction_str


def _is_zero(c):
    if isinstance(c, PuiseuxSeries):
        return c.is_zero
    return c == 0


def default_names(n):
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


class Polynomial:
    """``terms`` maps exponent tuples to nonzero coefficients.

    Coefficients are Fractions or PuiseuxSeries.  In polynomial mode
    (``laurent=False``) negative exponents are rejected.
    """

    __slots__ = ("n", "terms", "names", "laurent")

    def __init__(self, terms, n=None, names=None, laurent=False):
        clean = {}
        for alpha, c in dict(terms).items():
            alpha = tuple(int(a) for a in alpha)
            if not isinstance(c, PuiseuxSeries):
                c = as_fraction(c)
            if _is_zero(c):
                continue
            if alpha in clean:
                c = clean[alpha] + c
                if _is_zero(c):
                    del clean[alpha]
                    continue
            clean[alpha] = c
        if n is None:
            if names is not None:
                n = len(names)
            elif clean:
                n = len(next(iter(clean)))
            else:
                raise InputError("cannot infer number of variables of the zero polynomial")
        for alpha in clean:
            if len(alpha) != n:
                raise InputError(f"exponent {alpha} has wrong length (expected {n})")
            if not laurent and min(alpha, default=0) < 0:
                raise InputError("negative exponent in polynomial mode")
        self.n = n
        self.terms = clean
        self.names = tuple(names) if names is not None else default_names(n)
        self.laurent = laurent

    # -- constructors ---------------------------------------------------

    def _like(self, terms, laurent=None):
        return Polynomial(terms, self.n, self.names, self.laurent if laurent is None else laurent)

    @classmethod
    def zero(cls, n, names=None):
        return cls({}, n, names)

    @classmethod
    def constant(cls, c, n, names=None):
        return cls({(0,) * n: c}, n, names)

    @classmethod
    def variable(cls, i, n, names=None):
        alpha = [0] * n
        alpha[i] = 1
        return cls({tuple(alpha): 1}, n, names)

    @classmethod
    def monomial(cls, alpha, c=1, names=None, laurent=None):
        alpha = tuple(alpha)
        if laurent is None:
            laurent = min(alpha, default=0) < 0
        return cls({alpha: c}, len(alpha), names, laurent)

    @classmethod
    def parse(cls, text, names):
        """Parse ``"x^2 - 3/2*x*y + 1"`` over the rationals (via sympy)."""
        import sympy

        syms = sympy.symbols(list(names))
        if len(names) == 1:
            syms = [syms] if not isinstance(syms, (list, tuple)) else syms
        local = {str(s): s for s in syms}
        try:
            expr = sympy.sympify(text.replace("^", "**"), locals=local)
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise InputError(f"cannot parse polynomial {text!r}") from exc
        num, den = sympy.fraction(sympy.together(sympy.expand(expr)))
        shift = [0] * len(names)
        if den != 1:
            den_poly = sympy.Poly(den, *syms)
            if len(den_poly.terms()) != 1:
                raise InputError(f"only monomial denominators are allowed: {text!r}")
            (mono, dc), = den_poly.terms()
            shift = list(mono)
            num = num / dc
        poly = sympy.Poly(sympy.expand(num), *syms, domain="QQ")
        terms = {}
        for mono, c in poly.terms():
            alpha = tuple(m - s for m, s in zip(mono, shift))
            terms[alpha] = Fraction(int(c.p), int(c.q))
        laurent = any(s for s in shift)
        return cls(terms, len(names), names, laurent)

    # -- structure --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), Fraction(0))

    def degree(self, alpha=None):
        if alpha is not None:
            return sum(alpha)
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(sum(a) for a in self.terms)

    def low_degree(self):
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return min(sum(a) for a in self.terms)

    def is_homogeneous(self):
        return len({sum(a) for a in self.terms}) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return all(not any(a) for a in self.terms)

    def homogeneous_component(self, d):
        return self._like({a: c for a, c in self.terms.items() if sum(a) == d})

    def homogeneous_components(self):
        comps = {}
        for a, c in self.terms.items():
            comps.setdefault(sum(a), {})[a] = c
        return {d: self._like(t) for d, t in sorted(comps.items())}

    def lowest_form(self):
        return self.homogeneous_component(self.low_degree())

    def top_form(self):
        return self.homogeneous_component(self.degree())

    def has_series_coefficients(self):
        return any(isinstance(c, PuiseuxSeries) for c in self.terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise InputError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.n, self.names)
        self._check(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms[a] + c if a in terms else c
        return self._like(terms, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return self._like({a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.n, self.names)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if not isinstance(other, PuiseuxSeries):
                other = as_fraction(other)
            return self._like({a: c * other for a, c in self.terms.items()})
        self._check(other)
        terms = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                s = tuple(x + y for x, y in zip(a, b))
                terms[s] = terms[s] + c * d if s in terms else c * d
        return self._like(terms, self.laurent or other.laurent)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = Polynomial.constant(1, self.n, self.names)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c):
        return self * c

    def shift(self, alpha):
        """Multiply by the monomial ``x^alpha``."""
        alpha = tuple(alpha)
        terms = {tuple(x + y for x, y in zip(a, alpha)): c for a, c in self.terms.items()}
        laurent = self.laurent or any(min(a) < 0 for a in terms)
        return self._like(terms, laurent)

    def clear_denominators(self):
        """Multiply by the least monomial making every exponent nonnegative."""
        if not self.terms:
            return Polynomial({}, self.n, self.names)
        low = [min(a[i] for a in self.terms) for i in range(self.n)]
        shift = tuple(-m if m < 0 else 0 for m in low)
        out = self.shift(shift)
        return Polynomial(out.terms, self.n, self.names, laurent=False)

    def monic(self, order):
        c = leading_term(self, order)[1]
        return self * (1 / c)

    def embed(self, n, positions, names=None):
        """Re-index into a ring with ``n`` variables; variable i goes to positions[i]."""
        terms = {}
        for a, c in self.terms.items():
            b = [0] * n
            for i, p in enumerate(positions):
                b[p] = a[i]
            terms[tuple(b)] = c
        return Polynomial(terms, n, names, self.laurent)

    def substitute(self, values, precision=None):
        """Evaluate at ``values`` (Fractions, series or complex numbers).

        Negative powers of series need ``precision`` for the inverse.
        """
        if len(values) != self.n:
            raise InputError("wrong number of values")
        total = 0
        cache = {}
        for a, c in self.terms.items():
            term = c
            for i, e in enumerate(a):
                if e == 0:
                    continue
                key = (i, e)
                if key not in cache:
                    cache[key] = _power(values[i], e, precision)
                term = term * cache[key]
            total = total + term
        return total

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for a in sorted(self.terms, key=lambda a: (-sum(a), [-x for x in a])):
            c = self.terms[a]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, a) if e
            )
            if isinstance(c, PuiseuxSeries):
                coef = f"({c!r})"
                out.append(f"{coef}*{mono}" if mono else coef)
                continue
            if not mono:
                out.append(fraction_str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{fraction_str(c)}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self):
        return {
            "vars": list(self.names),
            "mode": "laurent" if self.laurent else "poly",
            "terms": [
                [list(a), c.to_json() if isinstance(c, PuiseuxSeries) else fraction_str(c)]
                for a, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, obj, names=None, laurent=None):
        if isinstance(obj, str):
            if names is None:
                raise InputError("string polynomial needs variable names")
            p = cls.parse(obj, names)
            if laurent:
                p = Polynomial(p.terms, p.n, p.names, True)
            return p
        if not isinstance(obj, dict) or "terms" not in obj:
            raise InputError(f"bad polynomial object {obj!r}")
        names = obj.get("vars", names)
        mode = obj.get("mode", "laurent" if laurent else "poly")
        if mode not in ("poly", "laurent"):
            raise InputError(f"unknown polynomial mode {mode!r}")
        terms = {}
        for a, c in obj["terms"]:
            c = PuiseuxSeries.from_json(c) if isinstance(c, dict) else as_fraction(c)
            a = tuple(a)
            terms[a] = terms[a] + c if a in terms else c
        n = len(names) if names is not None else None
        return cls(terms, n, names, mode == "laurent")


def _power(v, e, precision):
    if e > 0:
        if isinstance(v, (PuiseuxSeries, Polynomial)):
            return v ** e
        return v ** e
    if isinstance(v, PuiseuxSeries):
        if precision is None:
            if v.is_exact and len(v.terms) == 1:
                return v.inverse(0) ** (-e)
            raise InputError("negative powers of series need a precision")
        return v.inverse(precision) ** (-e)
    if isinstance(v, Fraction) or isinstance(v, int):
        return Fraction(1) / Fraction(v) ** (-e)
    return v ** e


# ---------------------------------------------------------------------------
# term orders


class TermOrder:
    """Total order on exponent vectors, used with the minimum convention.

    ``kind`` is one of ``lex``, ``grlex``, ``grevlex`` (the textbook orders,
    with ``x_perm[0]`` the largest variable) or ``weight``: compare ``w.alpha``
    first and break ties with ``tiebreak``.
    """

    def __init__(self, kind="grevlex", perm=None, weight=None, tiebreak=None):
        if kind not in ("lex", "grlex", "grevlex", "weight"):
            raise InputError(f"unknown term order {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None
        self.weight = tuple(as_fraction(w) for w in weight) if weight is not None else None
        if kind == "weight":
            if self.weight is None:
                raise InputError("weight order needs a weight vector")
            tiebreak = tiebreak or TermOrder("grevlex")
        self.tiebreak = tiebreak
        self._cache = {}

    @classmethod
    def weight_refined(cls, w, tiebreak=None):
        return cls("weight", weight=w, tiebreak=tiebreak)

    @classmethod
    def degree_classical(cls, n):
        """The order whose minimal term is the textbook grevlex leading term.

        Highest total degree first; it is maximum well-ordered, so division
        terminates for arbitrary (inhomogeneous) input.
        """
        return cls.weight_refined([-1] * n, cls("grevlex"))

    @classmethod
    def elimination(cls, n, eliminate):
        """Order whose Groebner bases eliminate the variables in ``eliminate``."""
        w = [0] * n
        for i in eliminate:
            w[i] = -1
        return cls.weight_refined(w, cls.degree_classical(n))

    def key(self, alpha):
        k = self._cache.get(alpha)
        if k is None:
            k = self._key(alpha)
            self._cache[alpha] = k
        return k

    def _key(self, alpha):
        if self.kind == "weight":
            if len(self.weight) != len(alpha):
                raise InputError("weight vector length does not match the ring")
            return (sum(w * a for w, a in zip(self.weight, alpha)),) + self.tiebreak.key(alpha)
        a = tuple(alpha[i] for i in self.perm) if self.perm is not None else tuple(alpha)
        if self.kind == "lex":
            return a
        if self.kind == "grlex":
            return (sum(a),) + a
        return (sum(a),) + tuple(-x for x in reversed(a))

    def max_well_ordered(self, n):
        """True iff every variable precedes 1, i.e. ascending chains stop."""
        zero = self.key((0,) * n)
        for i in range(n):
            e = [0] * n
            e[i] = 1
            if not self.key(tuple(e)) < zero:
                return False
        return True

    def valid_for(self, polys):
        polys = [p for p in polys if p]
        if not polys:
            return True
        if all(p.is_homogeneous() for p in polys):
            return True
        return self.max_well_ordered(polys[0].n)

    def require_valid(self, polys):
        if not self.valid_for(polys):
            raise OrderNotWellFounded(
                f"{self!r} is not maximum well-ordered and the input is inhomogeneous"
            )

    def __repr__(self):
        if self.kind == "weight":
            w = ",".join(fraction_str(x) for x in self.weight)
            return f"weight({w}; {self.tiebreak!r})"
        return self.kind if self.perm is None else f"{self.kind}{list(self.perm)}"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and repr(self) == repr(other)

    def __hash__(self):
        return hash(repr(self))


GREVLEX = TermOrder("grevlex")


def leading_term(f, order):
    """``(exponent, coefficient)`` of the order-minimal term of ``f``."""
    if not f.terms:
        raise ZeroPolynomial("zero polynomial has no leading term")
    alpha = min(f.terms, key=order.key)
    return alpha, f.terms[alpha]


def leading_monomial(f, order):
    return leading_term(f, order)[0]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _require_field(polys):
    for p in polys:
        if p.has_series_coefficients():
            raise InputError("Groebner computations need rational coefficients")
        if p.laurent and any(min(a) < 0 for a in p.terms):
            raise InputError("Groebner computations need polynomial (not Laurent) input")


def poly_divide(f, divisors, order):
    """Multivariate division; returns ``(quotients, remainder)``.

    ``f = sum q_i g_i + r`` and no term of ``r`` is divisible by the leading
    monomial of any divisor.
    """
    if any(not g for g in divisors):
        raise ZeroPolynomial("division by the zero polynomial")
    _require_field([f, *divisors])
    order.require_valid(list(divisors))
    n = f.n
    leads = [leading_term(g, order) for g in divisors]
    quot = [dict() for _ in divisors]
    rem = {}
    p = dict(f.terms)
    while p:
        alpha = min(p, key=order.key)
        c = p[alpha]
        for i, (beta, b) in enumerate(leads):
            if _divides(beta, alpha):
                shift = _sub(alpha, beta)
                m = c / b
                quot[i][shift] = quot[i].get(shift, 0) + m
                for gamma, d in divisors[i].terms.items():
                    s = tuple(x + y for x, y in zip(gamma, shift))
                    v = p.get(s, 0) - m * d
                    if v:
                        p[s] = v
                    else:
                        p.pop(s, None)
                break
        else:
            rem[alpha] = c
            del p[alpha]
    names = f.names
    return [Polynomial(q, n, names) for q in quot], Polynomial(rem, n, names)


def s_polynomial(f, g, order):
    a, ca = leading_term(f, order)
    b, cb = leading_term(g, order)
    m = _lcm(a, b)
    return f.shift(_sub(m, a)) * (1 / ca) - g.shift(_sub(m, b)) * (1 / cb)


def _reduce(f, basis, order):
    return poly_divide(f, basis, order)[1] if basis else f


def buchberger_reduced(gens, order=GREVLEX):
    """Unique reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed smallest lcm degree first; Buchberger's coprime
    criterion skips pairs with disjoint leading monomials.  The output is
    monic, interreduced and sorted by leading monomial.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroPolynomial("ideal has no nonzero generators")
    _require_field(gens)
    order.require_valid(gens)
    n, names = gens[0].n, gens[0].names
    basis = []
    for g in gens:
        r = _reduce(g, basis, order)
        if r:
            basis.append(r.monic(order))
    pairs = set(combinations(range(len(basis)), 2))

    def pair_key(ij):
        i, j = ij
        m = _lcm(leading_monomial(basis[i], order), leading_monomial(basis[j], order))
        return (sum(m), order.key(m), ij)

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        a = leading_monomial(basis[i], order)
        b = leading_monomial(basis[j], order)
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        r = _reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r.monic(order))
            k = len(basis) - 1
            pairs.update((m, k) for m in range(k))
            if r.is_constant():
                return [Polynomial.constant(1, n, names)]
    return _interreduce(basis, order)


def _interreduce(basis, order):
    leads = [leading_monomial(g, order) for g in basis]
    keep = []
    for i, g in enumerate(basis):
        a = leads[i]
        redundant = False
        for j, b in enumerate(leads):
            if j == i:
                continue
            if _divides(b, a) and (b != a or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = _reduce(g, others, order)
        out.append(r.monic(order))
    out.sort(key=lambda g: order.key(leading_monomial(g, order)))
    return out


def is_groebner_basis(basis, order):
    """Every S-polynomial reduces to zero."""
    for f, g in combinations(basis, 2):
        if _reduce(s_polynomial(f, g, order), basis, order):
            return False
    return True


def ideal_member(f, gb, order=GREVLEX):
    if not f:
        return True
    return not poly_divide(f, gb, order)[1]


def homogenize(f, position=0, names=None):
    """Homogenize with a new variable inserted at ``position``."""
    d = f.degree()
    n = f.n + 1
    terms = {}
    for a, c in f.terms.items():
        b = list(a)
        b.insert(position, d - sum(a))
        terms[tuple(b)] = c
    if names is None:
        names = list(f.names)
        names.insert(position, "h")
    return Polynomial(terms, n, names)


def dehomogenize(f, position=0, names=None):
    terms = {}
    for a, c in f.terms.items():
        b = list(a)
        del b[position]
        b = tuple(b)
        terms[b] = terms[b] + c if b in terms else c
    if names is None:
        names = list(f.names)
        del names[position]
    return Polynomial(terms, f.n - 1, names)
