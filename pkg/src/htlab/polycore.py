"""Exact multivariate polynomials over Q, with optional symbolic parameters.

Values are immutable and every operation is pure.  A ring declares its
variables, an optional list of parameter symbols, and a degree-lexicographic
monomial order given by a significance permutation of the variables.  When a
ring carries parameters, coefficients are themselves polynomials in those
parameters (never inverted); otherwise coefficients are plain Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class PolyError(Exception):
    """Base class for errors raised by the polynomial layer."""


class ParseError(PolyError):
    """Syntax or identifier error, carrying the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} (position {pos} in {text!r})")
        self.message = message
        self.text = text
        self.pos = pos


class RingMismatchError(PolyError):
    """Operands belong to different rings."""


# A monomial is the tuple of exponents, one entry per ring variable.
Monomial = tuple


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(m: Monomial) -> int:
    return sum(m)


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order.

    Monomials compare first by total degree, then by exponents read along
    ``significance`` (most significant variable first).  The order is total,
    degree compatible and multiplicative.
    """

    significance: tuple

    def key(self, m: Monomial):
        return (sum(m), tuple(m[i] for i in self.significance))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


@dataclass(frozen=True)
class Ring:
    """A polynomial ring Q[parameters][variables] with a fixed deglex order.

    The default significance makes the last declared variable the most
    significant, so for variables (x, y) we have x < y.
    """

    variables: tuple
    parameters: tuple = ()
    significance: tuple = ()

    def __post_init__(self):
        vs = tuple(self.variables)
        ps = tuple(self.parameters)
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "parameters", ps)
        if len(set(vs)) != len(vs) or len(set(ps)) != len(ps):
            raise PolyError("duplicate names in ring declaration")
        if set(vs) & set(ps):
            raise PolyError("variable and parameter names overlap")
        sig = tuple(self.significance) or tuple(reversed(range(len(vs))))
        if sorted(sig) != list(range(len(vs))):
            raise PolyError("significance must be a permutation of variable indexes")
        object.__setattr__(self, "significance", sig)

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder(self.significance)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise PolyError(f"unknown variable {name!r}") from None

    def zero_mono(self) -> Monomial:
        return (0,) * len(self.variables)

    def lift_scalar(self, q):
        """Coerce an int or Fraction into a coefficient of this ring."""
        q = Fraction(q)
        if self.parameters:
            return Polynomial.constant(coefficient_ring(self), q)
        return q

    def without_params(self) -> "Ring":
        return Ring(self.variables, (), self.significance)


@lru_cache(maxsize=None)
def coefficient_ring(ring: Ring) -> Ring:
    """The parameter ring Q[parameters] in which coefficients live."""
    return Ring(ring.parameters)


def _coef_is_zero(c) -> bool:
    return not c


class Polynomial:
    """Immutable sparse polynomial: a map monomial -> coefficient.

    No stored coefficient is zero.  Two polynomials are equal iff their rings
    and term maps are equal.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: Ring, q) -> "Polynomial":
        c = ring.lift_scalar(q) if not isinstance(q, Polynomial) else q
        return cls(ring, {ring.zero_mono(): c})

    @classmethod
    def variable(cls, ring: Ring, name: str) -> "Polynomial":
        exps = [0] * ring.nvars
        exps[ring.index(name)] = 1
        return cls(ring, {tuple(exps): ring.lift_scalar(1)})

    @classmethod
    def term(cls, ring: Ring, mono: Monomial, coef) -> "Polynomial":
        if not isinstance(coef, Polynomial):
            coef = ring.lift_scalar(coef)
        return cls(ring, {tuple(mono): coef})

    # -- basic queries -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_mono() in self.terms)

    def constant_value(self):
        """The coefficient of the monomial 1 (zero when absent)."""
        return self.terms.get(self.ring.zero_mono(), self.ring.lift_scalar(0))

    def as_fraction(self) -> Fraction:
        """This polynomial as a rational number; raises if not constant."""
        if not self.is_constant():
            raise PolyError(f"not a constant polynomial: {self}")
        c = self.constant_value()
        if isinstance(c, Polynomial):
            return c.as_fraction()
        return Fraction(c)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def sorted_terms(self, reverse: bool = True):
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def leading_term(self):
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        m = max(self.terms, key=self.ring.order.key)
        return m, self.terms[m]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.lift_scalar(0))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"mixed rings: {self.ring} vs {other.ring}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.lift_scalar(other)
            if not c:
                return Polynomial.zero(self.ring)
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        if isinstance(other, Polynomial) and other.ring != self.ring:
            # a coefficient-ring element scales termwise
            if self.ring.parameters and other.ring == coefficient_ring(self.ring):
                return Polynomial(self.ring, {m: v * other for m, v in self.terms.items()})
            raise RingMismatchError("cannot multiply across rings")
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                p = c1 * c2
                s = out.get(m)
                out[m] = p if s is None else s + p
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, q):
        """Division by a nonzero rational scalar."""
        q = Fraction(q)
        if not q:
            raise ZeroDivisionError("division of polynomial by zero")
        return self * (Fraction(1) / q)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise PolyError("negative power of a polynomial")
        result = Polynomial.constant(self.ring, 1)
        base = self
        n = e
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def mul_monomial(self, mono: Monomial, coef=None) -> "Polynomial":
        """Fast multiplication by coef * x^mono."""
        if coef is None:
            coef = self.ring.lift_scalar(1)
        elif not isinstance(coef, Polynomial):
            coef = self.ring.lift_scalar(coef)
        if not coef:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {mono_mul(m, mono): c * coef for m, c in self.terms.items()})

    # -- substitution and evaluation ----------------------------------------

    def substitute_vars(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring endomorphism sending each variable to its image.

        Variables absent from ``images`` map to themselves.  All images must
        live in this polynomial's ring.
        """
        ring = self.ring
        imgs = []
        for i, name in enumerate(ring.variables):
            if name in images:
                p = images[name]
                if not isinstance(p, Polynomial) or p.ring != ring:
                    raise RingMismatchError(f"image of {name!r} is not in the same ring")
                imgs.append(p)
            else:
                imgs.append(Polynomial.variable(ring, name))
        # cache powers per variable
        powers: list = [{} for _ in imgs]

        def img_pow(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = imgs[i] ** e
            return cache[e]

        out = Polynomial.zero(ring)
        for m, c in self.terms.items():
            piece = Polynomial.constant(ring, 1)
            for i, e in enumerate(m):
                if e:
                    piece = piece * img_pow(i, e)
            out = out + piece * c
        return out

    def substitute_param(self, name: str, value) -> "Polynomial":
        """Eliminate one parameter by a rational value (ring unchanged)."""
        ring = self.ring
        if name not in ring.parameters:
            raise PolyError(f"unknown parameter {name!r}")
        cring = coefficient_ring(ring)
        const = Polynomial.constant(cring, Fraction(value))
        out: dict = {}
        for m, c in self.terms.items():
            c2 = c.substitute_vars({name: const})
            if c2:
                s = out.get(m)
                out[m] = c2 if s is None else s + c2
        return Polynomial(ring, out)

    def instantiate_params(self, values: Mapping[str, Fraction]) -> "Polynomial":
        """Substitute every parameter and return a parameter-free polynomial."""
        ring = self.ring
        if not ring.parameters:
            return self
        missing = [p for p in ring.parameters if p not in values]
        if missing:
            raise PolyError(f"missing parameter values for {missing}")
        vals = [Fraction(values[p]) for p in ring.parameters]
        target = ring.without_params()
        out: dict = {}
        for m, c in self.terms.items():
            q = c.evaluate(vals)
            if q:
                out[m] = out.get(m, Fraction(0)) + q
        return Polynomial(target, out)

    def evaluate(self, values: Sequence) -> Fraction:
        """Evaluate a parameter-free polynomial at rational values."""
        if self.ring.parameters:
            raise PolyError("evaluate requires a parameter-free polynomial")
        if len(values) != self.ring.nvars:
            raise PolyError("wrong number of values")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = Fraction(c)
            for v, e in zip(vals, m):
                if e:
                    prod *= v**e
            total += prod
        return total

    def derivative(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        out: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1 :]
                add = c * e
                s = out.get(m2)
                out[m2] = add if s is None else s + add
        return Polynomial(self.ring, out)

    def variables_used(self) -> tuple:
        used = [False] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(self.ring.variables[i] for i, u in enumerate(used) if u)

    # -- printing ------------------------------------------------------------

    def _pieces(self):
        """Expanded (sign, magnitude, param_mono, var_mono) pieces in print order."""
        ring = self.ring
        pieces = []
        if ring.parameters:
            pkey = coefficient_ring(ring).order.key
            for m, c in self.sorted_terms():
                for pm, q in sorted(c.terms.items(), key=lambda t: pkey(t[0]), reverse=True):
                    pieces.append((q < 0, abs(q), pm, m))
        else:
            for m, c in self.sorted_terms():
                pieces.append((c < 0, abs(c), None, m))
        return pieces

    def _format(self, name_fmt, pow_fmt, mul, frac_fmt) -> str:
        ring = self.ring
        pieces = self._pieces()
        if not pieces:
            return "0"
        chunks = []
        for neg, mag, pm, m in pieces:
            factors = []
            if pm is not None:
                for name, e in zip(ring.parameters, pm):
                    if e:
                        factors.append(pow_fmt(name_fmt(name), e))
            for name, e in zip(ring.variables, m):
                if e:
                    factors.append(pow_fmt(name_fmt(name), e))
            if mag != 1 or not factors:
                factors.insert(0, frac_fmt(mag))
            chunks.append((neg, mul.join(factors)))
        out = []
        for i, (neg, body) in enumerate(chunks):
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self) -> str:
        return self._format(
            name_fmt=lambda s: s,
            pow_fmt=lambda s, e: s if e == 1 else f"{s}^{e}",
            mul="*",
            frac_fmt=lambda q: str(q),
        )

    def latex(self) -> str:
        def name_fmt(s: str) -> str:
            head = s.rstrip("0123456789")
            tail = s[len(head) :]
            if tail:
                return f"{head}_{tail}" if len(tail) == 1 else f"{head}_{{{tail}}}"
            return head

        def pow_fmt(s: str, e: int) -> str:
            if e == 1:
                return s
            return f"{s}^{e}" if e < 10 else f"{s}^{{{e}}}"

        def frac_fmt(q: Fraction) -> str:
            return str(q) if q.denominator == 1 else f"\\frac{{{q.numerator}}}{{{q.denominator}}}"

        return self._format(name_fmt, pow_fmt, "", frac_fmt)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# -- parsing ------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.pos = 0
        # longest declared name wins, so "x1" beats "x" when both exist
        self.names = sorted(names, key=len, reverse=True)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return ("end", None, self.pos)
        ch = self.text[self.pos]
        if ch.isdigit():
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("num", int(self.text[self.pos : j]), self.pos)
        if ch.isalpha() or ch == "_":
            for name in self.names:
                if self.text.startswith(name, self.pos):
                    return ("name", name, self.pos)
            j = self.pos
            while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
                j += 1
            raise ParseError(f"unknown identifier {self.text[self.pos:j]!r}", self.text, self.pos)
        if ch in "+-*^/":
            return ("op", ch, self.pos)
        raise ParseError(f"unexpected character {ch!r}", self.text, self.pos)

    def take(self):
        tok = self.peek()
        if tok[0] == "num":
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        elif tok[0] == "name":
            self.pos += len(tok[1])
        elif tok[0] == "op":
            self.pos += 1
        return tok


def parse_polynomial(text: str, variables: Sequence[str], parameters: Sequence[str] = ()) -> Polynomial:
    """Parse the polynomial grammar: signed sums of coefficient*monomial terms.

    Accepted factors are rational literals (``p`` or ``p/q``), declared
    variable or parameter names, and ``name^exponent``.  ``*`` is optional
    between juxtaposed factors; whitespace is ignored.
    """
    ring = Ring(tuple(variables), tuple(parameters))
    return parse_in_ring(text, ring)


def parse_in_ring(text: str, ring: Ring) -> Polynomial:
    sc = _Scanner(text, tuple(ring.variables) + tuple(ring.parameters))
    result = Polynomial.zero(ring)
    nparams = len(ring.parameters)

    def parse_exponent() -> int:
        kind, val, pos = sc.take()
        neg = False
        if kind == "op" and val == "-":
            neg = True
            kind, val, pos = sc.take()
        if kind != "num":
            raise ParseError("expected integer exponent after '^'", sc.text, pos)
        if neg:
            raise ParseError("negative exponent", sc.text, pos)
        return val

    first = True
    while True:
        kind, val, pos = sc.peek()
        if kind == "end":
            if first:
                raise ParseError("empty input", sc.text, pos)
            break
        # term sign
        sign = 1
        if kind == "op" and val in "+-":
            if first and val == "+":
                raise ParseError("unexpected leading '+'", sc.text, pos)
            sc.take()
            if val == "-":
                sign = -1
            kind, val, pos = sc.peek()
        elif not first:
            raise ParseError(f"expected '+' or '-' before {val!r}", sc.text, pos)
        first = False

        coef = Fraction(sign)
        pexps = [0] * nparams
        vexps = [0] * ring.nvars
        saw_factor = False
        expect_factor = True
        while True:
            kind, val, pos = sc.peek()
            if kind == "num":
                sc.take()
                num = val
                nk, nv, npos = sc.peek()
                if nk == "op" and nv == "/":
                    sc.take()
                    dk, dv, dpos = sc.take()
                    if dk != "num":
                        raise ParseError("expected denominator digits", sc.text, dpos)
                    if dv == 0:
                        raise ParseError("zero denominator", sc.text, dpos)
                    coef *= Fraction(num, dv)
                else:
                    coef *= num
                saw_factor = True
            elif kind == "name":
                sc.take()
                e = 1
                nk, nv, npos = sc.peek()
                if nk == "op" and nv == "^":
                    sc.take()
                    e = parse_exponent()
                if val in ring.variables:
                    vexps[ring.index(val)] += e
                else:
                    pexps[ring.parameters.index(val)] += e
                saw_factor = True
            elif kind == "op" and val == "*":
                if expect_factor or not saw_factor:
                    raise ParseError("expected a factor before '*'", sc.text, pos)
                sc.take()
                expect_factor = True
                continue
            else:
                break
            expect_factor = False
        if not saw_factor or expect_factor:
            raise ParseError("expected a term", sc.text, sc.pos)
        if ring.parameters:
            cring = coefficient_ring(ring)
            c = Polynomial.term(cring, tuple(pexps), coef)
        else:
            if any(pexps):
                raise AssertionError("unreachable")
            c = coef
        result = result + Polynomial.term(ring, tuple(vexps), c)
    return result
