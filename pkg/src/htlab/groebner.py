"""Reduced Groebner bases, normal forms, standard monomials, ideal equality.

Buchberger's algorithm with the normal selection strategy (smallest lcm
first) and the coprime leading term criterion.  Adequate for the small
ideals this package works with; coefficient growth is left unmanaged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .polycore import (
    Monomial,
    PolyError,
    Polynomial,
    Ring,
    RingMismatchError,
    mono_coprime,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
)


class GroebnerError(PolyError):
    pass


class SymbolicCoefficientError(GroebnerError):
    """A leading coefficient carries parameters and could vanish; refused."""


class InfiniteQuotientError(GroebnerError):
    """The quotient by the ideal is not finite dimensional."""


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal with its ambient ring."""

    ring: Ring
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise GroebnerError("an ideal needs at least one generator")
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != self.ring:
                raise RingMismatchError("generator outside the declared ring")
            if g.is_zero():
                raise GroebnerError("zero generator")
        object.__setattr__(self, "generators", gens)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal(ring: Ring, *gens: Polynomial) -> Ideal:
    return Ideal(ring, tuple(gens))


def _rational_lc(p: Polynomial) -> Fraction:
    """Leading coefficient as a Fraction; refuses symbolic leads."""
    _, c = p.leading_term()
    if isinstance(c, Polynomial):
        if not c.is_constant():
            raise SymbolicCoefficientError(
                f"symbolic leading coefficient {c} in {p}; refusing rather than branching"
            )
        return c.as_fraction()
    return Fraction(c)


def _monic(p: Polynomial) -> Polynomial:
    return p / _rational_lc(p)


class GroebnerBasis:
    """A reduced Groebner basis; elements monic, sorted by leading monomial."""

    __slots__ = ("ring", "elements", "_lms")

    def __init__(self, ring: Ring, elements: Sequence[Polynomial]):
        object.__setattr__(self, "ring", ring)
        key = ring.order.key
        elems = tuple(sorted(elements, key=lambda g: key(g.leading_monomial())))
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_lms", tuple(g.leading_monomial() for g in elems))

    def __setattr__(self, *a):
        raise AttributeError("GroebnerBasis is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.elements) + "]"

    def leading_monomials(self):
        return self._lms


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Full reduction: no term of the result is divisible by any leading
    monomial of the basis.  Linear over coefficients."""
    if p.ring != gb.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    ring = p.ring
    key = ring.order.key
    lms = gb.leading_monomials()
    elems = gb.elements
    work = p
    done: dict = {}
    while work:
        m = max(work.terms, key=key)
        c = work.terms[m]
        hit = None
        for g, lm in zip(elems, lms):
            q = mono_div(m, lm)
            if q is not None:
                hit = (g, q)
                break
        if hit is None:
            done[m] = c
            work = Polynomial(ring, {mm: cc for mm, cc in work.terms.items() if mm != m})
            continue
        g, q = hit
        factor = c * (Fraction(1) / _rational_lc(g))
        work = work - g.mul_monomial(q, factor)
    return Polynomial(ring, done)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = mono_lcm(lf, lg)
    mf = mono_div(l, lf)
    mg = mono_div(l, lg)
    return f.mul_monomial(mf, Fraction(1) / _rational_lc(f)) - g.mul_monomial(
        mg, Fraction(1) / _rational_lc(g)
    )


def buchberger(I: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal; deterministic for fixed input.

    Generators carrying parameters are accepted only while every leading
    coefficient met along the way is a plain nonzero rational.
    """
    ring = I.ring
    key = ring.order.key
    basis: List[Polynomial] = []
    for g in I.generators:
        _rational_lc(g)
        basis.append(_monic(g))
    # deterministic starting order
    basis.sort(key=lambda g: key(g.leading_monomial()))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                mono_deg(mono_lcm(basis[ij[0]].leading_monomial(), basis[ij[1]].leading_monomial())),
                key(mono_lcm(basis[ij[0]].leading_monomial(), basis[ij[1]].leading_monomial())),
                ij,
            ),
        )
        pairs.discard((i, j))
        f, g = basis[i], basis[j]
        if mono_coprime(f.leading_monomial(), g.leading_monomial()):
            continue
        r = _reduce_mod(basis, _spoly(f, g))
        if r.is_zero():
            continue
        _rational_lc(r)
        r = _monic(r)
        basis.append(r)
        k = len(basis) - 1
        pairs.update((t, k) for t in range(k))

    return GroebnerBasis(ring, _interreduce(basis))


def _reduce_mod(basis: Sequence[Polynomial], p: Polynomial) -> Polynomial:
    """Top reduction of p modulo the current (monic) basis."""
    if not basis:
        return p
    ring = p.ring
    key = ring.order.key
    done: dict = {}
    work = p
    lms = [g.leading_monomial() for g in basis]
    while work:
        m = max(work.terms, key=key)
        c = work.terms[m]
        for g, lm in zip(basis, lms):
            q = mono_div(m, lm)
            if q is not None:
                work = work - g.mul_monomial(q, c)
                break
        else:
            done[m] = c
            work = Polynomial(ring, {mm: cc for mm, cc in work.terms.items() if mm != m})
    return Polynomial(ring, done)


def _interreduce(basis: Sequence[Polynomial]) -> List[Polynomial]:
    """Minimalize leading monomials, then fully reduce every tail."""
    key = basis[0].ring.order.key if basis else None
    work = sorted(basis, key=lambda g: key(g.leading_monomial()))
    minimal: List[Polynomial] = []
    for g in work:
        lm = g.leading_monomial()
        if any(mono_div(lm, h.leading_monomial()) is not None for h in minimal):
            continue
        minimal.append(g)
    reduced: List[Polynomial] = []
    for idx, g in enumerate(minimal):
        others = GroebnerBasis(g.ring, [h for t, h in enumerate(minimal) if t != idx])
        r = normal_form(g, others) if len(minimal) > 1 else g
        if r.is_zero():
            continue
        _rational_lc(r)
        reduced.append(_monic(r))
    return reduced


def standard_monomials(gb: GroebnerBasis) -> List[Monomial]:
    """Monomials outside the leading term ideal, sorted by the order.

    Raises InfiniteQuotientError when some variable has no pure power among
    the leading monomials (the quotient is then infinite dimensional).
    """
    ring = gb.ring
    nv = ring.nvars
    lms = gb.leading_monomials()
    if any(mono_deg(m) == 0 for m in lms):
        return []  # the whole ring: unit ideal
    bounds = []
    for i in range(nv):
        pure = [m[i] for m in lms if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise InfiniteQuotientError(
                f"variable {ring.variables[i]!r} has no pure power among the leading monomials"
            )
        bounds.append(min(pure))
    out: List[Monomial] = []

    def rec(prefix, i):
        if i == nv:
            m = tuple(prefix)
            if not any(mono_divides(lm, m) for lm in lms):
                out.append(m)
            return
        for e in range(bounds[i]):
            rec(prefix + [e], i + 1)

    rec([], 0)
    out.sort(key=ring.order.key)
    return out


def ideal_member(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).is_zero()


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """True iff the reduced Groebner bases coincide."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals in different rings")
    return buchberger(I) == buchberger(J)
