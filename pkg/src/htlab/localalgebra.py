"""Finite-dimensional local algebras as multiplication tables.

An algebra is built from a zero-dimensional ideal whose variables are all
nilpotent in the quotient; the basis is the set of standard monomials.  On
top of the table the module computes the radical filtration, Hilbert-Samuel
sequences, socles, Gorenstein certificates, quotients by subspace ideals and
the largest ideal inside a subspace.  Everything is exact and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random
from typing import List, Optional, Sequence

from . import linalg
from .groebner import GroebnerBasis, Ideal, buchberger, normal_form, standard_monomials
from .polycore import Monomial, PolyError, Polynomial, Ring, mono_mul


class AlgebraError(PolyError):
    pass


class NotLocalError(AlgebraError):
    """The quotient is not local with maximal ideal generated by the variables."""


class NotAnIdealError(AlgebraError):
    pass


class NotGorensteinError(AlgebraError):
    pass


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def mono_str(ring: Ring, m: Monomial) -> str:
    parts = [
        (name if e == 1 else f"{name}^{e}")
        for name, e in zip(ring.variables, m)
        if e
    ]
    return "*".join(parts) if parts else "1"


class Subspace:
    """A subspace of Q^n, canonicalized by reduced row echelon form.

    Two subspaces are equal iff their echelon matrices are identical.
    """

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence[Fraction]]):
        rows, pivots = linalg.rref(vectors)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        eye = [[Fraction(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cls(ambient_dim, eye)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def reduce(self, vec: Sequence[Fraction]) -> List[Fraction]:
        return linalg.residual(self.rows, self.pivots, vec)

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


class FiniteAlgebra:
    """Commutative associative unital algebra given by a multiplication table.

    basis_labels[0] is always the unit.  The table stores, for each basis
    pair i <= j, the sparse coordinate vector of basis[i] * basis[j].
    """

    __slots__ = (
        "dim",
        "basis_labels",
        "basis_monomials",
        "table",
        "var_images",
        "source_ideal",
        "gb",
    )

    def __init__(
        self,
        dim: int,
        basis_labels: Sequence[str],
        table: dict,
        var_images: Sequence[Sequence[Fraction]],
        source_ideal: Optional[Ideal] = None,
        gb: Optional[GroebnerBasis] = None,
        basis_monomials=None,
    ):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_labels", tuple(basis_labels))
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "var_images", tuple(tuple(v) for v in var_images))
        object.__setattr__(self, "source_ideal", source_ideal)
        object.__setattr__(self, "gb", gb)
        object.__setattr__(self, "basis_monomials", basis_monomials)
        self._verify_unital()
        self._verify_associative()
        self._verify_nilpotents()

    def __setattr__(self, *a):
        raise AttributeError("FiniteAlgebra is immutable")

    # -- structure verification (runs at every construction) ----------------

    def _verify_unital(self):
        for j in range(self.dim):
            if dict(self.pair_product(0, j)) != {j: Fraction(1)}:
                raise AlgebraError("basis[0] is not a unit for the table")

    def _verify_associative(self):
        for i in range(self.dim):
            for j in range(i, self.dim):
                eij = self.product_vector(i, j)
                for k in range(j, self.dim):
                    left = self.mul(eij, self.unit_vector(k))
                    right = self.mul(self.unit_vector(i), self.product_vector(j, k))
                    if left != right:
                        raise AlgebraError(
                            f"associativity fails on basis triple ({i}, {j}, {k})"
                        )

    def _verify_nilpotents(self):
        for i in range(1, self.dim):
            v = self.unit_vector(i)
            for _ in range(self.dim.bit_length() + 1):
                v = self.mul(v, v)
                if not any(v):
                    break
            else:
                if any(v):
                    raise NotLocalError(f"basis element {self.basis_labels[i]} is not nilpotent")

    # -- vectors -------------------------------------------------------------

    def unit_vector(self, i: int) -> List[Fraction]:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def one(self) -> List[Fraction]:
        return self.unit_vector(0)

    def pair_product(self, i: int, j: int):
        return self.table[(i, j) if i <= j else (j, i)]

    def product_vector(self, i: int, j: int) -> List[Fraction]:
        v = [Fraction(0)] * self.dim
        for k, c in self.pair_product(i, j):
            v[k] = c
        return v

    def mul(self, u: Sequence, v: Sequence, zero=Fraction(0)) -> list:
        """Product of coordinate vectors.  Entries may be Fractions or any
        values supporting ring operations with Fractions (polynomials)."""
        out = [zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in self.pair_product(i, j):
                    out[k] = out[k] + ab * c
        return out

    def power(self, u: Sequence[Fraction], e: int) -> List[Fraction]:
        if e < 1:
            raise AlgebraError("power expects a positive exponent")
        v = list(u)
        for _ in range(e - 1):
            v = self.mul(v, u)
        return v

    def exp(self, u: Sequence[Fraction]) -> List[Fraction]:
        """exp(u) as the finite series sum u^k / k! for nilpotent u."""
        if u[0]:
            raise AlgebraError("exp expects an element of the maximal ideal")
        acc = self.one()
        term = self.one()
        k = 0
        while True:
            k += 1
            term = self.mul(term, u)
            if not any(term):
                break
            term = [t / k for t in term]
            acc = [a + t for a, t in zip(acc, term)]
            if k > self.dim + 1:
                raise NotLocalError("exp series did not terminate; element not nilpotent")
        return acc

    def maximal_ideal(self) -> Subspace:
        return Subspace(self.dim, [self.unit_vector(i) for i in range(1, self.dim)])

    def element_from_polynomial(self, p: Polynomial) -> List[Fraction]:
        """Coordinates of a presentation-ring polynomial in this algebra."""
        if self.gb is None or self.basis_monomials is None:
            raise AlgebraError("algebra has no polynomial presentation")
        nf = normal_form(p, self.gb)
        index = {m: i for i, m in enumerate(self.basis_monomials)}
        v = [Fraction(0)] * self.dim
        for m, c in nf.terms.items():
            v[index[m]] = c
        return v

    def __repr__(self):
        return f"FiniteAlgebra(dim={self.dim}, basis={list(self.basis_labels)})"


def build_algebra(I: Ideal) -> FiniteAlgebra:
    """The quotient by a zero-dimensional ideal, as a multiplication table.

    Requires every ring variable to be nilpotent in the quotient, which makes
    the quotient local with maximal ideal generated by the variables.
    """
    ring = I.ring
    if ring.parameters:
        raise AlgebraError("algebras are built over Q; instantiate parameters first")
    gb = buchberger(I)
    std = standard_monomials(gb)  # raises InfiniteQuotientError when infinite
    if not std:
        raise NotLocalError("the ideal is the unit ideal; the quotient is zero")
    dim = len(std)
    index = {m: i for i, m in enumerate(std)}

    def to_vec(p: Polynomial) -> List[Fraction]:
        v = [Fraction(0)] * dim
        for m, c in p.terms.items():
            v[index[m]] = c
        return v

    var_images = []
    for name in ring.variables:
        x = Polynomial.variable(ring, name)
        if not normal_form(x**dim, gb).is_zero():
            raise NotLocalError(f"variable {name!r} is not nilpotent in the quotient")
        var_images.append(to_vec(normal_form(x, gb)))

    table = {}
    for i in range(dim):
        for j in range(i, dim):
            prod = Polynomial.term(ring, mono_mul(std[i], std[j]), 1)
            nf = normal_form(prod, gb)
            table[(i, j)] = tuple(sorted((index[m], c) for m, c in nf.terms.items()))

    labels = [mono_str(ring, m) for m in std]
    return FiniteAlgebra(
        dim,
        labels,
        table,
        var_images,
        source_ideal=I,
        gb=gb,
        basis_monomials=tuple(std),
    )


# -- filtration and Hilbert-Samuel data ----------------------------------------


@dataclass(frozen=True)
class Filtration:
    """Powers of the maximal ideal: [A, m, m^2, ..., m^d, 0]."""

    powers: tuple

    def __post_init__(self):
        dims = self.dims
        for a, b in zip(dims, dims[1:]):
            if b >= a and a != 0:
                raise AlgebraError("filtration must strictly decrease until zero")

    @property
    def dims(self) -> tuple:
        return tuple(s.dim for s in self.powers)

    @property
    def top_exponent(self) -> int:
        """Largest d with m^d nonzero."""
        return len(self.powers) - 2

    @property
    def length(self) -> int:
        return self.top_exponent + 1


def radical_filtration(A: FiniteAlgebra) -> Filtration:
    powers = [Subspace.full(A.dim), A.maximal_ideal()]
    gens = [g for g in A.var_images if any(g)]
    while not powers[-1].is_zero():
        prev = powers[-1]
        products = [A.mul(list(row), g) for row in prev.rows for g in gens]
        powers.append(Subspace(A.dim, products))
    return Filtration(tuple(powers))


def hilbert_samuel(A: FiniteAlgebra, filtration: Optional[Filtration] = None) -> tuple:
    """The sequence r_i = dim m^i - dim m^{i+1}, i = 0..d."""
    f = filtration or radical_filtration(A)
    dims = f.dims
    return tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))


def socle(A: FiniteAlgebra) -> Subspace:
    """Annihilator of the maximal ideal: {a : a*g = 0 for all generators g}."""
    gens = [g for g in A.var_images if any(g)]
    if not gens:
        return Subspace.full(A.dim)
    rows = []
    cols = [[A.mul(g, A.unit_vector(i)) for i in range(A.dim)] for g in gens]
    for gi in range(len(gens)):
        for k in range(A.dim):
            rows.append([cols[gi][i][k] for i in range(A.dim)])
    return Subspace(A.dim, linalg.nullspace(rows, A.dim))


def is_gorenstein(A: FiniteAlgebra) -> bool:
    """True iff the socle is one dimensional.

    When true, the socle provably coincides with the top nonzero power of the
    maximal ideal; this is asserted.
    """
    s = socle(A)
    if s.dim != 1:
        return False
    top = radical_filtration(A).powers[-2]
    if s != top:
        raise AlgebraError("socle is one dimensional but differs from the top power")
    return True


def socle_generator(A: FiniteAlgebra) -> List[Fraction]:
    """The Gorenstein certificate: the socle generator scaled so that its
    highest basis coordinate equals one."""
    s = socle(A)
    if s.dim != 1:
        raise NotGorensteinError(f"socle has dimension {s.dim}")
    row = list(s.rows[0])
    lead = next(i for i in range(A.dim - 1, -1, -1) if row[i])
    return [x / row[lead] for x in row]


def validate_hs_shape(r: Sequence[int]) -> dict:
    """Shape report for a Hilbert-Samuel sequence.

    Flags: (a) after a value 1 every later value must be 1; (b) if r_2 = 2
    the tail must be twos then ones; and the sequence (1, 2, 3, 1, ..., 1) is
    marked as admitting no Gorenstein algebra.
    """
    r = list(r)
    violations = []
    if not r or r[0] != 1:
        violations.append("r_0 must equal 1")
    if any(x < 1 for x in r):
        violations.append("every r_i must be positive")
    seen_one = False
    for i, x in enumerate(r):
        if i == 0:
            continue
        if seen_one and x != 1:
            violations.append(f"r_{i} = {x} occurs after an earlier value 1")
            break
        if x == 1:
            seen_one = True
    if len(r) > 2 and r[2] == 2:
        tail = r[2:]
        stripped = "".join(str(x) for x in tail)
        if set(tail) - {1, 2} or "12" in stripped.replace("1", "1"):
            pass
        ok = all(x in (1, 2) for x in tail)
        if ok:
            first_one = next((i for i, x in enumerate(tail) if x == 1), len(tail))
            ok = all(x == 1 for x in tail[first_one:])
        if not ok:
            violations.append("with r_2 = 2 the tail must be twos followed by ones")
    gorenstein_impossible = (
        len(r) >= 4 and r[:3] == [1, 2, 3] and all(x == 1 for x in r[3:])
    )
    return {
        "valid": not violations,
        "violations": violations,
        "gorenstein_impossible": gorenstein_impossible,
    }


def power_span_check(A: FiniteAlgebra, k: int, trials: int, seed: int = 0) -> bool:
    """Sampled check that k-th powers span m^k modulo m^{k+1}.

    Draws random maximal-ideal elements with coordinates in {-3..3} and tests
    span{z^k} + m^{k+1} = m^k; on failure retries once with a wider box.
    Probabilistic completeness only; a False return is a hard failure report.
    """
    filt = radical_filtration(A)
    if not 1 <= k <= filt.top_exponent:
        raise AlgebraError(f"k must lie in 1..{filt.top_exponent}")
    target = filt.powers[k]
    above = filt.powers[k + 1]
    m_rows = [A.unit_vector(i) for i in range(1, A.dim)]
    rng = random.Random(seed)
    for box in (3, 10):
        vectors = list(above.rows)
        for _ in range(trials):
            z = [Fraction(0)] * A.dim
            for row in m_rows:
                c = rng.randint(-box, box)
                if c:
                    z = [a + c * b for a, b in zip(z, row)]
            vectors.append(A.power(z, k))
        if Subspace(A.dim, vectors) == target:
            return True
    return False


def is_ideal(A: FiniteAlgebra, S: Subspace) -> bool:
    gens = [g for g in A.var_images if any(g)]
    return all(S.contains(A.mul(list(row), g)) for row in S.rows for g in gens)


def largest_ideal_in_subspace(A: FiniteAlgebra, U: Subspace) -> Subspace:
    """The largest ideal of A contained in U, namely {a : a*A inside U}."""
    if not A.maximal_ideal().contains_subspace(U):
        raise AlgebraError("U must be contained in the maximal ideal")
    rows = []
    nonpivot = [c for c in range(A.dim) if c not in U.pivots]
    for j in range(A.dim):
        residuals = [U.reduce(A.product_vector(i, j)) for i in range(A.dim)]
        for c in nonpivot:
            rows.append([residuals[i][c] for i in range(A.dim)])
    J = Subspace(A.dim, linalg.nullspace(rows, A.dim))
    if not (U.contains_subspace(J) and is_ideal(A, J)):
        raise AlgebraError("internal error: computed space is not an ideal inside U")
    return J


def quotient_algebra(A: FiniteAlgebra, J: Subspace) -> FiniteAlgebra:
    """The quotient algebra A/J for a subspace ideal J inside the maximal ideal.

    The basis is the set of original basis vectors at the non-pivot
    coordinates of J; associativity is re-verified on construction.
    """
    if not is_ideal(A, J):
        raise NotAnIdealError("J is not an ideal of A")
    if not A.maximal_ideal().contains_subspace(J):
        raise NotAnIdealError("J must sit inside the maximal ideal")
    keep = [c for c in range(A.dim) if c not in J.pivots]
    dim = len(keep)
    pos = {c: t for t, c in enumerate(keep)}

    def project(vec) -> List[Fraction]:
        w = J.reduce(vec)
        return [w[c] for c in keep]

    table = {}
    for a, ca in enumerate(keep):
        for b in range(a, dim):
            cb = keep[b]
            w = project(A.product_vector(ca, cb))
            table[(a, b)] = tuple((k, c) for k, c in enumerate(w) if c)
    var_images = [project(list(v)) for v in A.var_images]
    labels = [A.basis_labels[c] for c in keep]
    return FiniteAlgebra(dim, labels, table, var_images)


def algebra_report(A: FiniteAlgebra) -> dict:
    """The JSON report for one algebra; field names are part of the contract."""
    filt = radical_filtration(A)
    hs = hilbert_samuel(A, filt)
    gor = is_gorenstein(A)
    return {
        "dim": A.dim,
        "length": filt.length,
        "hilbert_samuel": list(hs),
        "gorenstein": gor,
        "socle_generator": [frac_str(x) for x in socle_generator(A)] if gor else None,
        "basis": list(A.basis_labels),
    }
