"""Sparse multivariate Laurent polynomials over exact rationals.

A polynomial in N ambient variables is a finite map from exponent vectors
to nonzero Fraction coefficients:

    x1^2*x2 + 3/2   ->   {(2, 1): Fraction(1), (0, 0): Fraction(3, 2)}

Exponents may be negative (Laurent monomials appear in constant-term
pairings).  Every ring operation is exact, so polynomial identity testing
is decidable and used as the equality notion throughout the package.

The canonical term order is graded lexicographic: monomials are compared
by total degree first, then lexicographically on the exponent vector.
Serialization and pretty-printing always emit terms in this order, which
makes all outputs byte-deterministic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import AmbientSizeMismatch, NotDivisibleError

# Exponent vector: one integer per ambient variable (negative = Laurent).
Exponent = tuple[int, ...]

_ZERO = Fraction(0)


def grlex_key(exps: Exponent) -> tuple[int, Exponent]:
    """Graded-lexicographic sort key for an exponent vector."""
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial; do not mutate ``terms`` after construction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] | None = None):
        if nvars < 1:
            raise ValueError("need at least one ambient variable")
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise AmbientSizeMismatch(
                        f"ambient size mismatch: exponent {exps} in {nvars} variables"
                    )
                c = Fraction(coeff)
                if c:
                    clean[tuple(exps)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, j: int) -> "Polynomial":
        """The single variable x_j (1-based index)."""
        if not 1 <= j <= nvars:
            raise ValueError(f"variable index {j} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[j - 1] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        return cls(len(exps), {exps: Fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise AmbientSizeMismatch(
                f"ambient size mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = out.get(exps, _ZERO) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial(self.nvars)
            return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(key, _ZERO) + c1 * c2
                if new:
                    out[key] = new
                else:
                    del out[key]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.pretty()!r})"

    # -- inspection --------------------------------------------------------

    def degree(self) -> int:
        """Maximum total degree (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def leading(self) -> tuple[Exponent, Fraction]:
        """Graded-lex maximal term; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in ascending graded-lex order."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def is_laurent(self) -> bool:
        return any(e < 0 for exps in self.terms for e in exps)

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        """Split into total-degree components, keyed by degree."""
        buckets: dict[int, dict[Exponent, Fraction]] = {}
        for exps, coeff in self.terms.items():
            buckets.setdefault(sum(exps), {})[exps] = coeff
        return {d: Polynomial(self.nvars, t) for d, t in sorted(buckets.items())}

    # -- variable transforms -----------------------------------------------

    def invert_variables(self) -> "Polynomial":
        """Substitute x_j -> 1/x_j for every variable (Laurent reversal)."""
        return Polynomial(
            self.nvars, {tuple(-e for e in exps): c for exps, c in self.terms.items()}
        )

    def swap_variables(self, i: int, j: int) -> "Polynomial":
        """Exchange variables x_i and x_j (1-based)."""
        a, b = i - 1, j - 1
        out: dict[Exponent, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = coeff
        return Polynomial(self.nvars, out)

    def stretch(self, factor: int) -> "Polynomial":
        """Substitute x_j -> x_j^factor in every variable."""
        return Polynomial(
            self.nvars,
            {tuple(e * factor for e in exps): c for exps, c in self.terms.items()},
        )

    def scale_variables(self, c) -> "Polynomial":
        """Substitute x_j -> c*x_j (c must be a nonzero rational)."""
        c = Fraction(c)
        return Polynomial(
            self.nvars, {exps: coeff * c ** sum(exps) for exps, coeff in self.terms.items()}
        )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: terms in ascending graded-lex order,
        integers as decimal strings (arbitrary precision)."""
        return {
            "vars": self.nvars,
            "terms": [
                {
                    "exp": list(exps),
                    "num": str(coeff.numerator),
                    "den": str(coeff.denominator),
                }
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Polynomial":
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return cls(int(data["vars"]), terms)

    def pretty(self, var: str = "x") -> str:
        """Human-readable rendering in descending graded-lex order.

        With one ambient variable the bare letter is used ("x^2 - 1/2");
        otherwise variables are subscripted ("x_1^2 x_2").
        """
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in sorted(
            self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True
        ):
            factors = []
            for idx, e in enumerate(exps):
                if e == 0:
                    continue
                name = var if self.nvars == 1 else f"{var}_{idx + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = " ".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Exponent]:
    """All exponent vectors with the given total degree, lexicographic order."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def monomials_up_to_degree(nvars: int, degree: int) -> Iterator[Exponent]:
    for d in range(degree + 1):
        yield from monomials_of_degree(nvars, d)


def vandermonde(nvars: int, variant: str = "A") -> Polynomial:
    """The alternating product prod_{i<j} (x_i - x_j).

    Variant "B" is the same product read in the squared variables
    u_j = z_j^2; since polynomials do not carry variable names the two
    variants coincide structurally.
    """
    if variant not in ("A", "B"):
        raise ValueError(f"unknown Vandermonde variant {variant!r}")
    result = Polynomial.one(nvars)
    for i in range(1, nvars + 1):
        for j in range(i + 1, nvars + 1):
            result = result * (
                Polynomial.variable(nvars, i) - Polynomial.variable(nvars, j)
            )
    return result


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient q with q*g == f; raises NotDivisibleError otherwise.

    Ordinary (non-Laurent) inputs only: exactness is decided by graded-lex
    long division, which terminates because the leading term strictly
    decreases at every step.
    """
    if f.nvars != g.nvars:
        raise AmbientSizeMismatch("ambient size mismatch in divide_exact")
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_laurent() or g.is_laurent():
        raise NotDivisibleError("not divisible: Laurent division is not supported")
    g_exps, g_coeff = g.leading()
    quotient: dict[Exponent, Fraction] = {}
    rem = f
    while rem:
        r_exps, r_coeff = rem.leading()
        q_exps = tuple(a - b for a, b in zip(r_exps, g_exps))
        if any(e < 0 for e in q_exps):
            raise NotDivisibleError("not divisible")
        q_coeff = r_coeff / g_coeff
        quotient[q_exps] = quotient.get(q_exps, _ZERO) + q_coeff
        rem = rem - Polynomial(f.nvars, {q_exps: q_coeff}) * g
    return Polynomial(f.nvars, quotient)


def product(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    result = Polynomial.one(nvars)
    for p in polys:
        result = result * p
    return result


def all_equal_degree_pairs(nvars: int, degree: int) -> Iterator[tuple[Exponent, Exponent]]:
    """Utility for exhaustive bilinear checks (used by tests)."""
    monos = list(monomials_up_to_degree(nvars, degree))
    return itertools.product(monos, monos)
