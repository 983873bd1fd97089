"""Jack, multivariable Hermite, and multivariable Laguerre polynomials.

Each family is built by several independent routes that must agree exactly:

* non-symmetric Jack: triangular joint-eigenvector solve for the commuting
  Cherednik operators on a fixed-degree monomial block;
* symmetric Jack: triangular solve against the elementary symmetric
  combinations e_k(Dhat_1, ..., Dhat_N), or symmetrization of the
  non-symmetric one, or a Rodrigues chain of raising operators;
* Hermite: Gram orthogonalization against the Gaussian pairing, or the
  intertwiner image sigma_A of the Jack polynomial, or Rodrigues;
* Laguerre: same three routes in the squared variables u_j = z_j^2.

Rational gauge convention: the ladder operators carry a factored-out
sqrt(2), so the intertwiner applied to a homogeneous f of degree d is

    sigma_A(f) = 2^(-d) f(A_1, ..., A_N) . 1
    sigma_B(f) = f(B_1^2/4, ..., B_N^2/4) . 1   (re-encoded in u)

which makes every family polynomial exactly rational.  Under this
convention sigma_A(J_lam) *is* the monic Hermite polynomial and
sigma_B(J_lam) the monic Laguerre polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import operators as ops
from .combinatorics import (
    all_permutations,
    apply_permutation,
    composition_to_label,
    extended_dominance_lt,
    is_min_coset_rep,
    label_sort_key,
    label_to_composition,
    monomial_symmetric,
    pad_partition,
    partitions_of,
    partitions_up_to,
    precedes,
    stabilizer_order,
    to_monomial_basis,
)
from .errors import (
    EvennessViolation,
    HeckePolyError,
    SpectrumCollisionError,
)
from .parameters import FamilySpec, HERMITE, JACK, LAGUERRE
from .polynomials import Polynomial, monomials_of_degree

Partition = tuple[int, ...]


@dataclass(frozen=True)
class NonSymLabel:
    """(partition, permutation) label with the minimal-length coset
    representative convention, so labels biject with monomials."""

    lam: Partition
    w: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "w", tuple(self.w))
        if len(self.lam) != len(self.w):
            raise ValueError("label partition and permutation lengths differ")
        if not is_min_coset_rep(self.lam, self.w):
            raise ValueError(
                f"{self.w} is not the minimal-length representative for {self.lam}"
            )

    @classmethod
    def from_composition(cls, comp) -> "NonSymLabel":
        lam, w = composition_to_label(tuple(comp))
        return cls(lam, w)

    def composition(self) -> tuple[int, ...]:
        return label_to_composition(self.lam, self.w)


@dataclass(frozen=True)
class FamilyPolynomial:
    """A constructed family member with its verified spectral data.

    ``eigenvalues`` is the joint spectrum in the Cherednik normalization:
    the Dhat_j eigenvalues for non-symmetric labels, and the tuple
    (lam_{N-j+1} + beta (j-1))_{j=1..N} for symmetric ones.  The Laguerre
    operators h_j realize twice these values.
    """

    label: object
    spec: FamilySpec
    poly: Polynomial
    construction: str
    eigenvalues: tuple[int, ...]

    def to_json_dict(self) -> dict:
        if isinstance(self.label, NonSymLabel):
            label = {"lambda": list(self.label.lam), "w": list(self.label.w)}
        else:
            label = {"lambda": list(self.label)}
        return {
            "label": label,
            "spec": self.spec.to_json_dict(),
            "construction": self.construction,
            "eigenvalues": [int(e) for e in self.eigenvalues],
            "poly": self.poly.to_json_dict(),
        }


# ---------------------------------------------------------------------------
# spectra


def composition_spectrum(comp, beta: int) -> tuple[int, ...]:
    """Diagonal Cherednik eigenvalue of the monomial x^comp:

        ev_j = comp_j + beta * (#{k<j : comp_k <= comp_j}
                                + #{k>j : comp_k < comp_j}).

    Derived by expanding Dhat_j on a monomial; fixes the eigenvalue
    orientation once and for all (the constant monomial has spectrum
    beta*(j-1)).
    """
    comp = tuple(comp)
    n = len(comp)
    out = []
    for j in range(n):
        rank = sum(1 for k in range(j) if comp[k] <= comp[j]) + sum(
            1 for k in range(j + 1, n) if comp[k] < comp[j]
        )
        out.append(comp[j] + beta * rank)
    return tuple(out)


def symmetric_spectrum(lam, n: int, beta: int) -> tuple[int, ...]:
    """Eigenvalue tuple (lam_{N-j+1} + beta (j-1))_{j=1..N} of the
    commuting symmetric family."""
    lam = pad_partition(lam, n)
    return tuple(lam[n - j] + beta * (j - 1) for j in range(1, n + 1))


def _elementary_symmetric(values, k: int) -> Fraction:
    values = list(values)
    if k == 0:
        return Fraction(1)
    table = [Fraction(0)] * (k + 1)
    table[0] = Fraction(1)
    for v in values:
        for i in range(min(k, len(table) - 1), 0, -1):
            table[i] += table[i - 1] * v
    return table[k]


# ---------------------------------------------------------------------------
# non-symmetric Jack


def nonsym_jack(label: NonSymLabel, spec: FamilySpec) -> FamilyPolynomial:
    if spec.family != JACK:
        raise ValueError("nonsym_jack needs a Jack spec")
    lam = pad_partition(label.lam, spec.n)
    label = NonSymLabel(lam, label.w)
    poly, spectrum = _nonsym_jack_poly(label.composition(), spec.n, spec.beta)
    _assert_nonsym_triangular(poly, label)
    return FamilyPolynomial(label, spec, poly, "triangular", spectrum)


@lru_cache(maxsize=None)
def _nonsym_jack_poly(comp, n: int, beta: int):
    """Triangular solve for the joint Cherednik eigenvector with leading
    monomial x^comp; returns (polynomial, spectrum)."""
    degree = sum(comp)
    basis = sorted(monomials_of_degree(n, degree), key=label_sort_key)
    index = {b: i for i, b in enumerate(basis)}
    top = index[tuple(comp)]
    spec = FamilySpec(JACK, n, beta)
    chers = [ops.cherednik_a(j, spec) for j in range(1, n + 1)]
    spectra = [composition_spectrum(b, beta) for b in basis]
    target = spectra[top]

    # images[j][i] = Dhat_j applied to the i-th basis monomial
    images = []
    for j in range(n):
        row = []
        for i in range(top + 1):
            img = chers[j](Polynomial.monomial(basis[i]))
            for exps in img.terms:
                if index[exps] > i:
                    raise HeckePolyError(
                        "triangularity violated in the Cherednik action"
                    )
            row.append(img)
        images.append(row)

    coeffs = [Fraction(0)] * (top + 1)
    coeffs[top] = Fraction(1)
    for i in range(top - 1, -1, -1):
        b = basis[i]
        residuals = []
        for j in range(n):
            r = Fraction(0)
            for i2 in range(i + 1, top + 1):
                if coeffs[i2]:
                    r += coeffs[i2] * images[j][i2].coefficient(b)
            residuals.append(r)
        for j in range(n):
            if target[j] != spectra[i][j]:
                coeffs[i] = residuals[j] / (target[j] - spectra[i][j])
                break
        else:
            if any(residuals):
                raise SpectrumCollisionError(
                    f"spectrum collision between {comp} and {b}"
                )
            coeffs[i] = Fraction(0)

    poly = Polynomial(n, {basis[i]: coeffs[i] for i in range(top + 1) if coeffs[i]})
    for j in range(n):
        if chers[j](poly) != poly * target[j]:
            raise SpectrumCollisionError(
                f"joint eigenvector solve inconsistent at {comp}"
            )
    return poly, target


def _assert_nonsym_triangular(poly: Polynomial, label: NonSymLabel) -> None:
    comp = label.composition()
    if poly.coefficient(comp) != 1:
        raise HeckePolyError("leading coefficient is not 1")
    pair = (label.lam, label.w)
    for exps in poly.terms:
        if exps == comp:
            continue
        if not precedes(composition_to_label(exps), pair):
            raise HeckePolyError(f"companion {exps} is not lower than the label")


# ---------------------------------------------------------------------------
# symmetric Jack


def jack(lam, spec: FamilySpec, method: str = "triangular") -> FamilyPolynomial:
    if spec.family != JACK:
        raise ValueError("jack needs a Jack spec")
    lam = pad_partition(lam, spec.n)
    if method == "triangular":
        poly = _jack_triangular(lam, spec.n, spec.beta)
    elif method == "symmetrized":
        poly = _jack_symmetrized(lam, spec.n, spec.beta)
    elif method == "rodrigues":
        from .raising import rodrigues

        return rodrigues(lam, spec)
    else:
        raise ValueError(f"unknown Jack construction {method!r}")
    _assert_symmetric_triangular(poly, lam)
    return FamilyPolynomial(
        lam, spec, poly, method, symmetric_spectrum(lam, spec.n, spec.beta)
    )


@lru_cache(maxsize=None)
def _jack_triangular(lam, n: int, beta: int) -> Polynomial:
    """Back-substitution against the commuting family e_k(Dhat_1..Dhat_N)
    on the monomial-symmetric basis of weight |lam|."""
    weight = sum(lam)
    basis = sorted(partitions_of(weight, n))  # ascending lex refines dominance
    index = {mu: i for i, mu in enumerate(basis)}
    top = index[lam]
    spec = FamilySpec(JACK, n, beta)
    chers = [ops.cherednik_a(j, spec) for j in range(1, n + 1)]

    def e_k_image(f: Polynomial, k: int) -> Polynomial:
        # e_k of the commuting operators, expanded over k-subsets
        import itertools

        total = Polynomial.zero(n)
        for subset in itertools.combinations(range(n), k):
            g = f
            for j in subset:
                g = chers[j](g)
            total = total + g
        return total

    def spectrum_values(mu) -> list[int]:
        return [mu[i] + beta * (n - 1 - i) for i in range(n)]

    eigen = [
        tuple(_elementary_symmetric(spectrum_values(mu), k) for k in range(1, n + 1))
        for mu in basis
    ]
    target = eigen[top]

    columns = []  # columns[i] = expansion of each e_k image of m_{basis[i]}
    for i in range(top + 1):
        m_mu = monomial_symmetric(n, basis[i])
        per_k = []
        for k in range(1, n + 1):
            expansion = to_monomial_basis(e_k_image(m_mu, k))
            for nu in expansion:
                if index[nu] > i:
                    raise HeckePolyError(
                        "triangularity violated in the symmetric action"
                    )
            per_k.append(expansion)
        columns.append(per_k)

    coeffs = [Fraction(0)] * (top + 1)
    coeffs[top] = Fraction(1)
    for i in range(top - 1, -1, -1):
        mu = basis[i]
        residuals = []
        for k in range(n):
            r = Fraction(0)
            for i2 in range(i + 1, top + 1):
                if coeffs[i2]:
                    r += coeffs[i2] * columns[i2][k].get(mu, Fraction(0))
            residuals.append(r)
        for k in range(n):
            if target[k] != eigen[i][k]:
                coeffs[i] = residuals[k] / (target[k] - eigen[i][k])
                break
        else:
            if any(residuals):
                raise SpectrumCollisionError(
                    f"spectrum collision between {lam} and {mu}"
                )
            coeffs[i] = Fraction(0)

    poly = Polynomial.zero(n)
    for i in range(top + 1):
        if coeffs[i]:
            poly = poly + coeffs[i] * monomial_symmetric(n, basis[i])
    return poly


def _jack_symmetrized(lam, n: int, beta: int) -> Polynomial:
    e_poly, _ = _nonsym_jack_poly(lam, n, beta)  # composition = lam, w = id
    total = Polynomial.zero(n)
    for w in all_permutations(n):
        total = total + apply_permutation(w, e_poly)
    return total * Fraction(1, stabilizer_order(lam))


def _assert_symmetric_triangular(poly: Polynomial, lam) -> None:
    expansion = to_monomial_basis(poly)
    if expansion.get(lam) != 1:
        raise HeckePolyError("leading coefficient of m_lam is not 1")
    for mu in expansion:
        if mu != lam and not extended_dominance_lt(mu, lam):
            raise HeckePolyError(f"companion {mu} is not below {lam}")


# ---------------------------------------------------------------------------
# intertwiners


def sigma_a(f: Polynomial, spec: FamilySpec) -> Polynomial:
    """Creation-substitution intertwiner, rational convention: homogeneous
    degree-d components map to 2^(-d) f(A_1..A_N) . 1."""
    if spec.family != HERMITE:
        raise ValueError("sigma_a needs a Hermite spec")
    n = spec.n
    creators = [ops.creation_a(j, spec) for j in range(1, n + 1)]
    result = Polynomial.zero(n)
    for degree, component in f.homogeneous_components().items():
        image = Polynomial.zero(n)
        for exps, coeff in component.terms.items():
            cur = Polynomial.one(n)
            for j, e in enumerate(exps):
                for _ in range(e):
                    cur = creators[j](cur)
            image = image + coeff * cur
        result = result + image * Fraction(1, 2**degree)
    return result


def sigma_b(f: Polynomial, spec: FamilySpec) -> Polynomial:
    """Squared-creation intertwiner: substitutes B_j^2/4 for x_j, applies to
    1, and re-encodes the (necessarily even) image in u = z^2."""
    if spec.family != LAGUERRE:
        raise ValueError("sigma_b needs a Laguerre spec")
    n = spec.n
    creators = [ops.creation_b(j, spec) for j in range(1, n + 1)]
    result = Polynomial.zero(n)
    for degree, component in f.homogeneous_components().items():
        image = Polynomial.zero(n)
        for exps, coeff in component.terms.items():
            cur = Polynomial.one(n)
            for j, e in enumerate(exps):
                for _ in range(2 * e):
                    cur = creators[j](cur)
            image = image + coeff * cur
        result = result + decode_even(image) * Fraction(1, 4**degree)
    return result


def encode_even(f_u: Polynomial) -> Polynomial:
    """u-polynomial -> even z-polynomial (u_j = z_j^2)."""
    return f_u.stretch(2)


def decode_even(f_z: Polynomial) -> Polynomial:
    """Even z-polynomial -> u-polynomial; raises on odd exponents."""
    out = {}
    for exps, coeff in f_z.terms.items():
        if any(e % 2 for e in exps):
            raise EvennessViolation("evenness violated")
        out[tuple(e // 2 for e in exps)] = coeff
    return Polynomial(f_z.nvars, out)


def rho_b_cherednik(j: int, spec: FamilySpec):
    """Image of the A-type Cherednik operator in the squared-variable
    representation: (1/2) h_j read through the u = z^2 codec."""
    h = ops.htilde(j, spec)

    def act(f_u: Polynomial) -> Polynomial:
        return decode_even(h(encode_even(f_u))) * Fraction(1, 2)

    return act


def rho_b_coordinate(j: int, spec: FamilySpec):
    """Image of multiplication by x_j: B_j^2/4 through the codec."""
    b = ops.creation_b(j, spec)

    def act(f_u: Polynomial) -> Polynomial:
        return decode_even(b(b(encode_even(f_u)))) * Fraction(1, 4)

    return act


# ---------------------------------------------------------------------------
# Hermite


def hermite(lam, spec: FamilySpec, method: str = "gram") -> FamilyPolynomial:
    if spec.family != HERMITE:
        raise ValueError("hermite needs a Hermite spec")
    lam = pad_partition(lam, spec.n)
    if method == "gram":
        poly = _hermite_gram(lam, spec)
    elif method == "intertwined":
        jack_poly = jack(lam, FamilySpec(JACK, spec.n, spec.beta)).poly
        poly = sigma_a(jack_poly, spec)
    elif method == "rodrigues":
        from .raising import rodrigues

        return rodrigues(lam, spec)
    else:
        raise ValueError(f"unknown Hermite construction {method!r}")
    _assert_symmetric_triangular(poly, lam)
    return FamilyPolynomial(
        lam, spec, poly, method, symmetric_spectrum(lam, spec.n, spec.beta)
    )


@lru_cache(maxsize=None)
def _hermite_gram_cached(lam, n: int, beta: int) -> Polynomial:
    from .pairings import gauss_pairing

    spec = FamilySpec(HERMITE, n, beta)
    return _gram_solve(
        lam, n, lambda f, g: gauss_pairing(f, g, spec).q
    )


def _hermite_gram(lam, spec: FamilySpec) -> Polynomial:
    return _hermite_gram_cached(lam, spec.n, spec.beta)


def _gram_solve(lam, n: int, pairing) -> Polynomial:
    """Monic-in-m_lam polynomial orthogonal to every m_mu with mu strictly
    below lam in the cross-degree dominance order."""
    companions = [
        mu
        for mu in partitions_up_to(sum(lam), n)
        if extended_dominance_lt(mu, lam)
    ]
    m_lam = monomial_symmetric(n, lam)
    if not companions:
        return m_lam
    basis = [monomial_symmetric(n, mu) for mu in companions]
    rows = [[pairing(b, m_nu) for b in basis] for m_nu in basis]
    rhs = [-pairing(m_lam, m_nu) for m_nu in basis]
    solution = _solve_linear(rows, rhs)
    poly = m_lam
    for coeff, b in zip(solution, basis):
        if coeff:
            poly = poly + coeff * b
    return poly


# ---------------------------------------------------------------------------
# Laguerre


def laguerre(lam, spec: FamilySpec, method: str = "gram") -> FamilyPolynomial:
    """Multivariable Laguerre polynomial, expressed in u_j = z_j^2."""
    if spec.family != LAGUERRE:
        raise ValueError("laguerre needs a Laguerre spec")
    lam = pad_partition(lam, spec.n)
    if method == "gram":
        poly = _laguerre_gram_cached(lam, spec.n, spec.beta, spec.gamma)
    elif method == "intertwined":
        jack_poly = jack(lam, FamilySpec(JACK, spec.n, spec.beta)).poly
        poly = sigma_b(jack_poly, spec)
    elif method == "rodrigues":
        from .raising import rodrigues

        return rodrigues(lam, spec)
    else:
        raise ValueError(f"unknown Laguerre construction {method!r}")
    _assert_symmetric_triangular(poly, lam)
    return FamilyPolynomial(
        lam, spec, poly, method, symmetric_spectrum(lam, spec.n, spec.beta)
    )


@lru_cache(maxsize=None)
def _laguerre_gram_cached(lam, n: int, beta: int, gamma) -> Polynomial:
    from .pairings import laguerre_pairing

    spec = FamilySpec(LAGUERRE, n, beta, gamma)
    return _gram_solve(lam, n, lambda f, g: laguerre_pairing(f, g, spec).q)


# ---------------------------------------------------------------------------
# non-symmetric Hermite / Laguerre


def nonsym_hermite(label: NonSymLabel, spec: FamilySpec) -> FamilyPolynomial:
    """Intertwiner image of the non-symmetric Jack polynomial; joint
    eigenvector of the h_j with the transported spectrum."""
    if spec.family != HERMITE:
        raise ValueError("nonsym_hermite needs a Hermite spec")
    base = nonsym_jack(
        NonSymLabel(pad_partition(label.lam, spec.n), label.w),
        FamilySpec(JACK, spec.n, spec.beta),
    )
    poly = sigma_a(base.poly, spec)
    _assert_image_leading(poly, base)
    return FamilyPolynomial(base.label, spec, poly, "intertwined", base.eigenvalues)


def nonsym_laguerre(label: NonSymLabel, spec: FamilySpec) -> FamilyPolynomial:
    """Squared-variable intertwiner image; the h_j realize twice the stored
    eigenvalues."""
    if spec.family != LAGUERRE:
        raise ValueError("nonsym_laguerre needs a Laguerre spec")
    base = nonsym_jack(
        NonSymLabel(pad_partition(label.lam, spec.n), label.w),
        FamilySpec(JACK, spec.n, spec.beta),
    )
    poly = sigma_b(base.poly, spec)
    _assert_image_leading(poly, base)
    return FamilyPolynomial(base.label, spec, poly, "intertwined", base.eigenvalues)


def _assert_image_leading(poly: Polynomial, base: FamilyPolynomial) -> None:
    comp = base.label.composition()
    if poly.coefficient(comp) != 1:
        raise HeckePolyError("intertwiner image lost its unit leading term")
    degree = sum(comp)
    pair = (base.label.lam, base.label.w)
    for exps in poly.terms:
        if sum(exps) == degree and exps != comp:
            if not precedes(composition_to_label(exps), pair):
                raise HeckePolyError(
                    f"companion {exps} is not lower than the label"
                )


# ---------------------------------------------------------------------------
# exact linear algebra


def _solve_linear(rows, rhs):
    """Solve a square exact-rational system by Gaussian elimination."""
    size = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(value)] for row, value in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            raise HeckePolyError("singular linear system in Gram construction")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][size] for r in range(size)]


def construct(label, spec: FamilySpec, method: str | None = None) -> FamilyPolynomial:
    """Family-dispatching convenience constructor used by the CLI."""
    if isinstance(label, NonSymLabel):
        if spec.family == JACK:
            return nonsym_jack(label, spec)
        if spec.family == HERMITE:
            return nonsym_hermite(label, spec)
        return nonsym_laguerre(label, spec)
    if spec.family == JACK:
        return jack(label, spec, method or "triangular")
    if spec.family == HERMITE:
        return hermite(label, spec, method or "gram")
    return laguerre(label, spec, method or "gram")
