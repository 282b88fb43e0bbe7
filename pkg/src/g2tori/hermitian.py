"""Rank-3 hermitian forms for Q(sqrt(d))/Q and their form invariants.

Covers the discriminant test (a norm condition delegated to Hilbert
symbols), normalization to <-b,-c,bc>, the associated 3- and 8-dimensional
invariant forms, the 9-dimensional trace form of the adjoint involution on
3x3 matrices, and the lambda-witness search used by the embedding
criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import (
    SquareClass,
    hilbert_symbol,
    relevant_places,
    squarefree_class,
)
from .etale import (
    CubicEtale,
    basis_mult_matrices,
    cubic_discriminant,
    lambda_candidates,
    trace_transfer_form,
)
from .quadforms import (
    QuadForm,
    is_isometric,
    is_isotropic,
    pfister,
    quadform_from_gram,
    scale,
    tensor,
)


class NontrivialDiscriminant(ValueError):
    """The hermitian discriminant is not a norm from the quadratic algebra."""


class MismatchedAlgebra(ValueError):
    """Operands live over different quadratic algebras."""


@dataclass(frozen=True)
class HermitianForm:
    """Diagonal rank-3 hermitian form <a1,a2,a3> for Q(sqrt(d))/Q."""

    d: SquareClass
    diag: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "d", squarefree_class(self.d))
        entries = tuple(Fraction(x) for x in self.diag)
        if len(entries) != 3 or any(x == 0 for x in entries):
            raise ValueError("a rank-3 hermitian form needs three nonzero entries")
        object.__setattr__(self, "diag", entries)


def has_trivial_discriminant(h: HermitianForm) -> bool:
    """Whether a1*a2*a3 is a norm from Q(sqrt(d)), i.e. (d, a1a2a3)_v = +1
    at every place."""
    cls = squarefree_class(h.diag[0] * h.diag[1] * h.diag[2])
    if h.d == 1:
        return True
    return all(
        hilbert_symbol(h.d, cls, v) == 1 for v in relevant_places([h.d, cls])
    )


def normalize_trivial_disc(h: HermitianForm) -> tuple[SquareClass, SquareClass]:
    """Parameters (b, c) with h isometric to <-b, -c, bc>.

    Hermitian entries only matter modulo norms, and triviality of the
    discriminant makes the third entry match automatically once the first
    two are normalized.
    """
    if not has_trivial_discriminant(h):
        raise NontrivialDiscriminant("h has nontrivial hermitian discriminant")
    b = squarefree_class(-h.diag[0])
    c = squarefree_class(-h.diag[1])
    assert hermitian_isometric(h, HermitianForm(h.d, (-b, -c, b * c)))
    return b, c


def hermitian_isometric(h1: HermitianForm, h2: HermitianForm) -> bool:
    """Jacobson's criterion: compare the 6-dimensional quadratic trace forms
    diag(h) tensor <1, -d>."""
    if h1.d != h2.d:
        raise MismatchedAlgebra("forms live over different quadratic algebras")
    t1 = tensor(QuadForm(h1.diag), QuadForm((1, -h1.d)))
    t2 = tensor(QuadForm(h2.diag), QuadForm((1, -h2.d)))
    return is_isometric(t1, t2)


def q_tau(h: HermitianForm) -> QuadForm:
    b, c = normalize_trivial_disc(h)
    return QuadForm((-b, -c, b * c))


def pi_form(h: HermitianForm) -> QuadForm:
    """The 3-Pfister invariant <<d, b, c>> of the adjoint involution."""
    b, c = normalize_trivial_disc(h)
    return pfister([h.d, b, c])


def is_distinguished(h: HermitianForm) -> bool:
    """Pfister forms are hyperbolic iff isotropic, so one isotropy test."""
    return is_isotropic(pi_form(h))


def _mat3(entries):
    return tuple(tuple(Fraction(x) for x in row) for row in entries)


def _mat3_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _mat3_trace(a):
    return a[0][0] + a[1][1] + a[2][2]


def involution_trace_form(h: HermitianForm) -> QuadForm:
    """The 9-dimensional trace form Trd(XY) on tau_h-symmetric 3x3 matrices.

    A matrix over Q(sqrt(d)) is stored as a pair (A, B) meaning A + B*sqrt(d);
    tau_h(X) = H^-1 conj(X)^T H with H = diag(a1,a2,a3).  Symmetry means H*A
    is symmetric and H*B antisymmetric, which gives the explicit 9-element
    basis below (denominators cleared; congruence preserves invariants).
    """
    if not has_trivial_discriminant(h):
        raise NontrivialDiscriminant("h has nontrivial hermitian discriminant")
    a = h.diag
    d = h.d
    basis = []
    for i in range(3):
        ei = [[Fraction(0)] * 3 for _ in range(3)]
        ei[i][i] = Fraction(1)
        basis.append((_mat3(ei), _mat3([[0] * 3] * 3)))
    for i in range(3):
        for j in range(i + 1, 3):
            sym = [[Fraction(0)] * 3 for _ in range(3)]
            sym[i][j] = a[j]
            sym[j][i] = a[i]
            basis.append((_mat3(sym), _mat3([[0] * 3] * 3)))
    for i in range(3):
        for j in range(i + 1, 3):
            alt = [[Fraction(0)] * 3 for _ in range(3)]
            alt[i][j] = a[j]
            alt[j][i] = -a[i]
            basis.append((_mat3([[0] * 3] * 3), _mat3(alt)))
    gram = [[Fraction(0)] * 9 for _ in range(9)]
    for i, (a1, b1) in enumerate(basis):
        for j, (a2, b2) in enumerate(basis):
            rational = _mat3_trace(_mat3_mul(a1, a2)) + d * _mat3_trace(_mat3_mul(b1, b2))
            irrational = _mat3_trace(_mat3_mul(a1, b2)) + _mat3_trace(_mat3_mul(b1, a2))
            assert irrational == 0  # the trace of a product of symmetric elements is rational
            gram[i][j] = rational
    return quadform_from_gram(gram)


def check_condition_ii(d, delta, t_form: QuadForm, b, c) -> bool:
    """<<d>> tensor delta*t is isometric to <<d>> tensor <-b,-c,bc>."""
    if t_form.dim != 3:
        raise ValueError("the transfer form must be 3-dimensional")
    d = squarefree_class(d)
    lhs = tensor(pfister([d]), scale(t_form, delta))
    rhs = tensor(pfister([d]), QuadForm((-b, -c, Fraction(b) * Fraction(c))))
    return is_isometric(lhs, rhs)


def lambda_witness_search(l: CubicEtale, d, b, c, height: int):
    """First lambda (by height, then lexicographic order) with square norm
    satisfying the transfer isometry; None when the search space is
    exhausted.  None is never a NO: the caller interprets it as
    inconclusive at this height.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    d = squarefree_class(d)
    delta = cubic_discriminant(l)
    mats = basis_mult_matrices(l)
    for lam in lambda_candidates(height):
        m = [
            [sum(lam[k] * mats[k][i][j] for k in range(3)) for j in range(3)]
            for i in range(3)
        ]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det <= 0:
            continue
        r = isqrt(det)
        if r * r != det:
            continue
        t_form = trace_transfer_form(l, lam)
        if check_condition_ii(d, delta, t_form, b, c):
            return lam, t_form
    return None


def hermitian_to_json(h: HermitianForm) -> dict:
    return {
        "hermitian": {
            "d": h.d,
            "diag": [int(x) if x.denominator == 1 else str(x) for x in h.diag],
        }
    }


def _parse_rational(x):
    return Fraction(x) if isinstance(x, str) else Fraction(x)


def hermitian_from_json(obj) -> HermitianForm:
    spec = obj["hermitian"]
    return HermitianForm(spec["d"], tuple(_parse_rational(x) for x in spec["diag"]))
