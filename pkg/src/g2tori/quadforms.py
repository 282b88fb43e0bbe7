"""Diagonal quadratic forms over Q.

Complete invariants (dimension, signed determinant, signature, Hasse
symbols), isometry and Hasse-Minkowski isotropy decisions, Pfister
constructors, Witt decomposition, and the two-residue model for forms over
the Laurent series field Q((t)).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    Place,
    REAL_PLACE,
    TWO,
    SquareClass,
    hilbert_symbol,
    is_local_square,
    relevant_places,
    squarefree_class,
)


class EmptySlots(ValueError):
    """Pfister constructor called with no slots."""


@dataclass(frozen=True)
class QuadForm:
    """A nondegenerate diagonal quadratic form; entries are square classes."""

    diag: tuple[SquareClass, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "diag", tuple(squarefree_class(a) for a in self.diag)
        )

    @property
    def dim(self) -> int:
        return len(self.diag)

    def __repr__(self):
        return f"QuadForm({list(self.diag)})"


@dataclass(eq=False)
class FormInvariants:
    """Complete isometry invariants of a form over Q.

    ``hasse`` records the symbol at each relevant place; at omitted places it
    is +1, and equality treats missing keys accordingly.
    """

    dim: int
    disc: SquareClass
    signature: tuple[int, int]
    hasse: dict[Place, int] = field(default_factory=dict)

    def hasse_at(self, place: Place) -> int:
        return self.hasse.get(place, 1)

    def __eq__(self, other):
        if not isinstance(other, FormInvariants):
            return NotImplemented
        if (self.dim, self.disc, self.signature) != (
            other.dim,
            other.disc,
            other.signature,
        ):
            return False
        places = set(self.hasse) | set(other.hasse)
        return all(self.hasse_at(v) == other.hasse_at(v) for v in places)


@functools.lru_cache(maxsize=None)
def _invariants(diag: tuple[SquareClass, ...]) -> FormInvariants:
    dim = len(diag)
    if dim == 0:
        return FormInvariants(0, 1, (0, 0), {})
    disc = squarefree_class(_product(diag))
    pos = sum(1 for a in diag if a > 0)
    hasse = {}
    for v in relevant_places(diag):
        eps = 1
        for i in range(dim):
            for j in range(i + 1, dim):
                eps *= hilbert_symbol(diag[i], diag[j], v)
        hasse[v] = eps
    return FormInvariants(dim, disc, (pos, dim - pos), hasse)


def _product(entries) -> int:
    out = 1
    for a in entries:
        out *= a
    return out


def invariants(q: QuadForm) -> FormInvariants:
    return _invariants(q.diag)


def is_isometric(q1: QuadForm, q2: QuadForm) -> bool:
    """Isometry over Q; dim, disc, signature and Hasse symbols are complete."""
    return invariants(q1) == invariants(q2)


def _isotropic_inv(dim, disc, signature, hasse: dict) -> bool:
    # local conditions per dimension; Hasse-Minkowski glues them over Q
    pos, neg = signature
    if dim <= 1:
        return False
    if dim >= 5:
        return pos > 0 and neg > 0
    if dim == 2:
        return disc == -1
    places = set(hasse) | {REAL_PLACE, TWO}
    if dim == 3:
        for v in places:
            if hasse.get(v, 1) != hilbert_symbol(-1, -disc, v):
                return False
        return True
    # dim == 4: anisotropic at v iff disc is a local square and the Hasse
    # symbol differs from (-1,-1)_v
    for v in places:
        if is_local_square(disc, v) and hasse.get(v, 1) != hilbert_symbol(-1, -1, v):
            return False
    return True


def is_isotropic(q: QuadForm) -> bool:
    """Hasse-Minkowski isotropy decision over Q."""
    inv = invariants(q)
    return _isotropic_inv(inv.dim, inv.disc, inv.signature, inv.hasse)


def witt_decompose(q: QuadForm) -> tuple[int, int]:
    """Witt index and anisotropic kernel dimension.

    Hyperbolic planes are split off by invariant bookkeeping: removing one
    flips the sign of the determinant class and twists each Hasse symbol by
    (-1, disc')_v.
    """
    inv = invariants(q)
    dim, disc, (pos, neg) = inv.dim, inv.disc, inv.signature
    hasse = dict(inv.hasse)
    index = 0
    while dim >= 2 and _isotropic_inv(dim, disc, (pos, neg), hasse):
        new_disc = squarefree_class(-disc)
        hasse = {v: e * hilbert_symbol(-1, new_disc, v) for v, e in hasse.items()}
        dim -= 2
        disc = new_disc
        pos -= 1
        neg -= 1
        index += 1
    return index, dim


def represents_subform(q: QuadForm, s: QuadForm) -> bool:
    """Whether q is isometric to s orthogonal to some complement."""
    if s.dim > q.dim:
        raise ValueError("subform candidate exceeds the ambient dimension")
    if s.dim == 0:
        return True
    index, _ = witt_decompose(direct_sum(q, scale(s, -1)))
    return index >= s.dim


def scale(q: QuadForm, c) -> QuadForm:
    c = squarefree_class(c)
    return QuadForm(tuple(c * a for a in q.diag))


def direct_sum(*forms: QuadForm) -> QuadForm:
    diag: tuple = ()
    for q in forms:
        diag += q.diag
    return QuadForm(diag)


def tensor(q1: QuadForm, q2: QuadForm) -> QuadForm:
    return QuadForm(tuple(a * b for a in q1.diag for b in q2.diag))


def pfister(slots) -> QuadForm:
    """The Pfister form <<a_1,...,a_n>> = tensor of <1, -a_i>, n in 1..3."""
    slots = [squarefree_class(a) for a in slots]
    if not slots:
        raise EmptySlots("a Pfister form needs at least one slot")
    if len(slots) > 3:
        raise ValueError("at most three Pfister slots are supported")
    q = QuadForm((1,))
    for a in slots:
        q = direct_sum(q, scale(q, -a))
    return q


@dataclass(frozen=True)
class LaurentForm:
    """q1 + t*q2 over Q((t)), stored by its two residue forms."""

    q1: QuadForm
    q2: QuadForm


def laurent_is_isotropic(f: LaurentForm) -> bool:
    """Springer: q1 + t*q2 is isotropic iff one residue form is."""
    return is_isotropic(f.q1) or is_isotropic(f.q2)


def gram_diagonal(rows) -> list[Fraction]:
    """Diagonal entries of a symmetric rational matrix under congruence.

    Exact symmetric Gauss reduction; raises on degenerate input.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    diag = []
    for k in range(n):
        if m[k][k] == 0:
            pivot = None
            for i in range(k + 1, n):
                if m[i][i] != 0:
                    pivot = i
                    break
            if pivot is not None:
                _swap_sym(m, k, pivot)
            else:
                found = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if m[i][j] != 0:
                            found = (i, j)
                            break
                    if found:
                        break
                if found is None:
                    raise ValueError("degenerate symmetric matrix")
                i, j = found
                # basis move e_i += e_j makes the (i,i) entry 2*m[i][j]
                for t in range(n):
                    m[i][t] += m[j][t]
                for t in range(n):
                    m[t][i] += m[t][j]
                if i != k:
                    _swap_sym(m, k, i)
        p = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / p
            if f == 0:
                continue
            for t in range(n):
                m[i][t] -= f * m[k][t]
            for t in range(n):
                m[t][i] -= f * m[t][k]
        diag.append(p)
    return diag


def _swap_sym(m, i, j):
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def quadform_from_gram(rows) -> QuadForm:
    """Diagonalize a symmetric rational Gram matrix into a QuadForm."""
    return QuadForm(tuple(gram_diagonal(rows)))


def quadform_to_json(q: QuadForm) -> dict:
    return {"diag": list(q.diag)}


def quadform_from_json(obj) -> QuadForm:
    return QuadForm(tuple(_parse_rational(x) for x in obj["diag"]))


def laurent_to_json(f: LaurentForm) -> dict:
    return {"q1": list(f.q1.diag), "q2": list(f.q2.diag)}


def laurent_from_json(obj) -> LaurentForm:
    return LaurentForm(
        QuadForm(tuple(_parse_rational(x) for x in obj["q1"])),
        QuadForm(tuple(_parse_rational(x) for x in obj["q2"])),
    )


def _parse_rational(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise ValueError(f"not a rational literal: {x!r}")
