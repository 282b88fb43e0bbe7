"""Independent oracles shared by the test modules.

These deliberately avoid the code paths they check: isotropy by integer
vector search, Hilbert symbols by bounded solubility search, isometry
inputs by random congruence transforms, and cyclic H^1 by the closed-form
ker(Norm)/im(g-1).
"""

from fractions import Fraction
from itertools import combinations, product

from g2tori.quadforms import QuadForm, quadform_from_gram
from g2tori.weyl import (
    identity_matrix,
    kernel_basis,
    mat_mul,
    snf_diagonal,
    solve_rational,
    w_mul,
    w_identity,
)


def find_isotropic_vector(diag, bound):
    """A nonzero integer vector with q(v) = 0 and coordinates <= bound.

    Searches supports of up to four coordinates with a meet-in-the-middle
    sum table, so it reaches eight-dimensional forms cheaply.  Returns None
    when nothing is found within the bound (the search is sound, not
    complete).
    """
    n = len(diag)
    for size in range(1, min(n, 4) + 1):
        for subset in combinations(range(n), size):
            vec = _search_support([diag[i] for i in subset], bound)
            if vec is not None:
                full = [0] * n
                for i, x in zip(subset, vec):
                    full[i] = x
                return tuple(full)
    return None


def _search_support(coeffs, bound):
    half = max(1, len(coeffs) // 2)
    left, right = coeffs[:half], coeffs[half:]
    table = {}
    for xs in product(range(bound + 1), repeat=len(left)):
        value = sum(a * x * x for a, x in zip(left, xs))
        nonzero = any(xs)
        if value not in table or (nonzero and not table[value][1]):
            table[value] = (xs, nonzero)
    for ys in product(range(bound + 1), repeat=len(right)):
        value = sum(a * y * y for a, y in zip(right, ys))
        match = table.get(-value)
        if match is None:
            continue
        xs, left_nonzero = match
        if left_nonzero or any(ys):
            return xs + ys
    return None


def hilbert_by_search(a, b, p):
    """Hilbert symbol by brute-force solubility of z^2 = a x^2 + b y^2.

    Searches primitive solutions mod p^3 (mod 16 for p = 2): a primitive
    solution there lifts p-adically for squarefree a, b.
    """
    import numpy as np

    mod = 16 if p == 2 else p ** 3
    zs = np.arange(mod, dtype=np.int64)
    sq_any = np.zeros(mod, dtype=bool)
    sq_any[np.unique((zs * zs) % mod)] = True
    units = zs[zs % p != 0]
    sq_unit = np.zeros(mod, dtype=bool)
    sq_unit[np.unique((units * units) % mod)] = True
    ax2 = (a % mod) * zs * zs % mod
    by2 = (b % mod) * zs * zs % mod
    grid = (ax2[:, None] + by2[None, :]) % mod
    unit_coord = zs % p != 0
    xy_primitive = unit_coord[:, None] | unit_coord[None, :]
    solvable = (sq_any[grid] & xy_primitive) | sq_unit[grid]
    return 1 if bool(solvable.any()) else -1


def hilbert_real_by_search(a, b):
    return 1 if (a > 0 or b > 0) else -1


def random_unimodular(n, rng, steps=8):
    """A random integer matrix of determinant +-1 (product of shears/swaps)."""
    m = [list(row) for row in identity_matrix(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        if kind == 0:
            c = rng.choice([-2, -1, 1, 2])
            m[i] = [x + c * y for x, y in zip(m[i], m[j])]
        elif kind == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return m


def congruence_rediagonalize(q: QuadForm, rng) -> QuadForm:
    """Apply a random congruence transform to the Gram matrix and
    re-diagonalize exactly."""
    n = q.dim
    u = random_unimodular(n, rng)
    gram = [
        [
            sum(Fraction(u[k][i]) * q.diag[k] * u[k][j] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return quadform_from_gram(gram)


def element_order(g):
    order = 1
    x = g
    while x.key != w_identity().key:
        x = w_mul(x, g)
        order += 1
    return order


def h1_cyclic(generator, lattice):
    """Closed form for cyclic groups: ker(Norm) / im(g - 1)."""
    a = lattice.act(generator)
    r = lattice.rank
    n = element_order(generator)
    norm = [[0] * r for _ in range(r)]
    power = identity_matrix(r)
    for _ in range(n):
        for i in range(r):
            for j in range(r):
                norm[i][j] += power[i][j]
        power = mat_mul(a, power)
    kern = kernel_basis(norm)
    if not kern:
        return []
    gm1_cols = [
        tuple(a[i][j] - (1 if i == j else 0) for i in range(r)) for j in range(r)
    ]
    coords = []
    for col in gm1_cols:
        x = solve_rational(kern, col)
        assert x is not None and all(v.denominator == 1 for v in x)
        coords.append([int(v) for v in x])
    coord_matrix = [list(row) for row in zip(*coords)]
    divisors = snf_diagonal(coord_matrix)
    assert all(d != 0 for d in divisors)
    return sorted(d for d in divisors if d > 1)


def random_nonzero_rational(rng, num_bound=9, den_bound=3) -> Fraction:
    num = rng.randint(-num_bound, num_bound)
    while num == 0:
        num = rng.randint(-num_bound, num_bound)
    return Fraction(num, rng.randint(1, den_bound))


def random_element(rng, dim, num_bound=5) -> tuple:
    return tuple(Fraction(rng.randint(-num_bound, num_bound)) for _ in range(dim))
