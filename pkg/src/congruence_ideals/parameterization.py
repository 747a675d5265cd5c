"""Explicit parameterization of roots for orders of narrow class number one.

With I_1 = Z[alpha] and both bases equal to the power basis, the table B_i is
multiplication by alpha^{d-i}, so C = sum c_i B_i is multiplication by xi.
Floating point is only used to pick unit powers; every returned object is
checked in exact arithmetic.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .correspondence import RootPair, ideal_to_pair
from .exact_linalg import (
    IntMatrix,
    adjugate,
    complete_to_unimodular,
    det,
    gcd_completion,
    inverse_unimodular,
    lattice_hnf,
    matmul,
    minor_det,
    submatrix,
)
from .ideals import IdealHNF
from .order_core import (
    MonicPoly,
    RootClass,
    companion_matrix,
    discriminant,
    gcd_many,
    mul_elements,
    mult_matrix,
    norm_element,
    roots_mod,
)

EMBED_TOL = 1e-9


class Degenerate(ValueError):
    """The ideal xi Z[alpha] does not have cyclic quotient, or xi is unusable."""


class SearchExhausted(LookupError):
    pass


def _mat_pow(A: IntMatrix, k: int) -> IntMatrix:
    d = len(A)
    R = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(k):
        R = matmul(R, A)
    return R


def element_inverse(F: MonicPoly, x: Sequence[int]) -> list[int]:
    """Inverse of a unit: the row vector y with y * M_x = 1."""
    Minv = inverse_unimodular(mult_matrix(x, F))
    return list(Minv[-1])


@dataclass(frozen=True)
class OrderData:
    F: MonicPoly
    signature: tuple[int, int]
    roots: tuple[complex, ...]  # one per place: real roots, then one of each conjugate pair
    fundamental_units: tuple[tuple[int, ...], ...]  # generators of the totally positive units
    torsion_units: tuple[tuple[int, ...], ...]  # totally positive roots of unity
    sign_units: tuple[tuple[int, ...], ...]  # units whose products fix real signs
    tables: tuple[IntMatrix, ...] = field(repr=False, default=())
    inv_units: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def d(self) -> int:
        return self.F.d

    def embed(self, x: Sequence[int]) -> np.ndarray:
        d = self.d
        return np.array([sum(complex(c) * th ** (d - 1 - i) for i, c in enumerate(x)) for th in self.roots])

    def log_vector(self, x: Sequence[int]) -> np.ndarray:
        r1, r2 = self.signature
        e = np.array([1.0] * r1 + [2.0] * r2)
        return e * np.log(np.abs(self.embed(x)))


def make_order_data(
    F: MonicPoly,
    fundamental_units: Sequence[Sequence[int]] = (),
    torsion_units: Sequence[Sequence[int]] = (),
    sign_units: Sequence[Sequence[int]] = (),
) -> OrderData:
    d = F.d
    rts = np.roots([1, *F.coeffs])
    real = sorted(float(r.real) for r in rts if abs(r.imag) < 1e-12)
    cplx = sorted((complex(r) for r in rts if r.imag > 1e-12), key=lambda z: (z.real, z.imag))
    places = tuple(complex(r) for r in real) + tuple(cplx)
    sig = (len(real), len(cplx))
    if sig[0] + 2 * sig[1] != d:
        raise ValueError("could not separate the embeddings")
    for th in places:
        if abs(sum(a * th ** (d - i) for i, a in enumerate((1,) + F.coeffs))) > EMBED_TOL * max(1.0, abs(th) ** d):
            raise ValueError("embedding residual too large")
    for u in itertools.chain(fundamental_units, torsion_units, sign_units):
        if abs(norm_element(u, F)) != 1:
            raise ValueError(f"{u} is not a unit")
    if len(fundamental_units) != sig[0] + sig[1] - 1:
        raise ValueError("wrong number of fundamental units for the signature")
    A = companion_matrix(F)
    tables = tuple(_mat_pow(A, d - 1 - i) for i in range(d))
    inv = tuple(tuple(element_inverse(F, u)) for u in fundamental_units)
    data = OrderData(
        F,
        sig,
        places,
        tuple(tuple(int(x) for x in u) for u in fundamental_units),
        tuple(tuple(int(x) for x in u) for u in torsion_units) or ((0,) * (d - 1) + (1,),),
        tuple(tuple(int(x) for x in u) for u in sign_units),
        tables,
        inv,
    )
    for u in data.fundamental_units + data.torsion_units:
        if not _totally_positive(data, u):
            raise ValueError(f"unit {u} is not totally positive")
    return data


def preset(name: str) -> OrderData:
    """Built-in orders of narrow class number one."""
    if name in ("x3-2", "0,0,-2"):
        # epsilon = 1 + alpha + alpha^2, inverse alpha - 1
        return make_order_data(MonicPoly([0, 0, -2]), [(1, 1, 1)], [], [(0, 0, -1)])
    if name in ("x2+1", "0,1"):
        return make_order_data(MonicPoly([0, 1]), [], [(0, 1), (1, 0), (0, -1), (-1, 0)], [])
    if name in ("x2-2", "0,-2"):
        # 1 + sqrt2 has norm -1, so its square generates the totally positive units
        return make_order_data(MonicPoly([0, -2]), [(2, 3)], [], [(0, -1), (1, 1)])
    raise KeyError(f"no preset for {name!r}")


def preset_for(F: MonicPoly) -> OrderData:
    return preset(",".join(str(a) for a in F.coeffs))


def _totally_positive(data: OrderData, x: Sequence[int]) -> bool:
    r1 = data.signature[0]
    emb = data.embed(x)
    return all(emb[j].real > 0 for j in range(r1))


def c_matrix(data: OrderData, c: Sequence[int]) -> IntMatrix:
    d = data.d
    C = [[0] * d for _ in range(d)]
    for ci, T in zip(c, data.tables):
        if ci:
            for r in range(d):
                for s in range(d):
                    C[r][s] += ci * T[r][s]
    return C


def _power(F: MonicPoly, u: Sequence[int], n: int) -> list[int]:
    out = [0] * (F.d - 1) + [1]
    for _ in range(n):
        out = mul_elements(out, u, F)
    return out


def _sign_normalize(data: OrderData, c: Sequence[int]) -> list[int]:
    F = data.F
    c = list(c)
    if _totally_positive(data, c):
        return c
    for mask in range(1, 1 << len(data.sign_units)):
        x = c
        for i, u in enumerate(data.sign_units):
            if mask >> i & 1:
                x = mul_elements(x, u, F)
        if _totally_positive(data, x):
            return x
    raise Degenerate("no sign change makes xi totally positive")


def domain_coords(data: OrderData, c: Sequence[int]) -> np.ndarray:
    """Coordinates of the balanced log vector in the fundamental unit basis."""
    r = len(data.fundamental_units)
    if r == 0:
        return np.zeros(0)
    L = data.log_vector(c)
    v = L[:r] - L.sum() / data.d * np.array(([1.0] * data.signature[0] + [2.0] * data.signature[1])[:r])
    U = np.array([data.log_vector(u)[:r] for u in data.fundamental_units]).T
    return np.linalg.solve(U, v)


def _torsion_arg(data: OrderData, c: Sequence[int]) -> float:
    r1, r2 = data.signature
    if r2 == 0:
        return 0.0
    return math.atan2(data.embed(c)[r1].imag, data.embed(c)[r1].real) % (2 * math.pi)


def reduce_to_domain(data: OrderData, c: Sequence[int]) -> list[int]:
    """Representative of the unit orbit of xi that lies in the fundamental domain."""
    if not any(c):
        raise Degenerate("xi = 0")
    F = data.F
    x = _sign_normalize(data, c)
    t = domain_coords(data, x)
    for i, ti in enumerate(t):
        n = -math.floor(ti + 0.5)
        if n > 0:
            x = mul_elements(x, _power(F, data.fundamental_units[i], n), F)
        elif n < 0:
            x = mul_elements(x, _power(F, data.inv_units[i], -n), F)
    if len(data.torsion_units) > 1:
        x = min((mul_elements(x, z, F) for z in data.torsion_units), key=lambda y: (_torsion_arg(data, y), y))
    return x


def in_domain(data: OrderData, c: Sequence[int]) -> bool:
    return list(c) == reduce_to_domain(data, c)


@dataclass(frozen=True)
class ParamWitness:
    c: tuple[int, ...]
    C: tuple[tuple[int, ...], ...]
    u: tuple[int, ...]
    gamma: tuple[tuple[int, ...], ...]
    m: int
    mu: int
    mu_powers: tuple[int, ...]  # last column of gamma*C above m, i.e. -mu^{d-1}, ..., -mu reduced
    k: int  # 1-based index of the largest minor det C_kd

    def to_json(self) -> dict:
        return {
            "c": list(self.c),
            "C": [list(r) for r in self.C],
            "u": list(self.u),
            "gamma": [list(r) for r in self.gamma],
            "m": self.m,
            "mu": self.mu,
            "mu_powers": list(self.mu_powers),
            "k": self.k,
        }

    def root(self) -> RootClass:
        return RootClass(self.m, self.mu)


def root_matrix(d: int, m: int, mu: int) -> IntMatrix:
    R = [[int(i == j) for j in range(d)] for i in range(d)]
    for i in range(d - 1):
        R[i][d - 1] = -pow(mu, d - 1 - i, m) % m
    R[d - 1][d - 1] = m
    return R


def _best_k(C: IntMatrix) -> int:
    d = len(C)
    vals = [abs(minor_det(C, i, d - 1)) for i in range(d)]
    return vals.index(max(vals)) + 1


def params_from_c(data: OrderData, c: Sequence[int], reduce: bool = True) -> ParamWitness:
    F = data.F
    d = F.d
    c = [int(x) for x in c]
    if not any(c):
        raise Degenerate("xi = 0")
    if reduce:
        c = reduce_to_domain(data, c)
    C = c_matrix(data, c)
    m = det(C)
    if m <= 0:
        raise Degenerate(f"norm {m} is not positive")
    weights = [(-1) ** (j + d) * minor_det(C, j - 1, d - 1) for j in range(1, d + 1)]
    g = gcd_many(*weights)
    if g != 1:
        raise Degenerate(f"gcd of the minors det C_jd is {g}")
    u = gcd_completion(weights)
    ginv = [row[: d - 1] + [uj] for row, uj in zip(C, u)]
    gamma = inverse_unimodular(ginv)
    R = matmul(gamma, C)
    if R[d - 1][d - 1] != m or any(R[i][j] != int(i == j) for i in range(d) for j in range(d - 1)):
        raise AssertionError("gamma*C is not of root-matrix shape")
    # left-multiply by a unipotent matrix so the last column lands in [0, m)
    for i in range(d - 1):
        q = R[i][d - 1] // m
        if q:
            R[i] = [a - q * b for a, b in zip(R[i], R[d - 1])]
            gamma[i] = [a - q * b for a, b in zip(gamma[i], gamma[d - 1])]
    mu = -R[d - 2][d - 1] % m
    if F(mu) % m:
        raise AssertionError("recovered mu is not a root")
    for i in range(d - 1):
        if (R[i][d - 1] + pow(mu, d - 1 - i, m)) % m:
            raise AssertionError("power column is inconsistent")
    ginv = inverse_unimodular(gamma)
    u = [row[d - 1] for row in ginv]
    return ParamWitness(
        tuple(c),
        tuple(tuple(r) for r in C),
        tuple(u),
        tuple(tuple(r) for r in gamma),
        m,
        mu,
        tuple(R[i][d - 1] for i in range(d - 1)),
        _best_k(C),
    )


def _norms_batch(data: OrderData, cs: np.ndarray) -> np.ndarray:
    """Exact norms of many xi at once (d <= 3, int64)."""
    T = np.array(data.tables, dtype=np.int64)
    C = np.einsum("ni,irs->nrs", cs.astype(np.int64), T)
    if data.d == 2:
        return C[:, 0, 0] * C[:, 1, 1] - C[:, 0, 1] * C[:, 1, 0]
    if data.d == 3:
        return (
            C[:, 0, 0] * (C[:, 1, 1] * C[:, 2, 2] - C[:, 1, 2] * C[:, 2, 1])
            - C[:, 0, 1] * (C[:, 1, 0] * C[:, 2, 2] - C[:, 1, 2] * C[:, 2, 0])
            + C[:, 0, 2] * (C[:, 1, 0] * C[:, 2, 1] - C[:, 1, 1] * C[:, 2, 0])
        )
    raise NotImplementedError("batched norms are implemented for d <= 3")


def _box(d: int, bound: int) -> np.ndarray:
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    return np.stack(np.meshgrid(*([r] * d), indexing="ij"), -1).reshape(-1, d)


def c_from_root(data: OrderData, root: RootClass, search_bound: int | None = None) -> list[int]:
    """The c-vector in the fundamental domain whose witness is the given root."""
    from .correspondence import root_to_ideal
    from .ideals import principal_ideal

    F = data.F
    m = root.m
    if gcd(m, discriminant(F)) != 1:
        raise ValueError("modulus must be coprime to the discriminant")
    if search_bound is None:
        search_bound = int(4 * m ** (1 / F.d) + 4)
    target = root_to_ideal(F, root)
    cs = _box(F.d, search_bound)
    cand = cs[np.abs(_norms_batch(data, cs)) == m]
    for c in cand:
        c = [int(x) for x in c]
        if principal_ideal(F, c).B == target.B:
            return reduce_to_domain(data, c)
    raise SearchExhausted(f"no generator with |c_i| <= {search_bound}")


@dataclass(frozen=True)
class HooleyParams:
    m1: int
    mu1: int
    m2: int
    mu2: int
    plucker: tuple[int, int, int, int, int, int]
    gamma: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]

    def pair(self, F: MonicPoly) -> RootPair:
        return ideal_to_pair(IdealHNF(F, self.R))


def hooley_vector(c1: int, c2: int, c3: int) -> tuple[int, int, int]:
    return (c2 * c2 - c1 * c3, 2 * c1 * c1 - c2 * c3, c3 * c3 - 2 * c1 * c2)


def hooley_params(c1: int, c2: int, c3: int) -> HooleyParams:
    """Root pair of xi = c1 alpha^2 + c2 alpha + c3 in Z[2^{1/3}] via Pluecker coordinates."""
    F = MonicPoly([0, 0, -2])
    if gcd_many(c1, c2, c3) != 1:
        raise Degenerate("c is not primitive")
    C = mult_matrix([c1, c2, c3], F)
    N = det(C)
    if N == 0:
        raise Degenerate("xi = 0")
    if N < 0:
        # -1 has norm -1 in odd degree
        c1, c2, c3 = -c1, -c2, -c3
        C = [[-x for x in r] for r in C]
        N = -N
    w0 = hooley_vector(c1, c2, c3)
    m1 = gcd_many(*w0)
    w = [x // m1 for x in w0]  # xi * (w0 as an element) = N, so xi xi' = N / m1 > 0
    v = [C[0][0], C[1][0], C[2][0]]  # (c3, c2, c1)
    if sum(a * b for a, b in zip(v, w)) != 0 or 2 * c1 * w[0] + c3 * w[1] + c2 * w[2] != 0:
        raise AssertionError("Pluecker conditions fail")
    P = complete_to_unimodular(v)
    p2 = [P[i][1] for i in range(3)]
    p3 = [P[i][2] for i in range(3)]
    s = sum(a * b for a, b in zip(w, p3))
    t = sum(a * b for a, b in zip(w, p2))
    x = [s * a - t * b for a, b in zip(p2, p3)]
    y = gcd_completion(w)
    ginv = [[v[i], x[i], y[i]] for i in range(3)]
    gamma = inverse_unimodular(ginv)
    if det(ginv) != 1 or gamma[2] != w:
        raise AssertionError("Pluecker completion failed")
    R = matmul(gamma, C)
    if R[1][0] or R[2][0] or R[2][1] or R[0][0] != 1 or R[1][1] <= 0 or R[2][2] <= 0:
        raise AssertionError(f"gamma*C is not upper triangular: {R}")
    # unipotent normalization: reduce into HNF range
    H = lattice_hnf(R)
    for i in range(3):
        if H[i][i] != R[i][i]:
            raise AssertionError("normalization changed the diagonal")
    m1r, m1m2 = R[1][1], R[2][2]
    if m1r != m1:
        raise AssertionError(f"m1 read-off {m1r} differs from gcd {m1}")
    m2 = m1m2 // m1
    mu1 = R[0][1] % m1
    mu2 = (-R[1][2] // m1) % m2
    gamma_n = matmul(matmul(H, inverse_unimodular_upper(R)), gamma)
    return HooleyParams(m1, mu1, m2, mu2, (v[0], v[1], v[2], w[0], w[1], w[2]), _tup(gamma_n), _tup(H))


def inverse_unimodular_upper(R: IntMatrix):
    # R is upper triangular; H R^{-1} is integral and unipotent, so return adj/det as Fractions
    d = det(R)
    return [[Fraction(x, d) for x in row] for row in adjugate(R)]


def _tup(M) -> tuple[tuple[int, ...], ...]:
    out = []
    for r in M:
        row = []
        for x in r:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise AssertionError("normalizer is not integral")
                x = x.numerator
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Approximation:
    k: int
    point: tuple[Fraction, ...]  # C_kd^{-1} u_k reduced mod 1
    error: tuple[Fraction, ...]  # mu-vector/m minus the unreduced point
    m_error: Fraction  # m * max |error_j|


def approximation(w: ParamWitness) -> Approximation:
    d = len(w.C)
    C = [list(r) for r in w.C]
    k = w.k
    Ck = submatrix(C, k - 1, d - 1)
    q = det(Ck)
    adj = adjugate(Ck)
    uk = [x for i, x in enumerate(w.u) if i != k - 1]
    ck = [C[i][d - 1] for i in range(d) if i != k - 1]
    raw = [Fraction(sum(a * b for a, b in zip(row, uk)), q) for row in adj]
    err = [-Fraction(sum(a * b for a, b in zip(row, ck)), q * w.m) for row in adj]
    # exact identity: mu^{d-1-j}/m = raw_j + err_j, with -mu_powers as the power representatives
    for j in range(d - 1):
        if Fraction(-w.mu_powers[j], w.m) != raw[j] + err[j]:
            raise AssertionError("approximation identity failed")
    point = tuple(x - math.floor(x) for x in raw)
    m_err = max((abs(e) * w.m for e in err), default=Fraction(0))
    # Cramer: m * |err_j| = |det C_kj| / |det C_kd|
    return Approximation(k, point, tuple(err), m_err)


@dataclass(frozen=True)
class TorsionPointLattice:
    q: int
    basis: tuple[tuple[int, ...], ...]  # columns generate the lattice
    shortest: Fraction  # squared length of a shortest nonzero vector
    shortest_vector: tuple[int, ...]

    @property
    def shortest_length(self) -> float:
        return math.sqrt(self.shortest)


def shortest_vector(basis_cols: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Exact shortest nonzero vector of a small full-rank integer lattice.

    Returns (squared length, vector); the basis is given as a list of columns.
    """
    cols = [list(c) for c in basis_cols]
    n = len(cols)
    sq = lambda v: sum(x * x for x in v)
    if n == 1:
        v = cols[0]
        return sq(v), tuple(v)
    if n == 2:
        a, b = cols
        # Lagrange-Gauss reduction in exact integers
        if sq(a) > sq(b):
            a, b = b, a
        while True:
            dot = sum(x * y for x, y in zip(a, b))
            t = round(Fraction(dot, sq(a)))
            b = [y - t * x for x, y in zip(a, b)]
            if sq(b) >= sq(a):
                return sq(a), tuple(a)
            a, b = b, a
    # general case: any v = B z with |v| <= L has |z_i| <= L * |row_i(B^{-1})|
    B = [[cols[j][i] for j in range(n)] for i in range(n)]
    D = det(B)
    adj = adjugate(B)
    best = min(cols, key=sq)
    L2 = sq(best)
    bounds = [math.isqrt(L2 * sum(x * x for x in adj[i]) // (D * D)) + 1 for i in range(n)]
    for z in itertools.product(*(range(-b, b + 1) for b in bounds)):
        if any(z):
            v = [sum(B[i][j] * z[j] for j in range(n)) for i in range(n)]
            s = sq(v)
            if s < L2:
                L2, best = s, v
    return L2, tuple(best)


def torsion_lattice(w: ParamWitness) -> TorsionPointLattice:
    d = len(w.C)
    Ck = submatrix([list(r) for r in w.C], w.k - 1, d - 1)
    q = abs(det(Ck))
    adj = adjugate(Ck)
    cols = [[adj[i][j] for i in range(d - 1)] for j in range(d - 1)]
    s2, v = shortest_vector(cols)
    return TorsionPointLattice(q, tuple(tuple(r) for r in adj), Fraction(s2), v)


def compactness_ratio(lat: TorsionPointLattice, d: int) -> float:
    """shortest / q^{(d-2)/(d-1)}; bounded below by a constant depending on F."""
    return lat.shortest_length / lat.q ** ((d - 2) / (d - 1)) if lat.q else float("inf")


def witness_census(data: OrderData, max_m: int, coprime_to: int = 1) -> list[ParamWitness]:
    """Every witness with m <= max_m (gcd(m, coprime_to) = 1), from c in the fundamental domain."""
    d = data.d
    r1, r2 = data.signature
    V = np.array([[th ** (d - 1 - i) for i in range(d)] for th in data.roots])
    # in the domain each log|xi^(j)| is within half the summed unit logs of log(N)/d
    spread = 0.5 * sum(float(np.max(np.abs(data.log_vector(u)))) for u in data.fundamental_units)
    size = max_m ** (1 / d) * math.exp(spread)
    rowsum = np.abs(np.linalg.pinv(np.vstack([V.real, V.imag]))).sum(axis=1).max()
    bound = int(math.ceil(size * rowsum)) + 2
    cs = _box(d, bound)
    N = _norms_batch(data, cs)
    keep = (N >= 1) & (N <= max_m)
    if coprime_to > 1:
        keep &= np.gcd(N, coprime_to) == 1
    cs, N = cs[keep], N[keep]
    # vectorized prefilter with slack; the exact per-candidate test follows
    E = cs.astype(float) @ V.T
    keep = np.all(E[:, :r1].real > 0, axis=1) if r1 else np.ones(len(cs), bool)
    if data.fundamental_units:
        w = np.array([1.0] * r1 + [2.0] * r2)
        L = w * np.log(np.abs(E))
        r = len(data.fundamental_units)
        v = L[:, :r] - np.log(N.astype(float))[:, None] / d * w[:r]
        U = np.array([data.log_vector(u)[:r] for u in data.fundamental_units]).T
        t = np.linalg.solve(U, v.T).T
        keep &= np.all(np.abs(t) <= 0.5 + 1e-6, axis=1)
    cs = cs[keep]
    out = []
    seen = set()
    for c in cs:
        c = [int(x) for x in c]
        if not _totally_positive(data, c) or not in_domain(data, c):
            continue
        try:
            w = params_from_c(data, c, reduce=False)
        except Degenerate:
            continue
        key = (w.m, w.mu)
        if key in seen:
            raise AssertionError(f"root {key} reached twice")
        seen.add(key)
        out.append(w)
    return sorted(out, key=lambda w: (w.m, w.mu))


@dataclass(frozen=True)
class SpacingResult:
    M: int
    radius: Fraction
    n_points: int
    max_occupancy: int
    histogram: dict


def root_points(F: MonicPoly, lo: int, hi: int) -> list[tuple[int, int]]:
    D = discriminant(F)
    return [(m, r.mu) for m in range(lo, hi + 1) if gcd(m, D) == 1 for r in roots_mod(F, m)]


def spacing_census(F: MonicPoly, M: int, radius: Fraction | None = None) -> SpacingResult:
    """Ball occupancies for the torus points of roots with M < m <= 2M."""
    if M < 10:
        raise ValueError("M must be at least 10")
    d = F.d
    radius = Fraction(1, M) if radius is None else Fraction(radius)
    pts = root_points(F, M + 1, 2 * M)
    exact = [tuple(Fraction(pow(mu, d - 1 - i, m), m) for i in range(d - 1)) for m, mu in pts]
    if not pts:
        return SpacingResult(M, radius, 0, 0, {})
    X = np.array([[float(x) for x in p] for p in exact]) % 1.0
    tree = cKDTree(X, boxsize=1.0)
    hits = tree.query_ball_point(X, float(radius) * (1 + 1e-9) + 1e-12)
    r2 = radius * radius
    occ = []
    for i, nb in enumerate(hits):
        n = 0
        for j in nb:
            dist2 = Fraction(0)
            for a, b in zip(exact[i], exact[j]):
                t = abs(a - b) % 1
                t = min(t, 1 - t)
                dist2 += t * t
            if dist2 <= r2:
                n += 1
        occ.append(n)
    hist: dict[int, int] = {}
    for n in occ:
        hist[n] = hist.get(n, 0) + 1
    return SpacingResult(M, radius, len(pts), max(occ), dict(sorted(hist.items())))
