"""Spectral radius with certified residuals, exact characteristic polynomials,
and algebraic certification of equality cases.

Two tiers of tolerance run through everything here: library computations aim
at 1e-12 residuals, theorem predicates decide with 1e-9 slack, and anything
within 1e-6 of a threshold is escalated to exact arithmetic (integer
characteristic polynomials evaluated in Z[sqrt(D)]), so no equality case is
ever classified from floating point alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt

import numpy as np

from .graphs import Graph, GraphError, bits, components, is_complete, is_star

TOL_DEFAULT = 1e-12
DECISION_SLACK = 1e-9
EXACT_SCREEN = 1e-6
ITERATION_CAP = 10**6
CHARPOLY_MAX_N = 24


class SpectraError(GraphError):
    pass


class SizeLimitError(SpectraError):
    pass


class ConvergenceError(SpectraError):
    def __init__(self, message, certificate):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class SpectralCertificate:
    """Floating spectral radius with an eigenpair residual bound.

    ``perron`` is L2-unit and strictly positive on the achieving connected
    component, zero elsewhere; ``residual`` is ||A x - rho x||_inf.
    """

    rho: float
    perron: tuple[float, ...]
    residual: float
    iterations: int
    component: int


def adjacency_matrix(G: Graph) -> np.ndarray:
    A = np.zeros((G.n, G.n))
    for v in range(G.n):
        for u in bits(G.rows[v]):
            A[v, u] = 1.0
    return A


def rho_float(G: Graph) -> float:
    """Fast spectral radius via the dense symmetric eigensolver.

    Used for bulk screening in verification sweeps; certificates and
    near-threshold cases go through spectral_radius / exact certification.
    """
    if G.n == 0:
        raise SpectraError("empty graph has no spectral radius")
    if G.m == 0:
        return 0.0
    return float(np.linalg.eigvalsh(adjacency_matrix(G))[-1])


def spectral_radius(G: Graph, tol: float = TOL_DEFAULT) -> SpectralCertificate:
    """Power iteration on A+I per connected component.

    The identity shift defeats the period-2 oscillation on bipartite
    components while keeping the Perron pair; the start vector is all-ones,
    so the whole computation is deterministic.
    """
    if G.n < 1:
        raise SpectraError("need n >= 1")
    if tol <= 0:
        raise SpectraError("need tol > 0")
    comps = components(G)
    best = None  # (rho, comp_index, x_local, verts, residual, iterations)
    total_iter = 0
    for ci, comp in enumerate(comps):
        verts = list(bits(comp))
        k = len(verts)
        if k == 1:
            cand = (0.0, ci, np.ones(1), verts, 0.0, 0)
        else:
            sub = G.induced(comp)
            M = adjacency_matrix(sub) + np.eye(k)
            x = np.full(k, 1.0 / sqrt(k))
            it = 0
            residual = float("inf")
            lam = 0.0
            while it < ITERATION_CAP:
                y = M @ x
                lam = float(x @ y)
                residual = float(np.max(np.abs(y - lam * x)))
                if residual <= tol:
                    break
                nrm = float(np.linalg.norm(y))
                x = y / nrm
                it += 1
            cand = (lam - 1.0, ci, x, verts, residual, it)
            if residual > tol:
                full = _assemble_certificate(G, cand, total_iter + it)
                raise ConvergenceError(
                    f"power iteration did not reach tol={tol} within {ITERATION_CAP} "
                    f"iterations (residual {residual:.3e})",
                    full,
                )
        total_iter += cand[5]
        if best is None or cand[0] > best[0] + 0.0:
            best = cand
    return _assemble_certificate(G, best, total_iter)


def _assemble_certificate(G, cand, iterations) -> SpectralCertificate:
    rho, ci, x, verts, residual, _ = cand
    perron = [0.0] * G.n
    for i, v in enumerate(verts):
        perron[v] = abs(float(x[i]))
    return SpectralCertificate(
        rho=float(rho),
        perron=tuple(perron),
        residual=float(residual),
        iterations=int(iterations),
        component=int(ci),
    )


# ---------------------------------------------------------------------------
# exact characteristic polynomial
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharPoly:
    """det(xI - A) with exact integer coefficients, coeffs[k] on x^k."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def char_poly(G: Graph) -> CharPoly:
    """Faddeev-LeVerrier over Python ints; n <= 24 keeps the cost trivial."""
    n = G.n
    if n > CHARPOLY_MAX_N:
        raise SizeLimitError(f"char_poly: n = {n} exceeds cap {CHARPOLY_MAX_N}")
    if n == 0:
        return CharPoly((1,))
    A = [[1 if G.rows[v] >> u & 1 else 0 for u in range(n)] for v in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # N_1 = I
    for k in range(1, n + 1):
        AN = _mat_mul(A, N)
        tr = sum(AN[i][i] for i in range(n))
        assert tr % k == 0, "Faddeev-LeVerrier trace division must be exact"
        c = -(tr // k)
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                AN[i][i] += c
            N = AN
    # trace and edge-count identities, asserted on every call
    assert coeffs[n - 1] == 0, "coefficient of x^(n-1) must be 0"
    if n >= 2:
        assert coeffs[n - 2] == -G.m, "coefficient of x^(n-2) must be -m"
    return CharPoly(tuple(coeffs))


def _mat_mul(A, B):
    n = len(A)
    rng = range(n)
    out = [[0] * n for _ in rng]
    for i in rng:
        Ai = A[i]
        Oi = out[i]
        for k in rng:
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in rng:
                    Oi[j] += a * Bk[j]
    return out


def quadratic_remainder(poly: CharPoly, p: int, q: int) -> tuple[int, int]:
    """Exact remainder (c1, c0) of the polynomial modulo x^2 - p x - q."""
    work = list(poly.coeffs)
    for k in range(len(work) - 1, 1, -1):
        c = work[k]
        if c:
            work[k] = 0
            work[k - 1] += p * c
            work[k - 2] += q * c
    return (work[1] if len(work) > 1 else 0, work[0])


@dataclass(frozen=True)
class QuadraticCertificate:
    remainder: tuple[int, int]
    divides: bool
    rho_matches_root: bool
    root: float


def certify_quadratic_eigenfactor(G: Graph, p: int, q: int) -> QuadraticCertificate:
    """Certify that x^2 - p x - q divides char_poly(G) exactly.

    A zero remainder proves both quadratic roots are eigenvalues; combined
    with the floating spectral radius matching the larger root to 1e-9 this
    certifies rho(G) equals that algebraic number.
    """
    rem = quadratic_remainder(char_poly(G), p, q)
    disc = p * p + 4 * q
    root = (p + sqrt(disc)) / 2.0 if disc >= 0 else float("nan")
    divides = rem == (0, 0)
    matches = divides and abs(rho_float(G) - root) <= DECISION_SLACK
    return QuadraticCertificate(rem, divides, matches, root)


# ---------------------------------------------------------------------------
# exact evaluation at quadratic irrationals
# ---------------------------------------------------------------------------


def quad_eval(coeffs, c: int, q: int, D: int):
    """Evaluate sum coeffs[k] x^k at x = (c + sqrt(D)) / q, exactly.

    Returns a Fraction when D is a perfect square, else a pair of Fractions
    (a, b) meaning a + b*sqrt(D); (0, 0) iff the value is zero (sqrt(D)
    irrational makes the representation unique).
    """
    if D < 0:
        raise SpectraError("quad_eval: need D >= 0")
    s = isqrt(D)
    if s * s == D:
        x = Fraction(c + s, q)
        acc = Fraction(0)
        for ck in reversed(coeffs):
            acc = acc * x + ck
        return acc
    fa, fb = Fraction(0), Fraction(0)
    xc, xq = Fraction(c, q), Fraction(1, q)
    for ck in reversed(coeffs):
        fa, fb = fa * xc + fb * xq * D + ck, fa * xq + fb * xc
    return (fa, fb)


def quad_sign(coeffs, c: int, q: int, D: int) -> int:
    """Exact sign (-1, 0, +1) of the quad_eval value."""
    val = quad_eval(coeffs, c, q, D)
    if isinstance(val, Fraction):
        return (val > 0) - (val < 0)
    a, b = val
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 with b^2 D on the dominant side
    if a > 0:  # b < 0
        return 1 if a * a > b * b * D else -1
    return -1 if a * a > b * b * D else 1


@dataclass(frozen=True)
class SqrtCertificate:
    is_exact: bool
    poly_zero: bool
    float_close: bool


def certify_rho_equals_sqrt(G: Graph) -> SqrtCertificate:
    """Decide rho(G) = sqrt(m) with no floating-point equality test.

    Evaluates char_poly at sqrt(m) in Z[sqrt(m)] (exact); the floating check
    only confirms sqrt(m) is the *largest* root.
    """
    m = G.m
    poly = char_poly(G)
    val = quad_eval(poly.coeffs, 0, 1, m)
    poly_zero = (val == 0) if isinstance(val, Fraction) else (val[0] == 0 and val[1] == 0)
    float_close = abs(rho_float(G) - sqrt(m)) <= DECISION_SLACK
    return SqrtCertificate(poly_zero and float_close, poly_zero, float_close)


def rho_high_precision(G: Graph, dps: int = 60):
    """Spectral radius as an mpmath float from the exact charpoly roots.

    Only used to settle near-threshold comparisons that the exact quadratic
    tests leave open; n <= 24 applies.
    """
    import mpmath

    poly = char_poly(G)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c) for c in reversed(poly.coeffs)]
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=120)
        best = max((mpmath.re(r) for r in roots), default=mpmath.mpf(0))
        return +best


# ---------------------------------------------------------------------------
# closed forms for named families
# ---------------------------------------------------------------------------


def largest_root_bisect(coeffs, lo: float, hi: float, eps: float = 1e-13) -> float:
    """Largest real root by bisection; needs f(lo) <= 0 < f(hi) with no root
    above hi (monic polynomials with hi at the Cauchy bound satisfy this)."""

    def f(x):
        acc = 0.0
        for ck in reversed(coeffs):
            acc = acc * x + ck
        return acc

    if f(lo) > 0:
        raise SpectraError(f"bisection bracket invalid: f({lo}) > 0")
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def _cauchy_bound(coeffs) -> float:
    return 1.0 + max(abs(float(c)) for c in coeffs[:-1])


def snk_polynomial(n: int, k: int) -> tuple[int, ...]:
    """Cubic whose largest root is rho of the star-plus-matching family."""
    return (n - 1 - 2 * k, -(n - 1), -1, 1)


def hts_rk_polynomial(t: int, k: int) -> tuple[int, ...]:
    """Cubic whose largest root is rho of the hub-joined K_4 blocks family
    with t pendant hub neighbours (the s = 0 case)."""
    return (2 * t, -(3 * k + t), -2, 1)


def book_polynomial(m: int) -> tuple[int, ...]:
    return (-(m - 1), -1, 1)


def family_rho_closed_form(spec) -> float:
    """Closed-form spectral radius for the supported named families.

    Supported: star, complete bipartite, star-plus-matching, books /
    2-dominating complete splits, and hts_rk with s = 0 and no cross edges.
    """
    from .graphs import FamilySpec, build_family

    if not isinstance(spec, FamilySpec):
        raise SpectraError("family_rho_closed_form: need a FamilySpec")
    kind, p = spec.kind, spec.params
    if kind == "star":
        return sqrt(p[0])
    if kind == "complete_bipartite":
        return sqrt(p[0] * p[1])
    if kind == "snk":
        n, k = p
        build_family(spec)  # parameter-domain validation
        if k == 0:
            return sqrt(n - 1)
        poly = snk_polynomial(n, k)
        # f(1) = -2k < 0 for k >= 1, so [1, cauchy] brackets the largest root
        return largest_root_bisect(poly, 1.0, _cauchy_bound(poly))
    if kind == "book" or (kind == "complete_split" and p[1] == 2):
        G = build_family(spec)
        poly = book_polynomial(G.m)
        return largest_root_bisect(poly, 1.0, _cauchy_bound(poly))
    if kind == "hts_rk" and p[1] == 0 and not spec.cross_edges:
        t, _s, k = p
        poly = hts_rk_polynomial(t, k)
        # f(2) = -6k < 0 for k >= 1
        return largest_root_bisect(poly, 2.0, _cauchy_bound(poly))
    raise SpectraError(
        "family_rho_closed_form supports star, complete_bipartite, snk, "
        f"book/complete_split(.,2), hts_rk(t,0,k); got {spec}"
    )


# ---------------------------------------------------------------------------
# inequality checks from the deletion and coordinate lemmas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DeletionBoundResult:
    holds: bool
    equality: bool
    lhs: float          # rho(G)^2
    rhs: float          # rho(G - v)^2 + 2 d(v) - 1

    def __bool__(self):
        return self.holds


def deletion_bound_check(G: Graph, v: int) -> DeletionBoundResult:
    """rho(G)^2 <= rho(G-v)^2 + 2 d(v) - 1, within 1e-9.

    Equality is flagged structurally: complete graphs, and stars with a
    degree-1 deleted vertex.
    """
    d = G.degree(v)
    if d < 1:
        raise SpectraError("deletion_bound_check: vertex must have degree >= 1")
    lhs = rho_float(G) ** 2
    rest = G.delete_vertex(v)
    rho_rest = rho_float(rest) if rest.n else 0.0
    rhs = rho_rest**2 + 2 * d - 1
    holds = lhs <= rhs + DECISION_SLACK
    equality = is_complete(G) or (is_star(G) and d == 1)
    return DeletionBoundResult(holds, equality, lhs, rhs)


def perron_coordinate_bound_check(G: Graph, tol: float = TOL_DEFAULT) -> bool:
    """Max Perron coordinate <= 1/sqrt(2) + 1e-9 (the p = 2 coordinate bound)."""
    from .graphs import is_connected

    if not is_connected(G):
        raise SpectraError("perron_coordinate_bound_check: graph must be connected")
    cert = spectral_radius(G, tol)
    return max(cert.perron) <= 1 / sqrt(2) + DECISION_SLACK


# ---------------------------------------------------------------------------
# theorem thresholds
# ---------------------------------------------------------------------------


def sqrt_bound(m: int) -> float:
    return sqrt(m)


def nikiforov_bound(r: int, m: int) -> float:
    """K_{r+1}-free bound sqrt(2m(1 - 1/r))."""
    return sqrt(2.0 * m * (1.0 - 1.0 / r))


def book_bound(m: int) -> float:
    """(1 + sqrt(4m-3))/2: the pentagon/hexagon-free bound."""
    return (1.0 + sqrt(4.0 * m - 3.0)) / 2.0


def consecutive_cycles_threshold(k: int, m: int) -> float:
    """Above this, cycles of every length t <= 2k+2 must appear."""
    h = k - 0.5
    return (h + sqrt(4.0 * m + h * h)) / 2.0


def conjecture_cycles_threshold(k: int, m: int) -> float:
    return (k - 1.0 + sqrt(4.0 * m - k * k + 1.0)) / 2.0
