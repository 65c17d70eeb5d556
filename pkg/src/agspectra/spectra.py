"""Self-contained symmetric eigen machinery and the closed forms it verifies.

The spectral radius comes from power iteration on M + shift*I with
shift = max absolute row sum, which makes the iteration matrix positive
semidefinite-ordered so the largest eigenvalue of M is the dominant one.
Acceptance is by residual: the returned Rayleigh quotient rho satisfies
||M v - rho v|| <= tol * max(1, ||M||_F), which for symmetric M certifies
that rho is within that residual of a true eigenvalue.

Full spectra use cyclic Jacobi rotations; characteristic polynomials use
the Faddeev-LeVerrier trace recursion.  Both are adequate and well
conditioned at the orders handled here (n <= 64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class ConvergenceError(RuntimeError):
    """Raised when an iteration fails to reach its tolerance."""


@dataclass
class SpectralResult:
    radius: float
    vector: np.ndarray  # unit eigenvector
    residual: float
    iterations: int


def _as_symmetric(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if float(np.abs(a - a.T).max(initial=0.0)) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    return a


def spectral_radius(m, tol: float = 1e-10, max_iter: int = 200_000) -> SpectralResult:
    """Largest eigenvalue of a real symmetric matrix, certified by residual."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _as_symmetric(m)
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    shift = float(np.abs(a).sum(axis=1).max())
    if shift == 0.0:  # zero matrix
        v = np.zeros(n)
        v[0] = 1.0
        return SpectralResult(0.0, v, 0.0, 0)
    b = a + shift * np.eye(n)
    # tiny deterministic tilt: keeps the start off any exact orthogonal
    # complement of the dominant eigenvector
    x = 1.0 + np.arange(n) * (1e-8 / n)
    x /= np.linalg.norm(x)
    block = 16
    done = 0
    while done < max_iter:
        for _ in range(block):
            x = b @ x
        x /= np.linalg.norm(x)
        done += block
        ax = a @ x
        rho = float(x @ ax)
        res = float(np.linalg.norm(ax - rho * x))
        if res <= tol * scale:
            if x.sum() < 0.0:
                x = -x
            return SpectralResult(rho, x, res, done)
    raise ConvergenceError(f"power iteration did not reach tol={tol} in {max_iter} steps")


def full_spectrum(m, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of a real symmetric matrix, descending (cyclic Jacobi)."""
    a = _as_symmetric(m).copy()
    n = a.shape[0]
    if n == 1:
        return [float(a[0, 0])]
    scale = max(1.0, float(np.linalg.norm(a)))
    # rotations below this threshold cannot push the off-diagonal mass
    # above tol * scale even summed over the whole matrix
    skip = tol * scale / (n * n)
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        # summed directly over off-diagonal squares: the subtraction form
        # ||A||_F^2 - ||diag||^2 cancels and floors near sqrt(eps) * scale
        off = math.sqrt(float(np.sum(a[off_mask] ** 2)))
        if off <= tol * scale:
            return sorted((float(v) for v in np.diag(a)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
    raise ConvergenceError(f"jacobi sweeps did not reach tol={tol}")


def char_poly(m) -> np.ndarray:
    """Monic characteristic polynomial coefficients, descending powers.

    Faddeev-LeVerrier: M_1 = M, c_k = -tr(M M_{k-1} + c_{k-1} M)/k done via
    the running product; exact in exact arithmetic, well behaved in doubles
    for the small dense matrices used here.
    """
    a = _as_symmetric(m).astype(np.longdouble)
    n = a.shape[0]
    # the trace recursion cancels catastrophically in double around n ~ 13,
    # so accumulate in extended precision and round once at the end
    coeffs = np.empty(n + 1, dtype=np.longdouble)
    coeffs[0] = 1.0
    mk = a.copy()
    eye = np.eye(n, dtype=np.longdouble)
    for k in range(1, n + 1):
        ck = -np.trace(mk) / k
        coeffs[k] = ck
        if k < n:
            mk = a @ (mk + ck * eye)
    return coeffs.astype(float) + 0.0  # adding 0.0 clears negative zeros


def path_charpoly_closed(lam: float, n: int) -> float:
    """Characteristic polynomial of the n-vertex path's adjacency matrix.

    Away from |lam| = 2 this is ((x1^(n+1) - x2^(n+1)) / sqrt(lam^2 - 4))
    with x1, x2 = (lam +- sqrt(lam^2 - 4)) / 2; inside (-2, 2) the stable
    trigonometric equivalent sin((n+1) t)/sin(t) with lam = 2 cos(t); at
    lam = +-2 the analytic limit (n+1) (lam/2)^n.
    """
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    lam = float(lam)
    d = lam * lam - 4.0
    if abs(d) < 1e-12:
        half = math.copysign(1.0, lam)
        return (n + 1) * half**n
    if d > 0.0:
        s = math.sqrt(d)
        x1 = (lam + s) / 2.0
        x2 = (lam - s) / 2.0
        return (x1 ** (n + 1) - x2 ** (n + 1)) / s
    t = math.acos(lam / 2.0)
    return math.sin((n + 1) * t) / math.sin(t)


def double_star_radius(p: int, q: int) -> float:
    """Adjacency spectral radius of the double star DT(p, q), p >= q >= 1:
    sqrt((p + q + 1 + sqrt((p + q + 1)^2 - 4 p q)) / 2)."""
    if not p >= q >= 1:
        raise ValueError(f"double star needs p >= q >= 1, got p={p}, q={q}")
    s = p + q + 1
    return math.sqrt((s + math.sqrt(s * s - 4.0 * p * q)) / 2.0)


def largest_root(poly, lo: float, hi: float, tol: float = 1e-12, samples: int = 512) -> float:
    """Largest real root of ``poly`` in [lo, hi] by grid scan plus bisection.

    ``poly`` is either a callable or a coefficient sequence in descending
    powers.  Raises ValueError when no sign change (and no exact zero) is
    found on the grid.
    """
    if callable(poly):
        f = poly
    else:
        coeffs = np.asarray(poly, dtype=float)
        f = lambda x: float(np.polyval(coeffs, x))
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    xs = np.linspace(lo, hi, samples + 1)
    vals = [f(float(x)) for x in xs]
    for i in range(samples, 0, -1):
        if vals[i] == 0.0:
            return float(xs[i])
        if vals[i - 1] != 0.0 and (vals[i - 1] > 0.0) != (vals[i] > 0.0):
            a, b = float(xs[i - 1]), float(xs[i])
            fa = vals[i - 1]
            while b - a > tol:
                mid = (a + b) / 2.0
                fm = f(mid)
                if fm == 0.0:
                    return mid
                if (fa > 0.0) != (fm > 0.0):
                    b = mid
                else:
                    a, fa = mid, fm
            return (a + b) / 2.0
    if vals[0] == 0.0:
        return float(xs[0])
    raise ValueError("no sign change in [lo, hi]")
