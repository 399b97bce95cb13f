"""Radial Gelfand solver on the unit ball B^m.

The boundary-value problem on B^m (m >= 1) is

    u'' + (m-1)/r u' + lam * exp(u) = 0,    u'(0) = 0,  u(1) = 0,

parameterised by the centre value a = u(0) = ||u||_inf.  Two exact
reductions drive everything in this module:

* Shooting rescale.  If w solves the lam = 1 initial-value problem with
  w(0) = a, w'(0) = 0 and R is its first zero, then u(r) = w(R r) solves
  the boundary-value problem with lam = R**2.
* Centre shift.  w_a(r) = a + w_0(exp(a/2) r), so a single "master"
  integration of the a = 0 problem carries the whole branch: the first
  zero of w_a sits where the master solution has dropped to -a, and

      lam(a) = exp(-a) * xi(a)**2,      w_0(xi(a)) = -a.

The master curve is integrated with a classical fixed-step RK4 scheme,
directly in xi on [0, 1] (with a short series start that clears the
(m-1)/r coordinate singularity) and in s = log(xi) further out, where
the solution tracks the singular profile -2 log(xi) + log(2(m-2)) and a
logarithmic step keeps the work bounded for arbitrarily large a.  In
s-coordinates W = 2s + V obeys the autonomous equation

    W'' + (m-2) W' + exp(W) = 2(m-2),

whose spiral (3 <= m <= 9) / nodal (m >= 10) approach to W = log(2(m-2))
is exactly the fold structure of the bifurcation diagram; resolving the
late, exponentially small oscillations of lam(a) - 2(m-2) is why the
integration runs in extended precision where the platform provides it.
"""

from __future__ import annotations

import math
import threading
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import brentq

from .errors import NoZeroFound, NonFiniteState, OutOfRange, TangencyWarning

__all__ = [
    "RadialProfile",
    "BranchPoint",
    "BifurcationDiagram",
    "ClosedFormRoots",
    "shoot_first_zero",
    "radial_solution",
    "sweep_branch",
    "lambda_star",
    "count_solutions",
    "branch_crossings",
    "branch_curve",
    "closed_form_1d",
    "closed_form_2d",
    "lambda_c_1d",
    "profile_residual",
    "DEFAULT_PROFILE_POINTS",
]

DEFAULT_PROFILE_POINTS = 2048

# Master-curve integration configuration.  Extended precision (80-bit on
# x86) pushes the usable oscillation floor of lam(a) - 2(m-2) from ~1e-10
# down to ~1e-13; on platforms where longdouble aliases double the code
# still works, with a correspondingly higher noise floor.
_PHASE1_STEP = 1.0 / 1024.0
_PHASE2_STEP = 2.0e-4
_SERIES_STEPS = 8
_LONGDOUBLE = np.finfo(np.longdouble).eps < 1e-18
_DTYPE = np.longdouble if _LONGDOUBLE else np.float64
_NOISE_FLOOR_REL = 5e-13 if _LONGDOUBLE else 5e-10


# ---------------------------------------------------------------------------
# cubic Hermite helpers (dtype-generic)
# ---------------------------------------------------------------------------

def _hermite(x, x0, x1, f0, f1, d0, d1):
    """Cubic Hermite interpolant on [x0, x1]; works on scalars or arrays."""
    h = x1 - x0
    t = (x - x0) / h
    t2 = t * t
    t3 = t2 * t
    return ((2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * h * d0
            + (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * h * d1)


def _bisect(fun, lo, hi, flo, n_iter=110):
    """Sign-change bisection in the working dtype; returns the midpoint."""
    neg = flo < 0
    for _ in range(n_iter):
        mid = (lo + hi) / 2
        if mid == lo or mid == hi:
            break
        fm = fun(mid)
        if (fm < 0) == neg:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


# ---------------------------------------------------------------------------
# master curve
# ---------------------------------------------------------------------------

class _MasterCurve:
    """Dense a = 0, lam = 1 radial solution for one dimension m.

    Phase 1 stores (xi, v, dv/dxi) on [0, 1]; phase 2 stores
    (s, V, dV/ds) with s = log(xi) >= 0 and grows on demand.
    """

    def __init__(self, m: int):
        self.m = m
        self._lock = threading.RLock()
        self._f64_dirty = True
        self._integrate_phase1()
        # phase 2 state (grown lazily)
        self._s = [0.0]
        self._V = [float(self.v1[-1])]
        self._P = [float(self.p1[-1])]
        self._state = (_DTYPE(0.0), self.v1[-1], self.p1[-1])

    # -- phase 1 -----------------------------------------------------------

    def _series(self, xi):
        m = self.m
        c2 = _DTYPE(-1.0) / (2 * m)
        c4 = _DTYPE(1.0) / (8 * m * (m + 2))
        c6 = _DTYPE(-(m + 1)) / (24.0 * m * m * (m + 2) * (m + 4))
        v = c2 * xi ** 2 + c4 * xi ** 4 + c6 * xi ** 6
        p = 2 * c2 * xi + 4 * c4 * xi ** 3 + 6 * c6 * xi ** 5
        return v, p

    def _integrate_phase1(self):
        m = self.m
        h = _DTYPE(_PHASE1_STEP)
        ks = _SERIES_STEPS
        xs, vs, ps = [], [], []
        for k in range(ks + 1):
            x = k * h
            v, p = self._series(x)
            xs.append(x)
            vs.append(v)
            ps.append(p)
        x, v, p = xs[-1], vs[-1], ps[-1]
        mm1 = _DTYPE(m - 1)
        exp = np.exp
        n_steps = round(float((1.0 - ks * float(h)) / float(h)))
        half = h / 2
        for _ in range(n_steps):
            k1v = p
            k1p = -mm1 / x * p - exp(v)
            xm = x + half
            v2 = v + half * k1v
            p2 = p + half * k1p
            k2v = p2
            k2p = -mm1 / xm * p2 - exp(v2)
            v3 = v + half * k2v
            p3 = p + half * k2p
            k3v = p3
            k3p = -mm1 / xm * p3 - exp(v3)
            xe = x + h
            v4 = v + h * k3v
            p4 = p + h * k3p
            k4v = p4
            k4p = -mm1 / xe * p4 - exp(v4)
            v = v + h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
            p = p + h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p)
            x = xe
            xs.append(x)
            vs.append(v)
            ps.append(p)
        self.xi1 = np.array(xs, dtype=_DTYPE)
        self.v1 = np.array(vs, dtype=_DTYPE)
        self.p1 = np.array(ps, dtype=_DTYPE)
        if not np.all(np.isfinite(np.asarray(self.v1, dtype=np.float64))):
            raise NonFiniteState("master integration overflowed in phase 1")

    # -- phase 2 -----------------------------------------------------------

    def ensure(self, a_stop: float, s_cap: float = math.inf):
        """Grow the phase-2 curve until V <= -(a_stop) (plus margin)."""
        target = -(a_stop + 0.5)
        with self._lock:
            if self._V[-1] <= target:
                return
            ds = _DTYPE(_PHASE2_STEP)
            half = ds / 2
            mm2 = _DTYPE(self.m - 2)
            exp = np.exp
            s, V, P = self._state
            ss, VV, PP = [], [], []
            while V > target:
                k1v = P
                k1p = -mm2 * P - exp(2 * s + V)
                sm = s + half
                v2 = V + half * k1v
                p2 = P + half * k1p
                k2v = p2
                k2p = -mm2 * p2 - exp(2 * sm + v2)
                v3 = V + half * k2v
                p3 = P + half * k2p
                k3v = p3
                k3p = -mm2 * p3 - exp(2 * sm + v3)
                se = s + ds
                v4 = V + ds * k3v
                p4 = P + ds * k3p
                k4v = p4
                k4p = -mm2 * p4 - exp(2 * se + v4)
                V = V + ds / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
                P = P + ds / 6 * (k1p + 2 * k2p + 2 * k3p + k4p)
                s = se
                ss.append(s)
                VV.append(V)
                PP.append(P)
                if not (V == V and abs(V) < 1e300):
                    raise NonFiniteState("master integration overflowed")
                if float(s) > s_cap:
                    raise NoZeroFound(
                        f"no zero below the configured r_max window "
                        f"(m={self.m}, a_stop={a_stop})")
            self._s.extend(ss)
            self._V.extend(VV)
            self._P.extend(PP)
            self._state = (s, V, P)
            self._f64_dirty = True

    # -- node access ---------------------------------------------------------

    def _phase2_arrays(self):
        with self._lock:
            return (np.array(self._s, dtype=_DTYPE),
                    np.array(self._V, dtype=_DTYPE),
                    np.array(self._P, dtype=_DTYPE))

    def _refresh_f64(self):
        with self._lock:
            if not self._f64_dirty:
                return
            self._xi1_f = np.asarray(self.xi1, dtype=np.float64)
            self._v1_f = np.asarray(self.v1, dtype=np.float64)
            self._p1_f = np.asarray(self.p1, dtype=np.float64)
            s, V, P = self._phase2_arrays()
            self._s_f = np.asarray(s, dtype=np.float64)
            self._V_f = np.asarray(V, dtype=np.float64)
            self._P_f = np.asarray(P, dtype=np.float64)
            self._f64_dirty = False

    def branch_nodes(self):
        """(a, lam) at every stored node with a > 0, in the working dtype."""
        s, V, P = self._phase2_arrays()
        a1 = -self.v1[1:]
        lam1 = self.xi1[1:] ** 2 * np.exp(self.v1[1:])
        a2 = -V[1:]
        lam2 = np.exp(2 * s[1:] + V[1:])
        return np.concatenate([a1, a2]), np.concatenate([lam1, lam2])

    # -- root finding --------------------------------------------------------

    def drop_root(self, a, tol=1e-10):
        """Return xi with v(xi) = -a (phase-1 xi or phase-2 exp(s))."""
        dt_a = _DTYPE(a)
        if -self.v1[-1] >= dt_a:
            # inside phase 1
            idx = int(np.searchsorted(-self.v1, dt_a))
            idx = max(1, min(idx, len(self.v1) - 1))
            x0, x1 = self.xi1[idx - 1], self.xi1[idx]
            f0, f1 = self.v1[idx - 1], self.v1[idx]
            d0, d1 = self.p1[idx - 1], self.p1[idx]
            fun = lambda x: _hermite(x, x0, x1, f0, f1, d0, d1) + dt_a
            xr = _bisect(fun, x0, x1, f0 + dt_a)
            return xr
        self.ensure(float(a))
        s, V, P = self._phase2_arrays()
        idx = int(np.searchsorted(-V, dt_a))
        idx = max(1, min(idx, len(V) - 1))
        x0, x1 = s[idx - 1], s[idx]
        f0, f1 = V[idx - 1], V[idx]
        d0, d1 = P[idx - 1], P[idx]
        fun = lambda x: _hermite(x, x0, x1, f0, f1, d0, d1) + dt_a
        sr = _bisect(fun, x0, x1, f0 + dt_a)
        return np.exp(sr)

    def lambda_of_a(self, a):
        if a == 0.0:
            return _DTYPE(0.0)
        xi = self.drop_root(a)
        return xi * xi * np.exp(_DTYPE(-a))

    # -- dense evaluation (float64) -------------------------------------------

    def eval_v(self, xi):
        """v(xi) for an array of radii (float64 path, for profiles)."""
        self._refresh_f64()
        xi = np.asarray(xi, dtype=np.float64)
        out = np.empty_like(xi)
        in1 = xi <= 1.0
        if np.any(in1):
            x = xi[in1]
            j = np.clip(np.searchsorted(self._xi1_f, x, side="right"),
                        1, len(self._xi1_f) - 1)
            out[in1] = _hermite(x, self._xi1_f[j - 1], self._xi1_f[j],
                                self._v1_f[j - 1], self._v1_f[j],
                                self._p1_f[j - 1], self._p1_f[j])
        if np.any(~in1):
            sx = np.log(xi[~in1])
            j = np.clip(np.searchsorted(self._s_f, sx, side="right"),
                        1, len(self._s_f) - 1)
            out[~in1] = _hermite(sx, self._s_f[j - 1], self._s_f[j],
                                 self._V_f[j - 1], self._V_f[j],
                                 self._P_f[j - 1], self._P_f[j])
        return out


_curves: dict[int, _MasterCurve] = {}
_curves_lock = threading.Lock()


def _master(m: int) -> _MasterCurve:
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise OutOfRange(f"dimension m must be an integer >= 1, got {m}")
    m = int(m)
    with _curves_lock:
        curve = _curves.get(m)
        if curve is None:
            curve = _MasterCurve(m)
            _curves[m] = curve
    return curve


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass
class RadialProfile:
    """One radial solution U(r) of the ball problem.

    values[0] = a, values[-1] = 0, and lam = R**2 with R the first zero of
    the lam = 1 shooting solution.
    """

    m: int
    a: float
    lam: float
    grid: np.ndarray
    values: np.ndarray

    def potential(self) -> np.ndarray:
        """lam * exp(u), the linearization potential on the grid."""
        return self.lam * np.exp(self.values)


@dataclass
class BranchPoint:
    a: float
    lam: float
    mu1: float
    index: int
    stable: bool


@dataclass
class BifurcationDiagram:
    m: int
    points: list[BranchPoint]
    lambda_star: float


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _default_r_max(m: int, a: float) -> float:
    return 10.0 * math.sqrt(2.0 * m * max(a, 1.0))


def shoot_first_zero(m: int, a: float, tol: float = 1e-10, *,
                     r_max: float | None = None) -> float:
    """First zero R of the lam = 1 IVP w(0) = a, w'(0) = 0 on B^m.

    The rescaling u(r) = w(R r) then solves the unit-ball problem with
    lam = R**2.  Returns 0.0 for a = 0 (the solution w == 0 degenerates).
    """
    if a < 0:
        raise OutOfRange(f"centre value a must be >= 0, got {a}")
    if tol <= 0:
        raise OutOfRange("tol must be positive")
    if a == 0.0:
        return 0.0
    curve = _master(m)
    if r_max is None:
        r_max = _default_r_max(m, a)
    s_cap = math.log(r_max) + a / 2.0
    curve.ensure(a, s_cap=s_cap)
    xi = curve.drop_root(a, tol=tol)
    return float(xi * np.exp(_DTYPE(-a) / 2))


def radial_solution(m: int, a: float,
                    num_points: int = DEFAULT_PROFILE_POINTS) -> RadialProfile:
    """Solve the unit-ball problem with centre value a by shooting."""
    if a < 0:
        raise OutOfRange(f"centre value a must be >= 0, got {a}")
    if num_points < 8:
        raise OutOfRange("num_points must be at least 8")
    grid = np.linspace(0.0, 1.0, num_points)
    if a == 0.0:
        return RadialProfile(m, 0.0, 0.0, grid, np.zeros(num_points))
    curve = _master(m)
    curve.ensure(a)
    xi_star = curve.drop_root(a)
    lam = float(xi_star * xi_star * np.exp(_DTYPE(-a)))
    values = a + curve.eval_v(float(xi_star) * grid)
    values[0] = a
    values[-1] = 0.0
    return RadialProfile(m, float(a), lam, grid, values)


def branch_curve(m: int, a_max: float):
    """Sampled (a, lam(a)) along the branch, a ascending, as float64."""
    if a_max <= 0:
        raise OutOfRange("a_max must be positive")
    curve = _master(m)
    curve.ensure(a_max)
    a, lam = curve.branch_nodes()
    keep = a <= _DTYPE(a_max)
    return (np.asarray(a[keep], dtype=np.float64),
            np.asarray(lam[keep], dtype=np.float64))


def lambda_star(m: int, *, a_max: float | None = None) -> float:
    """Extremal parameter: max of lam(a) over the sweep, locally refined."""
    if a_max is None:
        a_max = 40.0
    curve = _master(m)
    curve.ensure(a_max)
    a, lam = curve.branch_nodes()
    keep = a <= _DTYPE(a_max)
    a, lam = a[keep], lam[keep]
    i = int(np.argmax(lam))
    if i == 0 or i == len(lam) - 1:
        return float(lam[i])
    # ternary refinement of the unique local max bracketed by the nodes
    lo, hi = float(a[i - 1]), float(a[i + 1])
    f = curve.lambda_of_a
    for _ in range(80):
        d = (hi - lo) / 3.0
        m1, m2 = lo + d, hi - d
        if f(m1) < f(m2):
            lo = m1
        else:
            hi = m2
    return float(f((lo + hi) / 2.0))


def _certain_sign_changes(a, g, floor):
    """Indices (into a) bracketing sign changes of g, ignoring |g| <= floor.

    Returns (brackets, extrema_idx): brackets are (i, j) node pairs with
    certain opposite signs; extrema_idx are certain local extrema of g.
    """
    certain = np.abs(g) > floor
    idx = np.nonzero(certain)[0]
    brackets = []
    if idx.size:
        signs = g[idx] > 0
        flips = np.nonzero(signs[1:] != signs[:-1])[0]
        brackets = [(int(idx[k]), int(idx[k + 1])) for k in flips]
    dg = np.diff(g)
    ext = np.nonzero((dg[:-1] > 0) != (dg[1:] > 0))[0] + 1
    return brackets, ext


def branch_crossings(m: int, lam: float, a_max: float, *,
                     noise_floor: float | None = None) -> np.ndarray:
    """Refined a-locations where lam(a) crosses the given level."""
    if lam < 0:
        raise OutOfRange("lambda must be >= 0")
    if a_max <= 0:
        raise OutOfRange("a_max must be positive")
    if lam == 0.0:
        return np.array([])
    curve = _master(m)
    curve.ensure(a_max)
    a, g_lam = curve.branch_nodes()
    keep = a <= _DTYPE(a_max)
    a, g_lam = a[keep], g_lam[keep]
    g = g_lam - _DTYPE(lam)
    floor = noise_floor
    if floor is None:
        floor = _NOISE_FLOOR_REL * max(1.0, abs(lam))
    brackets, ext = _certain_sign_changes(a, g, _DTYPE(floor))
    # tangency: a certain local extremum sitting within 1e-6 of the level
    near = [e for e in ext
            if float(abs(g[e])) < 1e-6 and float(abs(g[e])) > floor]
    if near:
        warnings.warn(
            f"lam(a) has a near-double root at the requested level "
            f"lam={lam} (m={m}); the crossing count is ambiguous there",
            TangencyWarning, stacklevel=3)
    roots = []
    s_all, V_all, P_all = curve._phase2_arrays()
    n1 = len(curve.xi1) - 1  # branch node i corresponds to xi1[i+1] / s[i+1-n1]
    lam_dt = _DTYPE(lam)

    def g_of_a(av):
        return curve.lambda_of_a(av) - lam_dt

    for (i, j) in brackets:
        lo, hi = a[i], a[j]
        av = _bisect(g_of_a, lo, hi, g[i])
        roots.append(float(av))
    return np.array(sorted(roots))


def count_solutions(m: int, lam: float, a_max: float, *,
                    noise_floor: float | None = None) -> int:
    """Number of branch crossings lam(a) = lam for a in (0, a_max].

    lam = 0 returns 1: only the trivial solution u == 0 at the a = 0
    boundary of the window (lam(a) > 0 for every a > 0).
    """
    if lam == 0.0:
        return 1
    return len(branch_crossings(m, lam, a_max, noise_floor=noise_floor))


def sweep_branch(m: int, a_max: float, steps: int, *,
                 num_points: int = DEFAULT_PROFILE_POINTS,
                 workers: int = 1) -> BifurcationDiagram:
    """Sweep the branch a in [0, a_max]; each point carries mu1 and the
    radial Morse index from the spectral module."""
    from . import spectral  # deferred: spectral is a sibling, not a cycle

    if a_max <= 0 or steps < 2:
        raise OutOfRange("need a_max > 0 and steps >= 2")
    curve = _master(m)
    curve.ensure(a_max)
    a_vals = np.linspace(0.0, a_max, steps)

    def point(a):
        prof = radial_solution(m, float(a), num_points)
        q = prof.potential()
        mu = spectral.mu1(m, q)
        index = spectral.radial_index(m, q)
        return BranchPoint(float(a), prof.lam, float(mu), int(index), mu > 0)

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(point, a_vals))
    else:
        points = [point(a) for a in a_vals]
    lam_star = max(p.lam for p in points)
    return BifurcationDiagram(m, points, lam_star)


# ---------------------------------------------------------------------------
# closed forms (m = 1 and m = 2 oracles)
# ---------------------------------------------------------------------------

@dataclass
class ClosedFormRoots:
    """Roots of a closed-form branch equation with their profiles."""

    lam: float
    roots: tuple
    profiles: list[RadialProfile]


_lambda_c_cache: list[float] = []


def lambda_c_1d() -> float:
    """Critical lambda of the 1-d problem: the double root of
    alpha = cosh(alpha sqrt(lam/2))."""
    if not _lambda_c_cache:
        t = brentq(lambda x: math.cosh(x) / math.sinh(x) - x, 1.0, 2.0,
                   xtol=1e-15)
        _lambda_c_cache.append(2.0 / math.sinh(t) ** 2)
    return _lambda_c_cache[0]


def _profile_1d(lam, alpha, num_points):
    grid = np.linspace(0.0, 1.0, num_points)
    c = math.sqrt(lam / 2.0)
    values = 2.0 * (math.log(alpha) - np.log(np.cosh(alpha * c * grid)))
    values[-1] = 0.0
    return RadialProfile(1, 2.0 * math.log(alpha), lam, grid, values)


def closed_form_1d(lam: float,
                   num_points: int = DEFAULT_PROFILE_POINTS,
                   double_root_tol: float = 1e-9) -> ClosedFormRoots:
    """Roots alpha_1 <= alpha_2 of alpha = cosh(alpha sqrt(lam/2)).

    Zero, one, or two roots depending on lam vs lambda_c; lam > lambda_c
    is an expected regime and yields an empty result, not an error.
    ||u||_inf = 2 log(alpha) for each root.
    """
    if lam <= 0:
        raise OutOfRange("lam must be positive")
    c = math.sqrt(lam / 2.0)
    g = lambda al: math.cosh(al * c) - al
    # minimum of g sits where c sinh(alpha c) = 1
    al_min = math.asinh(1.0 / c) / c
    gm = g(al_min)
    if gm > double_root_tol:
        return ClosedFormRoots(lam, (), [])
    if gm > -double_root_tol:
        return ClosedFormRoots(lam, (al_min, al_min),
                               [_profile_1d(lam, al_min, num_points)] * 2)
    a1 = brentq(g, 1.0, al_min, xtol=1e-14)
    hi = al_min * 2
    while g(hi) < 0:
        hi *= 2
    a2 = brentq(g, al_min, hi, xtol=1e-14, rtol=8.9e-16)
    return ClosedFormRoots(lam, (a1, a2),
                           [_profile_1d(lam, a1, num_points),
                            _profile_1d(lam, a2, num_points)])


def closed_form_2d(lam: float,
                   num_points: int = DEFAULT_PROFILE_POINTS) -> ClosedFormRoots:
    """Explicit 2-d pair b_1 <= b_2 with profiles
    u_i(r) = log(b_i / (1 + (lam b_i / 8) r^2)^2)."""
    if lam <= 0:
        raise OutOfRange("lam must be positive")
    if lam > 2.0:
        raise OutOfRange(f"no 2-d solutions for lam = {lam} > 2")
    root = math.sqrt(max(1.0 - lam / 2.0, 0.0))
    b = tuple(32.0 / lam ** 2 * (1.0 - lam / 4.0 + s * root) for s in (-1, 1))
    grid = np.linspace(0.0, 1.0, num_points)
    profiles = []
    for bi in b:
        values = np.log(bi / (1.0 + (lam * bi / 8.0) * grid ** 2) ** 2)
        values[-1] = 0.0
        profiles.append(RadialProfile(2, math.log(bi), lam, grid, values))
    return ClosedFormRoots(lam, b, profiles)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

def profile_residual(profile: RadialProfile) -> float:
    """Max residual of the discretized ODE u'' + (m-1)/r u' + lam e^u over
    the interior grid (central differences)."""
    r = profile.grid
    u = profile.values
    dr = r[1] - r[0]
    upp = (u[2:] - 2 * u[1:-1] + u[:-2]) / dr ** 2
    up = (u[2:] - u[:-2]) / (2 * dr)
    res = upp + (profile.m - 1) / r[1:-1] * up + profile.lam * np.exp(u[1:-1])
    return float(np.max(np.abs(res)))
