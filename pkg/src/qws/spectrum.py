"""Point spectrum of the walk operator via the transfer-matrix criterion.

An angle ``lam`` carries an eigenvalue ``e^{i lam}`` exactly when

  1. both period blocks have a positive discriminant
     A^2 - prod|alpha|^2 > 0 (so the block eigenvalue pair splits into
     |zeta_gt| > 1 > |zeta_lt|), and
  2. the kernels of ``(block_plus - zeta_plus_lt) T_plus`` and
     ``(block_minus - zeta_minus_gt) T_minus`` intersect nontrivially.

Both kernels are one-dimensional lines; condition 2 is equivalent to the
vanishing of the normalized determinant of their direction vectors, which is
the *matching residual* minimized by the scanner.  Eigenvalues are isolated
and finitely many, so a dense angle grid followed by golden-section
refinement of the residual's local minima recovers them; completeness is
grid-limited by construction (``grid`` is exposed rather than claiming an a
priori bound).

Eigenvector tails are evaluated through powers of the decaying block
eigenvalue, never through long entry-wise matrix products, so profiles stay
stable on arbitrarily wide windows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .model import ModelSpec, StateVector, coin_at
from .transfer import (
    boundary_products,
    det2,
    identity2,
    inv2,
    period_block,
    shifted_block,
    transfer_matrix,
    zeta_values,
)

TWO_PI = 2.0 * math.pi

#: refinement brackets stay this far inside a condition-one interval
BOUNDARY_MARGIN = 1e-9

#: refined roots closer than this (circularly) are considered the same
DEDUP_SPACING = 1e-8

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class ConditionOneViolated(ValueError):
    """matching_residual was asked for an angle where a discriminant is <= 0."""


class FullRank(ValueError):
    """kernel_direction received a matrix that is not numerically singular."""


class DivergentTail(ArithmeticError):
    """An eigenpoint's tail ratios do not decay; the point is corrupted."""


@dataclass(frozen=True)
class EigenPoint:
    """One solved eigenvalue angle with its matching vector and decay data.

    ``phi`` spans the kernel intersection (unit norm, first nonzero component
    real positive); ``zeta_plus_lt`` and ``zeta_minus_gt`` are the decaying
    right/left tail multipliers per period, and ``norm_sq`` is the squared
    l2 norm of the unnormalized tilde-profile generated by ``phi``.
    """

    lam: float
    phi: np.ndarray
    zeta_plus_lt: complex
    zeta_minus_gt: complex
    residual: float
    norm_sq: float


@dataclass(frozen=True)
class SpectrumReport:
    """Everything the scanner found on one model."""

    eigenpoints: tuple[EigenPoint, ...]
    grid_size: int
    tolerance: float
    condition_one_intervals: tuple[tuple[float, float], ...]

    @property
    def eigen_lambdas(self) -> np.ndarray:
        return np.array([p.lam for p in self.eigenpoints])


# -- condition 1 -------------------------------------------------------------


def _discriminants(spec: ModelSpec, lams) -> tuple[np.ndarray, np.ndarray]:
    _, _, _, disc_p = zeta_values(spec.period_plus, lams)
    _, _, _, disc_m = zeta_values(spec.period_minus, lams)
    return disc_p, disc_m


def condition_one(spec: ModelSpec, lam: float) -> tuple[bool, bool, float, float]:
    """Strict positivity of both period-block discriminants at ``lam``."""
    disc_p, disc_m = _discriminants(spec, lam)
    dp = float(disc_p)
    dm = float(disc_m)
    return dp > 0.0, dm > 0.0, dp, dm


# -- kernel directions and the matching residual -----------------------------


def _adjugate_columns(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    c0 = np.stack([m[..., 1, 1], -m[..., 1, 0]], axis=-1)
    c1 = np.stack([-m[..., 0, 1], m[..., 0, 0]], axis=-1)
    return c0, c1


def _fix_phase(v: np.ndarray) -> np.ndarray:
    """Rotate so the first component of magnitude > 1e-12*|v| is real positive."""
    n = float(np.linalg.norm(v))
    if n == 0.0:
        return v
    lead = v[0] if abs(v[0]) > 1e-12 * n else v[1]
    return v * (abs(lead) / lead)


def kernel_direction(m: np.ndarray, rank_tol: float = 1e-8) -> tuple[np.ndarray, bool]:
    """Unit vector spanning the kernel of a numerically singular 2x2 matrix.

    Deterministic choice: the larger-magnitude adjugate column, phase-fixed
    to a real positive leading component.  Returns ``(v, degenerate)`` where
    ``degenerate`` marks the zero-matrix fallback ``v = [1, 0]`` (the whole
    plane is the kernel, which cannot happen for validly constructed blocks).
    Raises FullRank when ``|det m| > rank_tol * |m|^2``: the inputs this is
    meant for are singular by construction, so a full-rank argument is a
    caller bug, not a boundary case.
    """
    m = np.asarray(m, dtype=complex)
    scale = float(np.sum(np.abs(m) ** 2))
    if scale == 0.0:
        return np.array([1.0 + 0.0j, 0.0j]), True
    if abs(det2(m)) > rank_tol * scale:
        raise FullRank(f"matrix is not rank-deficient: |det| = {abs(det2(m)):.3e}")
    c0, c1 = _adjugate_columns(m)
    v = c0 if np.linalg.norm(c0) >= np.linalg.norm(c1) else c1
    nv = np.linalg.norm(v)
    if nv == 0.0:
        return np.array([1.0 + 0.0j, 0.0j]), True
    return _fix_phase(v / nv), False


def _kernel_directions_stack(m: np.ndarray) -> np.ndarray:
    """Batched kernel directions (no phase fix, no rank check)."""
    c0, c1 = _adjugate_columns(m)
    n0 = np.sum(np.abs(c0) ** 2, axis=-1)
    n1 = np.sum(np.abs(c1) ** 2, axis=-1)
    v = np.where((n0 >= n1)[..., None], c0, c1)
    nv = np.sqrt(np.sum(np.abs(v) ** 2, axis=-1))
    degenerate = nv == 0.0
    if np.any(degenerate):
        v = np.where(degenerate[..., None], np.array([1.0 + 0j, 0j]), v)
        nv = np.where(degenerate, 1.0, nv)
    return v / nv[..., None]


def _matching_parts(spec: ModelSpec, lams) -> dict:
    """Residuals plus everything needed to package eigenpoints, batched."""
    lams = np.asarray(lams, dtype=float)
    block_p = period_block(spec.period_plus, lams)
    block_m = period_block(spec.period_minus, lams)
    _, zeta_lt_p, _, disc_p = zeta_values(spec.period_plus, lams)
    zeta_gt_m, _, _, disc_m = zeta_values(spec.period_minus, lams)
    eye = identity2(lams.shape)
    v_p = _kernel_directions_stack(block_p - zeta_lt_p[..., None, None] * eye)
    v_m = _kernel_directions_stack(block_m - zeta_gt_m[..., None, None] * eye)
    t_p, t_m = boundary_products(spec, lams)
    phi_p = (inv2(t_p) @ v_p[..., None])[..., 0]
    phi_m = (inv2(t_m) @ v_m[..., None])[..., 0]
    det = phi_p[..., 0] * phi_m[..., 1] - phi_p[..., 1] * phi_m[..., 0]
    norms = np.sqrt(np.sum(np.abs(phi_p) ** 2, -1) * np.sum(np.abs(phi_m) ** 2, -1))
    return {
        "residual": np.abs(det) / norms,
        "phi_plus": phi_p,
        "phi_minus": phi_m,
        "zeta_plus_lt": zeta_lt_p,
        "zeta_minus_gt": zeta_gt_m,
        "disc_plus": disc_p,
        "disc_minus": disc_m,
    }


def matching_residual(spec: ModelSpec, lam: float) -> float:
    """Scale-free mismatch of the two one-dimensional kernels at ``lam``.

    Zero exactly when the kernels intersect nontrivially (an eigenvalue);
    requires condition one on both sides.
    """
    plus_ok, minus_ok, dp, dm = condition_one(spec, lam)
    if not (plus_ok and minus_ok):
        raise ConditionOneViolated(
            f"discriminants ({dp:.3e}, {dm:.3e}) not strictly positive at lam={lam!r}"
        )
    return float(_matching_parts(spec, lam)["residual"])


# -- scan and refine ----------------------------------------------------------


def _golden_min(f: Callable[[float], float], a: float, b: float, xtol: float) -> float:
    """Golden-section minimizer; returns the midpoint of the final bracket."""
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > xtol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    return 0.5 * (a + b)


def _circular_runs(ok: np.ndarray) -> list[np.ndarray]:
    """Maximal runs of True in circular order; each run as an index array."""
    n = ok.size
    if ok.all():
        return [np.arange(n)]
    if not ok.any():
        return []
    # roll so the array starts just after a False; runs then never wrap
    start = int(np.flatnonzero(~ok)[0]) + 1
    rolled = np.roll(ok, -start)
    idx = np.flatnonzero(rolled)
    splits = np.flatnonzero(np.diff(idx) > 1) + 1
    return [(chunk + start) % n for chunk in np.split(idx, splits)]


def _local_minima(values: np.ndarray) -> list[int]:
    """Indices of one-sided-inclusive local minima of a 1D array."""
    n = values.size
    out = []
    for j in range(n):
        left = values[j - 1] if j > 0 else np.inf
        right = values[j + 1] if j < n - 1 else np.inf
        if values[j] <= left and values[j] <= right:
            out.append(j)
    return out


def _circular_gap(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def _build_eigenpoint(spec: ModelSpec, lam: float) -> EigenPoint:
    parts = _matching_parts(spec, lam)
    phi = _fix_phase(np.asarray(parts["phi_plus"]))
    phi = phi / np.linalg.norm(phi)
    zlp = complex(parts["zeta_plus_lt"])
    zgm = complex(parts["zeta_minus_gt"])
    norm_sq = _tilde_norm_sq(spec, lam, phi, zlp, zgm)
    return EigenPoint(
        lam=lam,
        phi=phi,
        zeta_plus_lt=zlp,
        zeta_minus_gt=zgm,
        residual=float(parts["residual"]),
        norm_sq=norm_sq,
    )


def scan_spectrum(spec: ModelSpec, grid: int = 16384, tol: float = 1e-10) -> SpectrumReport:
    """Locate every eigenvalue angle resolvable on a ``grid``-point scan.

    Scans condition one over [0, 2pi), evaluates the matching residual on
    every admissible grid point, golden-section-refines each local minimum to
    a 1e-13 bracket, and accepts angles whose refined residual is below
    ``tol``.  An empty report means the model does not localize (at this
    resolution; roots narrower than one grid cell are out of scope).
    """
    if grid < 256:
        raise ValueError(f"grid {grid} too coarse (need >= 256)")
    if tol <= 0.0:
        raise ValueError("tol must be positive")

    lams = TWO_PI * np.arange(grid) / grid
    spacing = TWO_PI / grid
    disc_p, disc_m = _discriminants(spec, lams)
    ok = (disc_p > 0.0) & (disc_m > 0.0)
    runs = _circular_runs(ok)

    residual = np.full(grid, np.inf)
    if ok.any():
        residual[ok] = _matching_parts(spec, lams[ok])["residual"]

    def objective(lam: float) -> float:
        try:
            return matching_residual(spec, lam % TWO_PI)
        except ConditionOneViolated:
            return np.inf

    found: list[tuple[float, float]] = []
    intervals: list[tuple[float, float]] = []
    for run in runs:
        # unwrap so the run is monotone even when it crosses 2pi -> 0
        lam_run = lams[run[0]] + spacing * np.arange(run.size)
        res_run = residual[run]
        for a, b in _run_intervals(lams, run):
            intervals.append((a, b))
        if run.size == grid:
            # condition one holds on the whole circle: wrap one point around
            # each end so the seam between the last and first grid point is
            # bracketed like any other neighborhood
            lam_run = np.concatenate(([lam_run[0] - spacing], lam_run, [lam_run[-1] + spacing]))
            res_run = np.concatenate((res_run[-1:], res_run, res_run[:1]))
        lo = lam_run[0] + BOUNDARY_MARGIN
        hi = lam_run[-1] - BOUNDARY_MARGIN
        if run.size == 1:
            # the admissible sliver is narrower than one grid cell; probe the
            # half-cells around the lone point (the objective is +inf outside
            # the sliver, which golden section tolerates)
            brackets = [(lam_run[0] - 0.49 * spacing, lam_run[0] + 0.49 * spacing)]
        else:
            brackets = []
            for j in _local_minima(res_run):
                a = max(lam_run[max(j - 1, 0)], lo)
                b = min(lam_run[min(j + 1, lam_run.size - 1)], hi)
                if b > a:
                    brackets.append((a, b))
        for a, b in brackets:
            lam_star = _golden_min(objective, a, b, xtol=1e-13)
            value = objective(lam_star)
            if value < tol:
                found.append((lam_star % TWO_PI, value))

    found.sort()
    accepted: list[tuple[float, float]] = []
    for lam, value in found:
        dup = next((i for i, (l0, _) in enumerate(accepted) if _circular_gap(l0, lam) < DEDUP_SPACING), None)
        if dup is None:
            accepted.append((lam, value))
        elif value < accepted[dup][1]:
            accepted[dup] = (lam, value)

    points = tuple(_build_eigenpoint(spec, lam) for lam, _ in sorted(accepted))
    return SpectrumReport(
        eigenpoints=points,
        grid_size=grid,
        tolerance=tol,
        condition_one_intervals=tuple(intervals),
    )


def _run_intervals(lams: np.ndarray, run: np.ndarray) -> list[tuple[float, float]]:
    """Grid-resolved angle interval(s) of a run, split where it wraps 2pi."""
    breaks = np.flatnonzero(np.diff(run) != 1)
    if breaks.size == 0:
        return [(float(lams[run[0]]), float(lams[run[-1]]))]
    k = int(breaks[0]) + 1
    return [
        (float(lams[run[0]]), float(lams[run[k - 1]])),
        (float(lams[run[k]]), float(lams[run[-1]])),
    ]


def interval_contains(intervals: Sequence[tuple[float, float]], lam: float, slack: float = 1e-12) -> bool:
    return any(lo - slack <= lam <= hi + slack for lo, hi in intervals)


# -- eigenvector profiles ------------------------------------------------------


def eigenvector_tilde(spec: ModelSpec, pt: EigenPoint, lo: int, hi: int) -> StateVector:
    """Unnormalized tilde-profile on [lo, hi] generated by ``pt.phi``.

    Inside the defect window the profile follows the one-site recurrence;
    on the periodic halves it is (zeta_plus_lt)^m times the first period's
    values on the right and (zeta_minus_gt)^{-m} on the left, which keeps the
    evaluation stable on arbitrarily wide windows.
    """
    return _tilde_profile(spec, pt.lam, pt.phi, pt.zeta_plus_lt, pt.zeta_minus_gt, lo, hi)


def _tilde_profile(
    spec: ModelSpec,
    lam: float,
    phi: np.ndarray,
    zeta_plus_lt: complex,
    zeta_minus_gt: complex,
    lo: int,
    hi: int,
) -> StateVector:
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    phi = np.asarray(phi, dtype=complex)
    amps = np.zeros((hi - lo + 1, 2), dtype=complex)

    def put(x: int, value: np.ndarray) -> None:
        if lo <= x <= hi:
            amps[x - lo] = value

    # defect window and the two anchor values T_plus*phi, T_minus_prod*phi
    middle = _defect_window_values(spec, lam, phi)
    for x, v in middle.items():
        put(x, v)

    # right tail: w_r = prod_{i<r} T_i^+ applied to the anchor at x_plus
    if hi > spec.x_plus:
        w = [middle[spec.x_plus]]
        for r in range(spec.n_plus - 1):
            w.append(transfer_matrix(spec.period_plus[r], lam) @ w[-1])
        for x in range(max(lo, spec.x_plus + 1), hi + 1):
            r = (x - spec.x_plus) % spec.n_plus
            m = (x - spec.x_plus - r) // spec.n_plus
            put(x, (zeta_plus_lt**m) * w[r])

    # left tail: u_r = (T_{n-1}^- ... T_r^-)^{-1} applied to the anchor at x_minus
    if lo < spec.x_minus:
        n = spec.n_minus
        suffix = [None] * (n + 1)
        suffix[n] = identity2()
        for r in range(n - 1, -1, -1):
            suffix[r] = suffix[r + 1] @ transfer_matrix(spec.period_minus[r], lam)
        base = middle[spec.x_minus]
        u = [inv2(suffix[r]) @ base for r in range(n)]
        for x in range(lo, min(hi, spec.x_minus - 1) + 1):
            r = (x - spec.x_minus) % n
            m = abs(x - spec.x_minus - r + n) // n
            put(x, (zeta_minus_gt ** (-m)) * u[r])

    return StateVector(lo, amps)


def _defect_window_values(spec: ModelSpec, lam: float, phi: np.ndarray) -> dict[int, np.ndarray]:
    """Profile values on [x_minus, x_plus] from the one-site recurrence."""
    middle = {0: phi}
    val = phi
    for x in range(0, spec.x_plus):
        val = transfer_matrix(coin_at(spec, x), lam) @ val
        middle[x + 1] = val
    val = phi
    for x in range(-1, spec.x_minus - 1, -1):
        val = inv2(transfer_matrix(coin_at(spec, x), lam)) @ val
        middle[x] = val
    return middle


def eigenvector_profile(spec: ModelSpec, pt: EigenPoint, lo: int, hi: int) -> StateVector:
    """Unnormalized eigenvector on [lo, hi]: the tilde-profile pushed through
    the unitary reindexing L(x) <- tilde_L(x+1), R(x) <- tilde_R(x)."""
    tilde = _tilde_profile(
        spec, pt.lam, pt.phi, pt.zeta_plus_lt, pt.zeta_minus_gt, lo - 1, hi + 1
    )
    amps = np.empty((hi - lo + 1, 2), dtype=complex)
    amps[:, 0] = tilde.amps[2:, 0]
    amps[:, 1] = tilde.amps[1:-1, 1]
    return StateVector(lo, amps)


# -- norms and checks ----------------------------------------------------------


def _tilde_norm_sq(
    spec: ModelSpec, lam: float, phi: np.ndarray, zeta_plus_lt: complex, zeta_minus_gt: complex
) -> float:
    q_plus = abs(zeta_plus_lt) ** 2
    q_minus = abs(zeta_minus_gt) ** -2
    if q_plus >= 1.0 or q_minus >= 1.0:
        raise DivergentTail(
            f"tail ratios |zeta_plus_lt|^2={q_plus!r}, |zeta_minus_gt|^-2={q_minus!r} do not decay"
        )
    lo = spec.x_minus - spec.n_minus
    hi = spec.x_plus + spec.n_plus
    tilde = _tilde_profile(spec, lam, phi, zeta_plus_lt, zeta_minus_gt, lo, hi)
    weights = np.sum(np.abs(tilde.amps) ** 2, axis=1)
    total = float(np.sum(weights))
    s_plus = float(np.sum(weights[spec.x_plus + 1 - lo :]))
    s_minus = float(np.sum(weights[: spec.x_minus - lo]))
    return total + s_plus * q_plus / (1.0 - q_plus) + s_minus * q_minus / (1.0 - q_minus)


def eigen_norm(spec: ModelSpec, pt: EigenPoint) -> float:
    """Squared l2 norm of the unnormalized profile, summed in closed form.

    One full period beyond each cut is summed explicitly; the remaining
    tails are geometric series in |zeta_plus_lt|^2 and |zeta_minus_gt|^-2.
    The reindexing between the tilde-profile and the eigenvector is unitary,
    so both share this norm.
    """
    return _tilde_norm_sq(spec, pt.lam, pt.phi, pt.zeta_plus_lt, pt.zeta_minus_gt)


def decay_window(spec: ModelSpec, pt: EigenPoint, eps: float = 1e-13) -> tuple[int, int]:
    """A window outside of which the profile's relative tail mass is < eps."""
    q_plus = abs(pt.zeta_plus_lt) ** 2
    q_minus = abs(pt.zeta_minus_gt) ** -2
    periods_plus = int(math.log(eps) / math.log(q_plus)) + 2
    periods_minus = int(math.log(eps) / math.log(q_minus)) + 2
    return (
        spec.x_minus - spec.n_minus * periods_minus,
        spec.x_plus + spec.n_plus * periods_plus,
    )


def eigen_check(spec: ModelSpec, pt: EigenPoint, window: int) -> float:
    """One-step eigen-equation residual of the normalized eigenvector.

    Builds the unit eigenvector on ``[x_minus - window, x_plus + window]``,
    applies one walk step, and returns the l2 mismatch against
    ``e^{i lam} Psi`` over the window's interior (the interior of a one-step
    image is truncation-free).
    """
    from . import dynamics

    lo = spec.x_minus - window
    hi = spec.x_plus + window
    psi = eigenvector_profile(spec, pt, lo, hi)
    psi = StateVector(psi.lo, psi.amps / math.sqrt(pt.norm_sq))
    stepped = dynamics.step(spec, psi)
    phase = complex(math.cos(pt.lam), math.sin(pt.lam))
    diff = stepped.restricted(lo + 1, hi - 1).amps - phase * psi.restricted(lo + 1, hi - 1).amps
    return float(np.linalg.norm(diff))


# -- generalized (not necessarily square-summable) profiles --------------------


def _apply_matrix_power(m: np.ndarray, power: int, vec: np.ndarray) -> np.ndarray:
    """m^power @ vec via eigendecomposition, with a multiply fallback.

    The fallback covers (near-)defective blocks, where the eigenvector basis
    is too ill-conditioned to invert.
    """
    if power == 0:
        return vec.copy()
    vals, vecs = np.linalg.eig(m)
    if abs(det2(vecs)) > 1e-8:
        coef = np.linalg.solve(vecs, vec)
        return vecs @ (vals.astype(complex) ** power * coef)
    step = m if power > 0 else inv2(m)
    out = vec.copy()
    for _ in range(abs(power)):
        out = step @ out
    return out


def stationary_measure(
    spec: ModelSpec, lam: float, phi: np.ndarray, lo: int, hi: int
) -> StateVector:
    """Generalized eigenfunction on [lo, hi] from an arbitrary seed ``phi``.

    Evaluates the transfer-matrix construction literally (finite products in
    the defect window, powers of the shifted period blocks on the halves) and
    reindexes; no square-summability is implied, and for a generic angle the
    profile grows geometrically.
    """
    phi = np.asarray(phi, dtype=complex)
    tlo, thi = lo - 1, hi + 1
    amps = np.zeros((thi - tlo + 1, 2), dtype=complex)

    def put(x: int, value: np.ndarray) -> None:
        if tlo <= x <= thi:
            amps[x - tlo] = value

    middle = _defect_window_values(spec, lam, phi)
    for x, v in middle.items():
        put(x, v)

    if thi > spec.x_plus:
        n = spec.n_plus
        prefix = [identity2()]
        for r in range(n - 1):
            prefix.append(transfer_matrix(spec.period_plus[r], lam) @ prefix[-1])
        blocks = [shifted_block(spec.period_plus, lam, r) for r in range(n)]
        anchor = middle[spec.x_plus]
        for x in range(max(tlo, spec.x_plus + 1), thi + 1):
            r = (x - spec.x_plus) % n
            m = (x - spec.x_plus - r) // n
            put(x, _apply_matrix_power(blocks[r], m, prefix[r] @ anchor))

    if tlo < spec.x_minus:
        n = spec.n_minus
        suffix = [None] * (n + 1)
        suffix[n] = identity2()
        for r in range(n - 1, -1, -1):
            suffix[r] = suffix[r + 1] @ transfer_matrix(spec.period_minus[r], lam)
        blocks = [shifted_block(spec.period_minus, lam, r) for r in range(n)]
        anchor = middle[spec.x_minus]
        for x in range(tlo, min(thi, spec.x_minus - 1) + 1):
            r = (x - spec.x_minus) % n
            m = abs(x - spec.x_minus - r + n) // n
            put(x, _apply_matrix_power(blocks[r], -m, inv2(suffix[r]) @ anchor))

    out = np.empty((hi - lo + 1, 2), dtype=complex)
    out[:, 0] = amps[2:, 0]
    out[:, 1] = amps[1:-1, 1]
    return StateVector(lo, out)


# -- serialization --------------------------------------------------------------


def report_to_json_dict(report: SpectrumReport) -> dict:
    return {
        "grid_size": report.grid_size,
        "tolerance": report.tolerance,
        "condition_one_intervals": [[lo, hi] for lo, hi in report.condition_one_intervals],
        "eigenvalues": [
            {
                "lambda": p.lam,
                "residual": p.residual,
                "zeta_plus_lt": [p.zeta_plus_lt.real, p.zeta_plus_lt.imag],
                "zeta_minus_gt": [p.zeta_minus_gt.real, p.zeta_minus_gt.imag],
                "norm_sq": p.norm_sq,
            }
            for p in report.eigenpoints
        ],
    }


def report_csv_lines(report: SpectrumReport) -> list[str]:
    lines = ["lambda,residual,abs_zeta_plus_lt,abs_zeta_minus_gt"]
    for p in report.eigenpoints:
        lines.append(
            f"{p.lam:.17g},{p.residual:.17g},{abs(p.zeta_plus_lt):.17g},{abs(p.zeta_minus_gt):.17g}"
        )
    return lines
