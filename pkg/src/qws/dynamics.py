"""Direct time evolution, empirical distributions, and the limit distribution.

One walk step applies the position-dependent coin and then the
chirality-conditioned shift (left component moves left, right component moves
right).  The step is strictly local, so a finitely supported state stays
finitely supported and its window grows by exactly one site per side per
step: evolving on the light cone is exact, with no lattice truncation and no
boundary conditions.

The time-averaged limit distribution is assembled from the point spectrum:
each (unit-normalized) eigenvector contributes its squared overlap with the
initial state times its per-site weight.  With an empty spectrum it vanishes
identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
import numpy as np

from . import spectrum as spectrum_mod
from .model import ModelSpec, StateVector, coin_at

KIND_INSTANT = "instant"
KIND_RUNNING_AVERAGE = "running_average"
KIND_LIMIT = "limit"


@dataclass
class DistributionSeries:
    """Per-position nonnegative weights on a contiguous window.

    ``kind`` is one of instant (a time-t distribution), running_average
    (a Cesaro average up to time T), or limit (the time-averaged limit);
    ``t_or_T`` carries t or T and is None for the limit.
    """

    lo: int
    values: np.ndarray
    kind: str
    t_or_T: int | None = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)

    @property
    def hi(self) -> int:
        return self.lo + self.values.size - 1

    @property
    def positions(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    def value_at(self, x: int) -> float:
        if self.lo <= x <= self.hi:
            return float(self.values[x - self.lo])
        return 0.0

    def total(self) -> float:
        return float(np.sum(self.values))


def _coin_stack(spec: ModelSpec, lo: int, hi: int) -> np.ndarray:
    """Coin matrices for every position in [lo, hi], stacked (N, 2, 2)."""
    return np.array([coin_at(spec, x).matrix for x in range(lo, hi + 1)])


def step(spec: ModelSpec, psi: StateVector) -> StateVector:
    """One walk step: coin, then shift.  The window grows by 1 per side."""
    coins = _coin_stack(spec, psi.lo, psi.hi)
    mixed = np.einsum("xij,xj->xi", coins, psi.amps)
    n = psi.amps.shape[0]
    out = np.zeros((n + 2, 2), dtype=complex)
    out[0:n, 0] = mixed[:, 0]
    out[2 : n + 2, 1] = mixed[:, 1]
    return StateVector(psi.lo - 1, out)


def evolve(spec: ModelSpec, psi0: StateVector, t: int) -> StateVector:
    """t-fold step on the exact light-cone window of the initial support."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return StateVector(psi0.lo, psi0.amps.copy())
    lo = psi0.lo - t
    hi = psi0.hi + t
    coins = _coin_stack(spec, lo, hi)
    buf = np.zeros((hi - lo + 1, 2), dtype=complex)
    a = psi0.lo - lo
    buf[a : a + psi0.amps.shape[0]] = psi0.amps
    _evolve_in_place(coins, buf, a, a + psi0.amps.shape[0] - 1, t)
    return StateVector(lo, buf)


def _evolve_in_place(coins: np.ndarray, buf: np.ndarray, i_lo: int, i_hi: int, steps: int,
                     on_state=None) -> None:
    """Run ``steps`` walk steps on ``buf`` rows [i_lo, i_hi], growing outward.

    ``on_state(t)`` is invoked with the state as of time t (before stepping
    further), for accumulation callbacks.
    """
    if on_state is not None:
        on_state(0)
    for k in range(steps):
        window = slice(i_lo, i_hi + 1)
        mixed = np.einsum("xij,xj->xi", coins[window], buf[window])
        i_lo -= 1
        i_hi += 1
        buf[i_lo : i_hi - 1, 0] = mixed[:, 0]
        buf[i_hi - 1 : i_hi + 1, 0] = 0.0
        buf[i_lo + 2 : i_hi + 1, 1] = mixed[:, 1]
        buf[i_lo : i_lo + 2, 1] = 0.0
        if on_state is not None:
            on_state(k + 1)


def distribution(psi: StateVector, t: int | None = None) -> DistributionSeries:
    """Per-position squared amplitude norms of a state."""
    values = np.sum(np.abs(psi.amps) ** 2, axis=1)
    return DistributionSeries(psi.lo, values, KIND_INSTANT, t_or_T=t)


def time_average(
    spec: ModelSpec, psi0: StateVector, T: int, window: tuple[int, int]
) -> DistributionSeries:
    """Cesaro average (1/T) sum_{t<T} of the site distributions, on a window."""
    if T < 1:
        raise ValueError("T must be >= 1")
    w_lo, w_hi = window
    if w_lo > w_hi:
        raise ValueError(f"empty window {window}")
    lo = min(psi0.lo - (T - 1), w_lo)
    hi = max(psi0.hi + (T - 1), w_hi)
    coins = _coin_stack(spec, lo, hi)
    buf = np.zeros((hi - lo + 1, 2), dtype=complex)
    a = psi0.lo - lo
    buf[a : a + psi0.amps.shape[0]] = psi0.amps
    acc = np.zeros(w_hi - w_lo + 1, dtype=float)
    rows = slice(w_lo - lo, w_hi - lo + 1)

    def accumulate(_t: int) -> None:
        acc[:] += np.sum(np.abs(buf[rows]) ** 2, axis=1)

    _evolve_in_place(coins, buf, a, a + psi0.amps.shape[0] - 1, T - 1, on_state=accumulate)
    return DistributionSeries(w_lo, acc / T, KIND_RUNNING_AVERAGE, t_or_T=T)


def limit_distribution(
    spec: ModelSpec,
    psi0: StateVector,
    report: spectrum_mod.SpectrumReport,
    window: tuple[int, int],
) -> DistributionSeries:
    """Time-averaged limit distribution from the solved point spectrum.

    Sums, over the eigenpoints, the squared overlap of the unit eigenvector
    with the initial state times the eigenvector's per-site weight.
    Eigenvectors are normalized with the closed-form norm, so no windowing
    error enters the normalization.  An empty report gives identically zero.
    """
    w_lo, w_hi = window
    if w_lo > w_hi:
        raise ValueError(f"empty window {window}")
    values = np.zeros(w_hi - w_lo + 1, dtype=float)
    if not report.eigenpoints:
        return DistributionSeries(w_lo, values, KIND_LIMIT)
    lo = min(w_lo, psi0.lo)
    hi = max(w_hi, psi0.hi)
    for pt in report.eigenpoints:
        vec = spectrum_mod.eigenvector_profile(spec, pt, lo, hi)
        unit = vec.amps / math.sqrt(pt.norm_sq)
        rows0 = slice(psi0.lo - lo, psi0.hi - lo + 1)
        overlap = complex(np.sum(np.conj(unit[rows0]) * psi0.amps))
        roww = slice(w_lo - lo, w_hi - lo + 1)
        values += (abs(overlap) ** 2) * np.sum(np.abs(unit[roww]) ** 2, axis=1)
    return DistributionSeries(w_lo, values, KIND_LIMIT)


# -- CSV export ----------------------------------------------------------------


def distribution_csv_lines(series: DistributionSeries) -> list[str]:
    t_field = "" if series.t_or_T is None else str(series.t_or_T)
    lines = ["x,value,kind,t_or_T"]
    for x, v in zip(series.positions, series.values):
        lines.append(f"{x},{v:.17g},{series.kind},{t_field}")
    return lines


def write_distribution_csv(series: DistributionSeries, path: str | Path) -> None:
    Path(path).write_text("\n".join(distribution_csv_lines(series)) + "\n", encoding="utf-8")


def figure_bundle_csv_lines(mu: DistributionSeries, nu: DistributionSeries) -> list[str]:
    """Side-by-side time-t distribution and limit distribution, one row per x."""
    lines = ["x,mu_t,nu_inf"]
    lo = min(mu.lo, nu.lo)
    hi = max(mu.hi, nu.hi)
    for x in range(lo, hi + 1):
        lines.append(f"{x},{mu.value_at(x):.17g},{nu.value_at(x):.17g}")
    return lines


def write_figure_bundle_csv(mu: DistributionSeries, nu: DistributionSeries, path: str | Path) -> None:
    Path(path).write_text("\n".join(figure_bundle_csv_lines(mu, nu)) + "\n", encoding="utf-8")
