"""Coin arrangements for 1D two-state walks with periodic halves and a defect window.

The walk acts on square-summable two-component amplitudes over the integers.
A model is specified by two cut points ``x_minus <= 0 <= x_plus``, a periodic
list of coins for each half-line (period ``n_minus`` strictly left of
``x_minus``, period ``n_plus`` from ``x_plus`` rightwards), and an explicit
coin for every position in the finite defect window ``[x_minus, x_plus)``.

Each coin is the 2x2 unitary

    C = e^{i*delta} [[alpha, beta], [-conj(beta), conj(alpha)]]

with ``|alpha|^2 + |beta|^2 = 1`` and ``alpha != 0`` (a vanishing alpha makes
the walker reflect and is excluded from this model family).
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Literal

import numpy as np

TWO_PI = 2.0 * math.pi

#: default tolerance for unitarity / normalization checks
DEFAULT_TOL = 1e-12

Side = Literal["plus", "minus", "defect"]


def _wrap_angle(theta: float) -> float:
    """Map an angle to [0, 2*pi)."""
    theta = math.fmod(float(theta), TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    # fmod of values just below 2*pi can round back up to 2*pi
    if theta >= TWO_PI:
        theta -= TWO_PI
    return theta


@dataclass(frozen=True)
class Coin:
    """One 2x2 unitary coin in the (delta, alpha, beta) parametrization.

    ``delta`` is normalized to [0, 2*pi) on construction.  The matrix itself
    is derived on demand; the three parameters are kept separate because the
    transfer matrix consumes them individually.
    """

    delta: float
    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "delta", _wrap_angle(self.delta))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))

    @property
    def matrix(self) -> np.ndarray:
        """The coin as a 2x2 complex array: e^{i delta}[[a, b], [-conj b, conj a]]."""
        phase = cmath.exp(1j * self.delta)
        return phase * np.array(
            [[self.alpha, self.beta], [-self.beta.conjugate(), self.alpha.conjugate()]],
            dtype=complex,
        )

    def violations(self, tol: float = DEFAULT_TOL) -> list[str]:
        """Invariant violations of this coin alone (empty when valid)."""
        out = []
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > tol:
            out.append(f"|alpha|^2+|beta|^2 = {norm!r} differs from 1 by more than {tol}")
        if abs(self.alpha) <= tol:
            out.append("excluded reflecting case (alpha = 0)")
        return out


def hadamard_coin() -> Coin:
    """The balanced real coin: delta=0, alpha=beta=1/sqrt(2)."""
    s = 1.0 / math.sqrt(2.0)
    return Coin(0.0, s, s)


def identity_coin() -> Coin:
    """delta=0, alpha=1, beta=0 (the coin step is a no-op)."""
    return Coin(0.0, 1.0, 0.0)


@dataclass(frozen=True)
class ModelSpec:
    """The full inhomogeneous coin arrangement.

    ``period_plus[k]`` acts at positions ``x >= x_plus`` with
    ``(x - x_plus) mod n_plus == k``; ``period_minus`` analogously for
    ``x < x_minus``; ``defects[x - x_minus]`` acts inside ``[x_minus, x_plus)``.
    Immutable after construction, so instances may be shared freely across
    workers.
    """

    x_plus: int
    x_minus: int
    period_plus: tuple[Coin, ...]
    period_minus: tuple[Coin, ...]
    defects: tuple[Coin, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "period_plus", tuple(self.period_plus))
        object.__setattr__(self, "period_minus", tuple(self.period_minus))
        object.__setattr__(self, "defects", tuple(self.defects))

    @property
    def n_plus(self) -> int:
        return len(self.period_plus)

    @property
    def n_minus(self) -> int:
        return len(self.period_minus)


def residue_and_period_index(spec: ModelSpec, x: int) -> tuple[Side, int, int]:
    """Locate ``x`` in the arrangement: (side, residue r, period count m).

    For ``x >= x_plus``: r = (x - x_plus) mod n_plus and m = (x - x_plus - r)/n_plus.
    For ``x < x_minus``: r = (x - x_minus) mod n_minus and
    m = |x - x_minus - r + n_minus| / n_minus, so that
    x = x_minus + (r - n_minus) - m*n_minus.  Inside the defect window the
    residue indexes ``defects`` and m is 0.  All integer-exact.
    """
    if x >= spec.x_plus:
        n = spec.n_plus
        r = (x - spec.x_plus) % n
        return "plus", r, (x - spec.x_plus - r) // n
    if x >= spec.x_minus:
        return "defect", x - spec.x_minus, 0
    n = spec.n_minus
    r = (x - spec.x_minus) % n
    return "minus", r, abs(x - spec.x_minus - r + n) // n


def coin_at(spec: ModelSpec, x: int) -> Coin:
    """The coin acting at lattice position ``x``.  Total and deterministic."""
    side, r, _ = residue_and_period_index(spec, x)
    if side == "plus":
        return spec.period_plus[r]
    if side == "minus":
        return spec.period_minus[r]
    return spec.defects[r]


def validate(spec: ModelSpec, tol: float = DEFAULT_TOL) -> list[str]:
    """Check every model invariant; returns one message per violation.

    An empty list means the model is valid.  A coin with alpha = 0 anywhere
    is reported as the excluded reflecting case.
    """
    out: list[str] = []
    if spec.n_plus < 1:
        out.append("period_plus is empty (need n_plus >= 1)")
    if spec.n_minus < 1:
        out.append("period_minus is empty (need n_minus >= 1)")
    if spec.x_plus < 0:
        out.append(f"x_plus = {spec.x_plus} must be >= 0")
    if spec.x_minus > 0:
        out.append(f"x_minus = {spec.x_minus} must be <= 0")
    expected = spec.x_plus - spec.x_minus
    if len(spec.defects) != expected:
        out.append(
            f"defects has length {len(spec.defects)}, expected x_plus - x_minus = {expected}"
        )
    groups = [
        ("period_plus", spec.period_plus),
        ("period_minus", spec.period_minus),
        ("defects", spec.defects),
    ]
    for name, coins in groups:
        for k, coin in enumerate(coins):
            for msg in coin.violations(tol):
                out.append(f"{name}[{k}]: {msg}")
    return out


# -- state vectors -----------------------------------------------------------


@dataclass
class StateVector:
    """Finitely supported two-component amplitudes on a contiguous window.

    ``amps[k]`` holds ``(L, R)`` at position ``lo + k``; positions outside
    ``[lo, hi]`` are implicitly zero.
    """

    lo: int
    amps: np.ndarray  # shape (hi - lo + 1, 2), complex

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=complex)
        if self.amps.ndim != 2 or self.amps.shape[1] != 2 or self.amps.shape[0] < 1:
            raise ValueError(f"amplitude array has shape {self.amps.shape}, need (N, 2)")

    @property
    def hi(self) -> int:
        return self.lo + self.amps.shape[0] - 1

    @property
    def positions(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    @classmethod
    def from_points(cls, points: Iterable[tuple[int, complex, complex]]) -> "StateVector":
        """Build from (x, L, R) triples; the window is their integer hull."""
        pts = list(points)
        if not pts:
            raise ValueError("need at least one (x, L, R) point")
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        amps = np.zeros((hi - lo + 1, 2), dtype=complex)
        for x, left, right in pts:
            amps[x - lo, 0] += left
            amps[x - lo, 1] += right
        return cls(lo, amps)

    def value_at(self, x: int) -> np.ndarray:
        """Amplitude pair at ``x`` (zero outside the window)."""
        if self.lo <= x <= self.hi:
            return self.amps[x - self.lo].copy()
        return np.zeros(2, dtype=complex)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def normalized(self) -> "StateVector":
        n = math.sqrt(self.norm_sq())
        if n == 0.0:
            raise ValueError("cannot normalize the zero state")
        return StateVector(self.lo, self.amps / n)

    def restricted(self, lo: int, hi: int) -> "StateVector":
        """Copy on the window [lo, hi], zero-padded where unsupported."""
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        amps = np.zeros((hi - lo + 1, 2), dtype=complex)
        a = max(lo, self.lo)
        b = min(hi, self.hi)
        if a <= b:
            amps[a - lo : b - lo + 1] = self.amps[a - self.lo : b - self.lo + 1]
        return StateVector(lo, amps)


def origin_state(left: complex, right: complex) -> StateVector:
    """Single-site state at the origin."""
    return StateVector(0, np.array([[left, right]], dtype=complex))


# -- JSON model files --------------------------------------------------------
#
# Schema: {"x_plus": int, "x_minus": int, "period_plus": [coin, ...],
#          "period_minus": [...], "defects": [...]} with each coin encoded as
# {"delta": radians, "alpha": [re, im], "beta": [re, im]}.  Unknown keys are
# ignored so the same file may carry extra run parameters (e.g. an initial
# state for the command-line driver).


def _coin_to_dict(coin: Coin) -> dict:
    return {
        "delta": coin.delta,
        "alpha": [coin.alpha.real, coin.alpha.imag],
        "beta": [coin.beta.real, coin.beta.imag],
    }


def _coin_from_dict(d: dict) -> Coin:
    return Coin(
        delta=float(d["delta"]),
        alpha=complex(d["alpha"][0], d["alpha"][1]),
        beta=complex(d["beta"][0], d["beta"][1]),
    )


def model_to_dict(spec: ModelSpec) -> dict:
    return {
        "x_plus": spec.x_plus,
        "x_minus": spec.x_minus,
        "period_plus": [_coin_to_dict(c) for c in spec.period_plus],
        "period_minus": [_coin_to_dict(c) for c in spec.period_minus],
        "defects": [_coin_to_dict(c) for c in spec.defects],
    }


def model_from_dict(d: dict) -> ModelSpec:
    return ModelSpec(
        x_plus=int(d["x_plus"]),
        x_minus=int(d["x_minus"]),
        period_plus=tuple(_coin_from_dict(c) for c in d["period_plus"]),
        period_minus=tuple(_coin_from_dict(c) for c in d["period_minus"]),
        defects=tuple(_coin_from_dict(c) for c in d.get("defects", [])),
    )


def load_model(path: str | Path) -> ModelSpec:
    """Read a model config file (JSON, angles in radians)."""
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_dict(json.load(fh))


def save_model(spec: ModelSpec, path: str | Path, extra: dict | None = None) -> None:
    """Write a model config file; ``extra`` keys are merged at top level."""
    d = model_to_dict(spec)
    if extra:
        d.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(d, fh, indent=2)
        fh.write("\n")
