"""Bundled desk models: the three figure configurations and a homogeneous walk.

The figure models pin down every parameter, including two values their
captions leave implicit: the one-defect model's defect phase is forced to
3*pi/4 by the family's premise, and the phase-uniform two-phase model gets
real positive alpha = sqrt(1 - |beta|^2) on all four coins (its spectrum
formula is alpha-free, so any admissible completion validates the oracle).

Every model ships with the captions' initial state, an equal-weight
two-component unit vector at the origin.
"""

from __future__ import annotations

import math
from pathlib import Path

from .model import Coin, ModelSpec, StateVector, hadamard_coin, origin_state, save_model

_SQRT2_INV = 1.0 / math.sqrt(2.0)


def fig1_model() -> ModelSpec:
    """One defect at the origin over a period-2 background.

    Background coins (delta, alpha, beta) = (pi/2, 1/sqrt2, i/sqrt2) and
    (-pi/2, 1/sqrt2, 1/sqrt2); diagonal defect coin with delta = 3*pi/4.
    Its four eigenvalue angles are pi/8, 3*pi/8, 9*pi/8, 11*pi/8.
    """
    c1 = Coin(math.pi / 2, _SQRT2_INV, 1j * _SQRT2_INV)
    c2 = Coin(-math.pi / 2, _SQRT2_INV, _SQRT2_INV)
    c0 = Coin(3 * math.pi / 4, 1.0, 0.0)
    return ModelSpec(
        x_plus=1, x_minus=0, period_plus=(c1, c2), period_minus=(c1, c2), defects=(c0,)
    )


def fig2_model() -> ModelSpec:
    """Two-phase period-2 model with diagonal coins at odd positions.

    beta differs between the negative phase (e^{i pi/4}/sqrt2) and the
    non-negative phase (1/sqrt2); four eigenvalue angles.
    """
    beta_m = _SQRT2_INV * complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
    cm0 = Coin(math.pi / 2, _SQRT2_INV, beta_m)
    cp0 = Coin(math.pi / 2, _SQRT2_INV, _SQRT2_INV)
    c_odd = Coin(-math.pi / 2, 1.0, 0.0)
    return ModelSpec(
        x_plus=0, x_minus=0, period_plus=(cp0, c_odd), period_minus=(cm0, c_odd), defects=()
    )


def fig3_model() -> ModelSpec:
    """Two-phase period-2 model with one beta per phase; two eigenvalue angles."""
    beta_m = _SQRT2_INV * complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
    beta_p = _SQRT2_INV
    alpha = _SQRT2_INV
    return ModelSpec(
        x_plus=0,
        x_minus=0,
        period_plus=(Coin(math.pi / 2, alpha, beta_p), Coin(-math.pi / 2, alpha, beta_p)),
        period_minus=(Coin(math.pi / 2, alpha, beta_m), Coin(-math.pi / 2, alpha, beta_m)),
        defects=(),
    )


def homogeneous_hadamard_model() -> ModelSpec:
    """Balanced coin everywhere; no localization."""
    h = hadamard_coin()
    return ModelSpec(x_plus=0, x_minus=0, period_plus=(h,), period_minus=(h,), defects=())


def caption_initial_state() -> StateVector:
    """Unit state [1/sqrt2, 1/sqrt2] at the origin."""
    return origin_state(_SQRT2_INV, _SQRT2_INV)


MODELS = {
    "fig1": fig1_model,
    "fig2": fig2_model,
    "fig3": fig3_model,
    "homogeneous": homogeneous_hadamard_model,
}


def write_config(name: str, path: str | Path) -> None:
    """Write one bundled model as a JSON config, initial state included."""
    spec = MODELS[name]()
    state = caption_initial_state()
    triples = [
        [int(x), [amp[0].real, amp[0].imag], [amp[1].real, amp[1].imag]]
        for x, amp in zip(state.positions, state.amps)
    ]
    save_model(spec, path, extra={"initial_state": triples})


def write_all_configs(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in MODELS:
        path = directory / f"{name}.json"
        write_config(name, path)
        out.append(path)
    return out
