"""Analytic spectra for the special model families, used as independent oracles.

Four families admit closed forms, all with period 2 on each half (or any
period for the homogeneous family):

  * homogeneous periodic (both halves identical, no defect): never localizes;
  * one defect at the origin over a homogeneous period-2 background, with a
    diagonal defect coin whose phase is pinned to the background;
  * two-phase with alternating coins whose odd position is diagonal;
  * two-phase with a phase-uniform beta on both period positions.

Each evaluator takes the family's free parameters, enforces its premises
loudly (a near-miss must fail rather than return a subtly wrong spectrum),
and returns the eigenvalue angles in [0, 2pi).  ``match_proposition``
recognizes which family a full model belongs to, within tolerance, and runs
the matching evaluator.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .model import Coin, ModelSpec

TWO_PI = 2.0 * math.pi

#: tolerance on premise equalities (moduli, angles, pinned phases)
PREMISE_TOL = 1e-10

HOMOGENEOUS = "homogeneous-periodic"
ONE_DEFECT_P2 = "one-defect-period-2"
TWO_PHASE_P2_ALTERNATING = "two-phase-period-2-alternating"
TWO_PHASE_P2_UNIFORM = "two-phase-period-2-uniform"


class PremiseViolated(ValueError):
    """The input does not satisfy the closed form's premises."""


class DegenerateBetaDifference(ArithmeticError):
    """beta_minus equals beta_plus, so the closed form's denominators vanish."""


class NoMatchingProposition(LookupError):
    """The model fits none of the closed-form families."""


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Eigenvalue angles from a closed form, with the branch that produced them."""

    eigen_lambdas: tuple[float, ...]
    case_label: str
    premises_ok: bool = True
    detail: str = ""


def _wrap(theta: float) -> float:
    theta = math.fmod(theta, TWO_PI)
    if theta < 0.0:
        theta += TWO_PI
    if theta >= TWO_PI:
        theta -= TWO_PI
    return theta


def _angles_close(a: float, b: float, tol: float) -> bool:
    d = abs(_wrap(a) - _wrap(b))
    return min(d, TWO_PI - d) <= tol


def _angles_close_mod_pi(a: float, b: float, tol: float) -> bool:
    return abs(math.remainder(a - b, math.pi)) <= tol


def _sorted_angles(angles) -> tuple[float, ...]:
    return tuple(sorted(_wrap(a) for a in angles))


def _spectrum(angles, label: str) -> ClosedFormSpectrum:
    return ClosedFormSpectrum(_sorted_angles(angles), label)


def _coins_equal(a: Coin, b: Coin, tol: float) -> bool:
    return (
        _angles_close(a.delta, b.delta, tol)
        and abs(a.alpha - b.alpha) <= tol
        and abs(a.beta - b.beta) <= tol
    )


# -- the four families ---------------------------------------------------------


def homogeneous_spectrum(spec: ModelSpec, tol: float = PREMISE_TOL) -> ClosedFormSpectrum:
    """Empty spectrum of a homogeneous periodic model (it never localizes)."""
    if spec.x_plus != 0 or spec.x_minus != 0:
        raise PremiseViolated("homogeneous family needs x_plus = x_minus = 0 (no defect window)")
    if spec.n_plus != spec.n_minus:
        raise PremiseViolated("homogeneous family needs equal periods on both halves")
    for k, (cp, cm) in enumerate(zip(spec.period_plus, spec.period_minus)):
        if not _coins_equal(cp, cm, tol):
            raise PremiseViolated(f"period coins differ between halves at index {k}")
    return ClosedFormSpectrum((), HOMOGENEOUS)


def one_defect_p2_spectrum(
    beta_abs: float, arg_b1: float, arg_b2: float, delta1: float, delta2: float
) -> ClosedFormSpectrum:
    """Spectrum of the period-2 one-defect family.

    Free parameters: the common modulus |beta| of the two background betas,
    their arguments, and the two background phase angles.  The defect coin is
    diagonal with its phase pinned by these (checked by match_proposition,
    not here).  Four branches on arg_b1 - arg_b2: the two aligned cases give
    two eigenvalues, the generic cases four.
    """
    if beta_abs <= PREMISE_TOL:
        raise PremiseViolated("background |beta| must be nonzero")
    if beta_abs >= 1.0 - PREMISE_TOL:
        raise PremiseViolated("background |beta| must be < 1 (alpha would vanish)")
    half_sum = 0.5 * (delta1 + delta2)
    diff = math.remainder(arg_b1 - arg_b2, TWO_PI)  # in (-pi, pi]
    imag = beta_abs * beta_abs * math.sin(arg_b1 - arg_b2)
    if abs(diff) <= PREMISE_TOL:
        return _spectrum([half_sum, half_sum + math.pi], "equal-beta-args")
    if abs(abs(diff) - math.pi) <= PREMISE_TOL:
        return _spectrum(
            [half_sum + 0.5 * math.pi, half_sum + 1.5 * math.pi], "opposite-beta-args"
        )
    root = math.sqrt(max(beta_abs**2 - imag**2, 0.0))
    b_plus = (beta_abs + root) / (2.0 * beta_abs)
    b_minus = (beta_abs - root) / (2.0 * beta_abs)
    lam_plus = half_sum + math.atan2(math.sqrt(b_minus), math.sqrt(b_plus))
    lam_minus = half_sum + math.atan2(math.sqrt(b_minus), -math.sqrt(b_plus))
    if imag > 0.0:
        real_pair, imag_pair, label = lam_plus, lam_minus, "imag-positive"
    else:
        real_pair, imag_pair, label = lam_minus, lam_plus, "imag-negative"
    return _spectrum(
        [
            real_pair,
            real_pair + math.pi,
            imag_pair + 0.5 * math.pi,
            imag_pair + 1.5 * math.pi,
        ],
        label,
    )


def _two_phase_existence(beta_m: complex, beta_p: complex) -> bool:
    re = (beta_m * beta_p.conjugate()).real
    return re < abs(beta_m) ** 2 and re < abs(beta_p) ** 2


def _check_two_phase_betas(beta_m: complex, beta_p: complex) -> None:
    if abs(beta_m) >= 1.0 - PREMISE_TOL or abs(beta_p) >= 1.0 - PREMISE_TOL:
        raise PremiseViolated("|beta| must be < 1 on both phases (alpha would vanish)")


def two_phase_p2_alternating_spectrum(
    beta_m: complex, beta_p: complex, delta0: float, delta1: float
) -> ClosedFormSpectrum:
    """Spectrum of the two-phase family with diagonal coins at odd positions.

    Nonempty exactly when Re(beta_m * conj(beta_p)) is below both |beta|^2;
    then four eigenvalues, branched on the sign of Im(beta_m * conj(beta_p)).
    The Im = 0 boundary (with existence holding) is not covered by a branch
    of its own; both branches degenerate to the same four angles there, which
    are returned with a degenerate label for the scanner to confirm.
    """
    beta_m = complex(beta_m)
    beta_p = complex(beta_p)
    _check_two_phase_betas(beta_m, beta_p)
    if not _two_phase_existence(beta_m, beta_p):
        return ClosedFormSpectrum((), "no-localization")
    dist = abs(beta_m - beta_p)
    if dist <= 1e-12:
        raise DegenerateBetaDifference(
            "beta_m == beta_p while the existence condition holds; inconsistent input"
        )
    imag = (beta_m * beta_p.conjugate()).imag
    root = math.sqrt(max(dist * dist - imag * imag, 0.0))
    b_plus = (dist + root) / (2.0 * dist)
    b_minus = (dist - root) / (2.0 * dist)
    half_sum = 0.5 * (delta0 + delta1)
    if imag > 0.0:
        lam = half_sum + math.atan2(math.sqrt(b_minus), math.sqrt(b_plus))
        label = "imag-positive"
    elif imag < 0.0:
        lam = half_sum + math.atan2(-math.sqrt(b_minus), math.sqrt(b_plus))
        label = "imag-negative"
    else:
        lam = half_sum  # b_minus = 0: both branches coincide
        label = "imag-zero-degenerate"
    return _spectrum(
        [lam, lam + 0.5 * math.pi, lam + math.pi, lam + 1.5 * math.pi], label
    )


def two_phase_p2_uniform_spectrum(
    beta_m: complex, beta_p: complex, delta0: float, delta1: float
) -> ClosedFormSpectrum:
    """Spectrum of the two-phase family with one beta per phase.

    Same existence gate as the alternating family; when nonempty, exactly two
    eigenvalues at lam and lam + pi.
    """
    beta_m = complex(beta_m)
    beta_p = complex(beta_p)
    _check_two_phase_betas(beta_m, beta_p)
    if not _two_phase_existence(beta_m, beta_p):
        return ClosedFormSpectrum((), "no-localization")
    dist = abs(beta_m - beta_p)
    if dist <= 1e-12:
        raise DegenerateBetaDifference(
            "beta_m == beta_p while the existence condition holds; inconsistent input"
        )
    imag = (beta_m * beta_p.conjugate()).imag
    root = math.sqrt(max(dist * dist - imag * imag, 0.0))
    unit = complex(root, imag) / dist
    lam = 0.5 * (delta0 + delta1) + cmath.phase(unit)
    return _spectrum([lam, lam + math.pi], "uniform")


# -- model recognition ---------------------------------------------------------


def _match_homogeneous(spec: ModelSpec, tol: float) -> bool:
    return (
        spec.x_plus == 0
        and spec.x_minus == 0
        and spec.n_plus == spec.n_minus
        and all(_coins_equal(a, b, tol) for a, b in zip(spec.period_plus, spec.period_minus))
    )


def _match_one_defect_p2(spec: ModelSpec, tol: float):
    if not (spec.x_plus == 1 and spec.x_minus == 0 and spec.n_plus == 2 and spec.n_minus == 2):
        return None
    if not all(_coins_equal(a, b, tol) for a, b in zip(spec.period_plus, spec.period_minus)):
        return None
    c0 = spec.defects[0]
    c1, c2 = spec.period_plus
    if abs(c0.beta) > tol:
        return None
    if abs(abs(c1.beta) - abs(c2.beta)) > tol or abs(c1.beta) <= tol:
        return None
    arg1 = cmath.phase(c1.beta)
    arg2 = cmath.phase(c2.beta)
    pinned = 0.5 * (c1.delta + c2.delta + arg1 - arg2 + math.pi)
    # the defect transfer matrix acts on kernel directions, so its phase is
    # effective mod pi; delta angles normalized into [0, 2pi) shift the pinned
    # value by pi without changing the spectrum
    if not _angles_close_mod_pi(c0.delta, pinned, tol):
        return None
    beta_abs = 0.5 * (abs(c1.beta) + abs(c2.beta))
    return beta_abs, arg1, arg2, c1.delta, c2.delta


def _match_two_phase_p2(spec: ModelSpec, tol: float):
    """Shared premise of both two-phase families; returns the four coins."""
    if not (spec.x_plus == 0 and spec.x_minus == 0 and spec.n_plus == 2 and spec.n_minus == 2):
        return None
    cm0, cm1 = spec.period_minus
    cp0, cp1 = spec.period_plus
    if not _angles_close(cm0.delta, cp0.delta, tol):
        return None
    if not _angles_close(cm1.delta, cp1.delta, tol):
        return None
    return cm0, cm1, cp0, cp1


def match_proposition(spec: ModelSpec, tol: float = PREMISE_TOL) -> tuple[str, ClosedFormSpectrum]:
    """Recognize which closed-form family ``spec`` belongs to and evaluate it.

    Raises NoMatchingProposition when the model fits none of them.
    """
    if _match_homogeneous(spec, tol):
        return HOMOGENEOUS, homogeneous_spectrum(spec, tol)
    params = _match_one_defect_p2(spec, tol)
    if params is not None:
        return ONE_DEFECT_P2, one_defect_p2_spectrum(*params)
    coins = _match_two_phase_p2(spec, tol)
    if coins is not None:
        cm0, cm1, cp0, cp1 = coins
        if abs(cm1.beta) <= tol and abs(cp1.beta) <= tol:
            return TWO_PHASE_P2_ALTERNATING, two_phase_p2_alternating_spectrum(
                cm0.beta, cp0.beta, cm0.delta, cm1.delta
            )
        if abs(cm0.beta - cm1.beta) <= tol and abs(cp0.beta - cp1.beta) <= tol:
            return TWO_PHASE_P2_UNIFORM, two_phase_p2_uniform_spectrum(
                cm0.beta, cp0.beta, cm0.delta, cm1.delta
            )
    raise NoMatchingProposition("model fits no closed-form family")
