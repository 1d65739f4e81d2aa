"""Transfer matrices, period-block products, and the block spectral quantities.

At spectral angle ``lam`` the coin (delta, alpha, beta) induces the transfer
matrix

    T(lam) = (1/alpha) [[e^{i(lam-delta)}, -beta],
                        [-conj(beta),      e^{-i(lam-delta)}]]

which propagates generalized-eigenfunction data one site rightwards.  Products
are taken right-to-left: ``product([A0, A1, ..., An])`` is ``An @ ... @ A0``
and the empty product is the identity.

The ordered product of one full period of transfer matrices (the period
block) has determinant of modulus one; its eigenvalue pair (zeta_gt, zeta_lt)
with |zeta_gt| >= 1 >= |zeta_lt| controls tail growth/decay and is computed
here in closed form from the real trace invariant

    A = (1/2) * (prod_k alpha_k) * trace(block).

All operations are pure functions; ``lam`` may be a scalar or an ndarray of
angles, in which case matrices come back stacked as (..., 2, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import Coin, ModelSpec, coin_at

#: imaginary residue allowed before trace_invariant_A declares breakdown
IMAG_TOL = 1e-10

#: below this |discriminant| the two block eigenvalues are treated as coincident
COINCIDENT_DISC = 1e-14


class ImaginaryResidueTooLarge(ArithmeticError):
    """The trace invariant came out with a non-negligible imaginary part.

    It is real for every valid coin list, so this signals numerical breakdown
    or an invalid coin.
    """


def identity2(shape=()) -> np.ndarray:
    """Identity 2x2, optionally broadcast to a stacked shape."""
    out = np.zeros(tuple(shape) + (2, 2), dtype=complex)
    out[..., 0, 0] = 1.0
    out[..., 1, 1] = 1.0
    return out


def det2(m: np.ndarray) -> np.ndarray:
    """Determinant of (stacked) 2x2 matrices."""
    m = np.asarray(m)
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def inv2(m: np.ndarray) -> np.ndarray:
    """Inverse of (stacked) 2x2 matrices via adjugate / determinant."""
    m = np.asarray(m)
    out = np.empty_like(m)
    out[..., 0, 0] = m[..., 1, 1]
    out[..., 0, 1] = -m[..., 0, 1]
    out[..., 1, 0] = -m[..., 1, 0]
    out[..., 1, 1] = m[..., 0, 0]
    return out / det2(m)[..., None, None]


def transfer_matrix(coin: Coin, lam) -> np.ndarray:
    """Transfer matrix of one coin at spectral angle(s) ``lam``.

    det T = conj(alpha)/alpha, so |det T| = 1.
    """
    lam = np.asarray(lam, dtype=float)
    e = np.exp(1j * (lam - coin.delta))
    out = np.empty(lam.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = e
    out[..., 0, 1] = -coin.beta
    out[..., 1, 0] = -coin.beta.conjugate()
    out[..., 1, 1] = np.conj(e)
    out /= coin.alpha
    return out


def product(ms: Sequence[np.ndarray]) -> np.ndarray:
    """Right-to-left matrix product; the empty product is the identity."""
    ms = list(ms)
    if not ms:
        return identity2()
    acc = np.asarray(ms[0], dtype=complex)
    for m in ms[1:]:
        acc = np.asarray(m) @ acc
    return acc


def period_block(coins: Sequence[Coin], lam) -> np.ndarray:
    """Product of one full period of transfer matrices (last coin leftmost)."""
    if not coins:
        raise ValueError("period_block needs a nonempty coin list")
    return product([transfer_matrix(c, lam) for c in coins])


def shifted_block(coins: Sequence[Coin], lam, k: int) -> np.ndarray:
    """Cyclically shifted period block: (T_{k-1}..T_0) @ (T_{n-1}..T_k).

    Similar to the k=0 block for every k, so its eigenvalue pair does not
    depend on k.
    """
    n = len(coins)
    if not 0 <= k < n:
        raise ValueError(f"shift index k={k} outside 0..{n - 1}")
    left = product([transfer_matrix(c, lam) for c in coins[:k]])
    right = product([transfer_matrix(c, lam) for c in coins[k:]])
    return left @ right


def boundary_products(spec: ModelSpec, lam) -> tuple[np.ndarray, np.ndarray]:
    """Defect-window boundary products (T_plus, T_minus).

    T_plus multiplies the transfer matrices at positions 0..x_plus-1
    (right-to-left); T_minus multiplies the inverses at positions
    -1..x_minus (inverse of position -i applied after -(i-1)).  Each is the
    identity when the corresponding cut point sits at the origin.
    """
    t_plus = product([transfer_matrix(coin_at(spec, x), lam) for x in range(0, spec.x_plus)])
    t_minus = product(
        [inv2(transfer_matrix(coin_at(spec, -i), lam)) for i in range(1, -spec.x_minus + 1)]
    )
    shape = np.asarray(lam, dtype=float).shape
    if t_plus.ndim == 2 and shape:
        t_plus = np.broadcast_to(t_plus, shape + (2, 2)).copy()
    if t_minus.ndim == 2 and shape:
        t_minus = np.broadcast_to(t_minus, shape + (2, 2)).copy()
    return t_plus, t_minus


def alpha_product(coins: Sequence[Coin]) -> complex:
    out = complex(1.0)
    for c in coins:
        out *= c.alpha
    return out


def _trace_invariant_complex(coins: Sequence[Coin], lam) -> np.ndarray:
    block = period_block(coins, lam)
    return 0.5 * alpha_product(coins) * np.trace(block, axis1=-2, axis2=-1)


def trace_invariant_A(coins: Sequence[Coin], lam):
    """The real trace invariant A of a coin list at angle(s) ``lam``.

    Raises ImaginaryResidueTooLarge if the imaginary residue exceeds 1e-10;
    returns the real part (scalar for scalar ``lam``).
    """
    a = _trace_invariant_complex(coins, lam)
    worst = float(np.max(np.abs(a.imag)))
    if not worst <= IMAG_TOL:  # NaN-safe: breakdown must raise, not pass
        raise ImaginaryResidueTooLarge(
            f"trace invariant has imaginary residue {worst:.3e} (tolerance {IMAG_TOL})"
        )
    if np.ndim(a) == 0:
        return float(a.real)
    return np.asarray(a.real)


@dataclass(frozen=True)
class ZetaPair:
    """Eigenvalue pair of a period block, with |zeta_gt| >= 1 >= |zeta_lt|.

    ``a_value`` is the real trace invariant and ``discriminant`` is
    a_value^2 - prod_k |alpha_k|^2; the pair moduli multiply to 1, and the
    discriminant's sign separates decaying tails (positive) from the
    unimodular case (non-positive).
    """

    zeta_gt: complex
    zeta_lt: complex
    a_value: float
    discriminant: float


def zeta_values(coins: Sequence[Coin], lam) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (zeta_gt, zeta_lt, A, discriminant) at angle(s) ``lam``.

    The closed form uses sgn(A) and the principal square root: for a positive
    discriminant this yields |zeta_gt| > 1 > |zeta_lt|; for a negative one,
    two unimodular values.  |discriminant| < 1e-14 is treated as a coincident
    pair (both roots A / prod(alpha)).  At A == 0 exactly (only possible with
    a negative discriminant) the A-free values -+ sqrt(-disc)/prod(alpha) are
    returned; downstream positivity gating never consumes that branch.
    """
    a = trace_invariant_A(coins, lam)
    a = np.asarray(a, dtype=float)
    prod_alpha = alpha_product(coins)
    prod_abs_sq = abs(prod_alpha) ** 2
    disc = a * a - prod_abs_sq

    coincident = np.abs(disc) < COINCIDENT_DISC
    root = np.sqrt(np.where(coincident, 0.0, disc).astype(complex))
    sgn = np.sign(a)
    zg = (a + sgn * root) / prod_alpha
    zl = (a - sgn * root) / prod_alpha

    azero = (sgn == 0) & ~coincident
    if np.any(azero):
        real_root = np.sqrt(np.where(azero, -disc, 0.0))
        zg = np.where(azero, -real_root / prod_alpha, zg)
        zl = np.where(azero, +real_root / prod_alpha, zl)
    return zg, zl, a, disc


def zeta_pair(coins: Sequence[Coin], lam: float) -> ZetaPair:
    """Closed-form eigenvalue pair of the period block at a single angle."""
    zg, zl, a, disc = zeta_values(coins, lam)
    return ZetaPair(complex(zg), complex(zl), float(a), float(disc))
