"""Membership in the set of states that keep satisfying the three-setting
steering inequality under every global unitary.

Over the unitary orbit of a state the best three-setting value is attained
at a Bell-diagonal state and depends only on the spectrum:

    best^2 = 3 sum_i x_i^2 - 2 sum_{i<j} x_i x_j = 4 Tr(rho^2) - 1.

Membership is therefore equivalent to purity <= 1/2, to the Bloch-parameter
sum |a|^2 + |b|^2 + ||T||_F^2 <= 1, and to lying in the Frobenius ball of
radius 1/2 around the maximally mixed state.  All routes are computed
independently and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalInconsistency
from .linalg import frobenius_norm, hermitian_eigensystem
from . import states

# Tolerance for boundary comparisons, applied on the purity scale.
BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class AbsoluteVerdict:
    """Outcome of the four independent membership criteria."""

    in_aus3: bool
    f3_global_max: float  # best three-setting value over the unitary orbit
    spectrum_lhs: float   # 3 Tr(rho^2) - 2 sum_{i<j} x_i x_j, from eigenvalues
    purity: float         # Tr(rho^2), from the Frobenius norm of rho
    bloch_sum: float      # |a|^2 + |b|^2 + ||T||_F^2


@dataclass(frozen=True)
class BellDiagonalState:
    """Spectrum placed on the Bell basis, with the unitary that gets there."""

    weights: np.ndarray  # (4,) descending, assigned to {Phi+, Phi-, Psi+, Psi-}
    unitary: np.ndarray  # (4, 4), canonical = unitary @ rho @ unitary^dagger
    matrix: np.ndarray   # (4, 4) the Bell-diagonal state itself


def f3_global_max(spectrum) -> float:
    """Best three-setting value over the global-unitary orbit of a spectrum.

    Accepts a SpectrumReport or four eigenvalues summing to 1.
    """
    if isinstance(spectrum, states.SpectrumReport):
        x = spectrum.eigenvalues
    else:
        x = np.asarray(spectrum, dtype=float)
    if x.shape != (4,):
        raise ValueError(f"expected 4 eigenvalues, got shape {x.shape}")
    pair = sum(x[i] * x[j] for i in range(4) for j in range(i + 1, 4))
    lhs = 3.0 * float(np.sum(x**2)) - 2.0 * float(pair)
    return float(np.sqrt(max(lhs, 0.0)))


def decide_aus3(rho: np.ndarray) -> AbsoluteVerdict:
    """Evaluate all four membership criteria and require they agree.

    Each criterion runs on its own code path (eigensolver, matrix norm,
    Bloch decomposition, orbit formula).  The booleans are compared on a
    common purity scale; disagreement or a broken algebraic identity raises
    InternalInconsistency rather than silently picking a winner.
    """
    rho = np.asarray(rho, dtype=complex)

    x = hermitian_eigensystem(rho).eigenvalues
    pair = sum(x[i] * x[j] for i in range(4) for j in range(i + 1, 4))
    spectrum_lhs = 3.0 * float(np.sum(x**2)) - 2.0 * float(pair)

    purity = frobenius_norm(rho) ** 2

    form = states.to_bloch(rho)
    bloch_sum = float(
        np.sum(form.a**2) + np.sum(form.b**2) + np.sum(form.T**2)
    )

    f3 = float(np.sqrt(max(spectrum_lhs, 0.0)))

    # Purity-equivalents of the four criteria; all should match to ~1e-12.
    purities = {
        "spectrum": (spectrum_lhs + 1.0) / 4.0,
        "frobenius": purity,
        "bloch": (bloch_sum + 1.0) / 4.0,
        "orbit": (f3**2 + 1.0) / 4.0,
    }
    worst = max(abs(p - purity) for p in purities.values())
    if worst > BOUNDARY_TOL:
        raise InternalInconsistency(
            "criteria disagree: "
            + ", ".join(f"{k}={p:.15g}" for k, p in purities.items())
        )
    flags = {k: p <= 0.5 + BOUNDARY_TOL for k, p in purities.items()}
    if len(set(flags.values())) != 1:
        raise InternalInconsistency(f"membership booleans disagree: {flags}")

    return AbsoluteVerdict(
        in_aus3=flags["frobenius"],
        f3_global_max=f3,
        spectrum_lhs=spectrum_lhs,
        purity=purity,
        bloch_sum=bloch_sum,
    )


def bell_diagonal_canonical(rho: np.ndarray) -> BellDiagonalState:
    """Bell-diagonal state carrying the spectrum of rho, plus the unitary.

    The descending eigenvalues are assigned to {Phi+, Phi-, Psi+, Psi-} (any
    assignment gives the same best value; this one is fixed for
    reproducibility).  The returned state attains the orbit optimum.
    """
    rho = np.asarray(rho, dtype=complex)
    sys = hermitian_eigensystem(rho)
    B = states.BELL_BASIS
    U = B @ sys.eigenvectors.conj().T
    canonical = (B * sys.eigenvalues) @ B.conj().T
    return BellDiagonalState(weights=sys.eigenvalues, unitary=U, matrix=canonical)


def frobenius_ball_check(rho: np.ndarray) -> bool:
    """True when rho lies in the Frobenius ball of radius 1/2 around I/4."""
    rho = np.asarray(rho, dtype=complex)
    dist = frobenius_norm(rho - np.eye(4) / 4.0)
    return dist <= 0.5 + 1e-10


def reduced_pair_verdict(psi: np.ndarray) -> dict[str, AbsoluteVerdict]:
    """Membership verdicts for all two-qubit reductions of a pure 3-qubit state.

    For each kept pair the orbit optimum must satisfy best^2 = 1 + 2 l^2
    with l the Bloch length of the traced-out qubit; a violation beyond
    1e-9 raises InternalInconsistency.
    """
    complement = {"AB": "C", "BC": "A", "AC": "B"}
    verdicts: dict[str, AbsoluteVerdict] = {}
    for pair, lone in complement.items():
        sigma = states.reduce_to_pair(psi, pair)
        verdict = decide_aus3(sigma)
        ell = states.single_qubit_bloch_norm(psi, lone)
        expected = 1.0 + 2.0 * ell**2
        if abs(verdict.f3_global_max**2 - expected) > 1e-9:
            raise InternalInconsistency(
                f"pair {pair}: best^2 = {verdict.f3_global_max**2:.15g}, "
                f"expected 1 + 2 l^2 = {expected:.15g}"
            )
        verdicts[pair] = verdict
    return verdicts
