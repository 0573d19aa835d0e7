"""Shared result containers for the expansion drivers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ContourSpec:
    """Circle contour for the Cauchy-integral oracles.

    ``radius`` must keep the circle inside the integrand's analyticity
    annulus (each family validates its own constraint); ``nodes`` is the
    trapezoidal node count, which converges spectrally.
    """

    radius: float = 0.5
    nodes: int = 512

    def __post_init__(self):
        if self.nodes < 4:
            raise ValueError("nodes must be >= 4")


@dataclass(frozen=True)
class ExpansionResult:
    """Truncated-expansion output.

    ``partial_sums[k]`` is the sum through term k; ``value`` is the last
    partial sum; ``error_estimate`` is the magnitude of the last term
    added (mpf); ``flags`` carries warnings such as evaluation outside a
    proven convergence region.
    """

    value: object
    partial_sums: tuple
    terms_used: int
    truncation_order: int
    error_estimate: object
    flags: tuple = field(default_factory=tuple)

    def partial(self, k: int):
        return self.partial_sums[k]
