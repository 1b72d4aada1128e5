# SPDX-License-Identifier: BSD-2-Clause

from dataclasses import dataclass


__all__ = ["PackParams"]


@dataclass(frozen=True)
class PackParams:
    """Exponent ``t``, lattice scale ``M`` and the index range ``[n0, n_max)`` of a run.

    ``K`` is optional; when given, each step records the budget increment
    bound ``50 / (K^{t(2-t)} M) * sum f(n)^{-t-delta t}`` over the consumed
    indices.
    """
    t: float
    M: int
    n0: int
    n_max: int
    K: float = None

    def __post_init__(self):
        if not 0.5 < self.t < 1:
            raise ValueError(f"Exponent t must lie in (1/2, 1), not {self.t!r}")
        if self.M < 1:
            raise ValueError(f"Lattice scale M must be at least 1, not {self.M}")
        if self.n0 < 1:
            raise ValueError(f"Starting index n0 must be positive, not {self.n0}")
        if self.n_max < self.n0:
            raise ValueError(f"n_max ({self.n_max}) must not be below n0 ({self.n0})")
        if self.K is not None and not 0 < self.K <= 1:
            raise ValueError(f"Constant K must lie in (0, 1], not {self.K!r}")

    @property
    def delta(self):
        return 1 - self.t

    @property
    def window(self):
        """Largest number of indices one lattice packing may consume."""
        return 9 * self.M * self.M
