# SPDX-License-Identifier: BSD-2-Clause

class SquarePackError(Exception):
    pass


class UsageError(SquarePackError):
    pass


class IndexBeyondSieve(SquarePackError):
    def __init__(self, index, available):
        self.index = index
        self.available = available
        super().__init__(f"Index {index} lies beyond the enumerated table "
                         f"(holds {available} entries)")


class LimitTooLarge(SquarePackError):
    def __init__(self, limit, budget):
        self.limit = limit
        self.budget = budget
        super().__init__(f"Sieve limit {limit} exceeds the configured budget {budget}; "
                         f"raise `sieve_limit` or PACKER_SIEVE_LIMIT to allow it")


class NonConvergent(SquarePackError):
    def __init__(self, s):
        self.s = s
        super().__init__(f"Series with exponent s={s} does not converge (need s > 1)")


class EnclosureTooWide(SquarePackError):
    def __init__(self, width, tolerance):
        self.width = width
        self.tolerance = tolerance
        super().__init__(f"Enclosure relative width {width:.3e} exceeds the requested "
                         f"tolerance {tolerance:.3e}")


class _GateError(SquarePackError):
    """Failure of a runtime gate of the packing engine; carries the index reached."""

    n_reached = None

    @property
    def reason(self):
        return str(self)


class PreconditionViolated(_GateError):
    def __init__(self, which, lhs=None, rhs=None, n_reached=None):
        self.which = which
        self.lhs = lhs
        self.rhs = rhs
        self.n_reached = n_reached
        detail = "" if lhs is None else f" ({lhs!r} vs {rhs!r})"
        super().__init__(f"Precondition `{which}` violated{detail}")


class NoWideRectangle(_GateError):
    def __init__(self, needed, best_available, n_reached=None):
        self.needed = needed
        self.best_available = best_available
        self.n_reached = n_reached
        super().__init__(f"No free rectangle of width at least {needed!r}; "
                         f"widest available is {best_available!r}")


class EccentricityGateFailed(_GateError):
    def __init__(self, slice_index, lhs, rhs, n_reached=None):
        self.slice_index = slice_index
        self.lhs = lhs
        self.rhs = rhs
        self.n_reached = n_reached
        super().__init__(f"Slice {slice_index} fails the eccentricity gate: "
                         f"2f(n)^-t = {lhs!r} > 3f(n')^-t = {rhs!r}")


class ContractViolation(_GateError):
    def __init__(self, message, n_reached=None):
        self.n_reached = n_reached
        super().__init__(message)


class MalformedManifest(SquarePackError):
    def __init__(self, path, detail):
        self.path = path
        self.detail = detail
        super().__init__(f"Malformed manifest `{path}`: {detail}")


class TooLarge(SquarePackError):
    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"Input of {size} elements exceeds the limit of {limit}")
