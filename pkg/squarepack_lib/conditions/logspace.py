# SPDX-License-Identifier: BSD-2-Clause

import math
from dataclasses import dataclass


__all__ = ["LogNumber", "log_max"]


LN10 = math.log(10)
# exp() overflows past this
MAX_LN = 709.0


@dataclass(frozen=True, order=True)
class LogNumber:
    """A nonnegative real held as its natural logarithm; zero is ``-inf``."""
    ln: float

    @classmethod
    def of(cls, value):
        if value < 0:
            raise ValueError(f"LogNumber holds nonnegative values, not {value!r}")
        return cls(math.log(value) if value > 0 else -math.inf)

    def __mul__(self, other):
        return LogNumber(self.ln + _ln(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return LogNumber(self.ln - _ln(other))

    def __pow__(self, exponent):
        return LogNumber(self.ln * exponent)

    @property
    def log10(self):
        return self.ln / LN10

    def ceil_log10(self):
        return math.ceil(self.log10)

    def to_float(self):
        return math.exp(self.ln) if self.ln < MAX_LN else math.inf

    def ceil_int(self):
        """``ceil`` of the value when it fits a float exactly, otherwise ``None``."""
        if self.ln < 36:
            return math.ceil(self.to_float())
        return None

    def __str__(self):
        if self.ln == -math.inf:
            return "0"
        log10 = self.log10
        if abs(log10) < 12:
            return f"{self.to_float():.6g}"
        exponent = math.floor(log10)
        return f"{10 ** (log10 - exponent):.4f}e{exponent}"


def _ln(value):
    if isinstance(value, LogNumber):
        return value.ln
    return LogNumber.of(value).ln


def log_max(*values):
    return max(values, key=lambda v: v.ln)
