"""Exception types raised by the evaluation and verification routines."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """The eta-to-zeta prefactor is evaluated at (or too near) a zero of 2**s - 2."""

    def __init__(self, s, denom_magnitude, message=None):
        self.s = complex(s)
        self.denom_magnitude = float(denom_magnitude)
        super().__init__(message or _pole_message(self.s, self.denom_magnitude))


class NonConvergence(ArithmeticError):
    """A refinement loop exhausted its budget before meeting the tolerance."""


class ToleranceUnreachable(NonConvergence):
    """A series would need more terms than its hard cap allows."""


class StepTooLarge(ArithmeticError):
    """Richardson-extrapolated differences disagree by more than the tolerance."""


class EnvelopeViolation(ValueError):
    """A sampled integrand exceeded the decay envelope declared by its caller."""


def _pole_message(s, denom_magnitude):
    import math

    k = round(s.imag * math.log(2.0) / (2.0 * math.pi))
    if k == 0:
        where = "s = 1"
    else:
        where = f"s = 1{'+' if k > 0 else '-'}2*pi*{abs(k)}i/ln2 ({s.real:.10g}{s.imag:+.10g}i)"
    return f"prefactor pole at {where}: |2^s - 2| = {denom_magnitude:.3g}"
