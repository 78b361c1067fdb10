"""Exception types shared across the package.

Every numerical refusal has a dedicated class so callers (and the CLI exit
code mapping) can tell a pole hit from a truncation problem without parsing
messages.  Plain ValueError is reserved for malformed input such as an
unparseable complex literal or an out-of-range grid parameter.
"""


class ComputationError(Exception):
    """Base class for every domain-specific numerical error."""


class PoleAtOne(ComputationError):
    """Evaluation requested exactly at the simple pole s = 1."""


class PoleAtZero(ComputationError):
    """Evaluation requested at s = 0 where the completed zeta is singular."""


class PoleHit(ComputationError):
    """A closed-form zeta was evaluated exactly at one of its poles."""


class FactorSingular(ComputationError):
    """An Euler factor 1/(1 - p^{-s}) has a vanishing denominator."""


class BadAlpha(ComputationError):
    """Hurwitz parameter alpha outside (0, 1]."""


class ToleranceUnreachable(ComputationError):
    """The requested absolute error cannot be certified within max_terms."""


class EmptyTruncation(ComputationError):
    """A builtin string was truncated below its first atom."""


class TruncationTooShort(ComputationError):
    """The atom list provably misses atoms at or below the requested point."""


class InsufficientAtoms(ComputationError):
    """Too few atoms for the requested estimate."""


class UnsupportedKind(ComputationError):
    """The closed-form family does not support the requested operation."""


class AssumptionViolated(ComputationError):
    """A simplifying hypothesis of a formula fails for these inputs."""


class DivergentTail(ComputationError):
    """A tail-tolerance cut was requested where the tail does not converge."""


class UnboundedOnSegment(ComputationError):
    """|psi| exceeds the overflow guard on the spectral segment (pole case)."""


class WindowTooSmall(ComputationError):
    """Grid window does not contain the required support interval."""


class ProfileDiscontinuous(ComputationError):
    """A sampled height profile jumps more than the continuity bound allows."""


class RadiusTooSmall(ComputationError):
    """Taylor disk around the expansion point does not cover the box."""


class VanishingTarget(ComputationError):
    """Target function vanishes on the grid; rejected by the guard."""
