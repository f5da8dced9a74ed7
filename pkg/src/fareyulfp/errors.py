"""Exception types shared across the package."""


class EmptyProjection(ValueError):
    """A curve was projected to an annulus whose core it equals."""


class PreconditionViolation(ValueError):
    """An operation was called outside its stated domain."""


class HypothesisViolation(PreconditionViolation):
    """A verification query fails one of the theorem hypotheses.

    The message names the failed hypothesis so callers can report it.
    """


class DisconnectedQuery(ValueError):
    """A distance or cover query spans several graph components."""
