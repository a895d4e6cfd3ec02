"""Exception types shared across the toolkit."""


class PhasebenchError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(PhasebenchError):
    """Invalid configuration or usage (CLI exit code 2)."""


class BudgetExceededError(PhasebenchError):
    """Input lies outside the finite working domain of a table encoding."""


class IsoInfeasibleError(PhasebenchError):
    """No slot-respecting bijection exists for the requested language/budget."""


class ContractViolationError(PhasebenchError):
    """A caller violated an operation precondition (e.g. tie-breaking a
    non-symmetric word)."""


class UndefinedParameterError(PhasebenchError):
    """The canonical parameter is undefined for this input (image length 0)."""


class EmptySliceError(PhasebenchError):
    """Accepting fraction requested for an empty slice."""
