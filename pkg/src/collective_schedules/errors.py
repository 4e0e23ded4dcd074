"""Exception types shared across the package."""

from __future__ import annotations


class CollectiveSchedulesError(Exception):
    """Base class for all errors raised by this package."""


class UnknownTaskError(CollectiveSchedulesError):
    """A task id does not belong to the task set in use."""


class DuplicateTaskError(CollectiveSchedulesError):
    """A task id appears more than once in a task set."""


class MismatchedTaskSetError(CollectiveSchedulesError):
    """A schedule or profile does not range over the expected task set."""


class TooManyTasksError(CollectiveSchedulesError):
    """The instance exceeds the configured exact-solver size guard."""


class InvalidSpecError(CollectiveSchedulesError):
    """A generator spec or option set is malformed."""


class InvalidReductionError(CollectiveSchedulesError):
    """A length-reduction probe was asked for an impossible reduction."""


class InstanceFormatError(CollectiveSchedulesError):
    """An instance file does not match the expected JSON shape."""
