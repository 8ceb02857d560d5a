"""Exception types shared across the package."""


class GforgeError(Exception):
    """Base class for all gforge errors."""


class LengthOverflowError(GforgeError):
    """A clip is longer than the padding target allows."""


class SchemaError(GforgeError):
    """A serialized file does not match the expected schema."""


class NtuParseError(GforgeError):
    """A .skeleton file is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class EmptyClipError(GforgeError):
    """A source file yielded no usable motion frames."""


class UnknownLabelError(GforgeError):
    """A label id or name has no mapping in the current dataset."""


class ExperimentStageError(GforgeError):
    """A run_experiment stage failed; carries the stage name."""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stage '{stage}' failed: {message}")
