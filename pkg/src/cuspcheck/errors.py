"""Exception types shared across the package.

The CLI maps InputError to exit code 3 (malformed input) and StageFailure to
exit code 2 (a pipeline stage computed a value that contradicts its claim).
Everything else is a genuine bug and escapes as a normal traceback.
"""


class InputError(ValueError):
    """Invalid argument to a public operation (dimension mismatch, bad class, ...)."""


class StageFailure(RuntimeError):
    """A verification stage produced a value that fails its stated claim."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"stage '{stage}' failed: {message}")
        self.stage = stage
