"""Exception types shared across the toolkit."""


class CodestyloError(Exception):
    """Base class for every error raised by this package."""


class LexError(CodestyloError):
    """Source text cannot be tokenized (unterminated string, unclosed bracket)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EmptyCorpus(CodestyloError):
    """Corpus traversal yielded no usable samples."""


class UnknownCategory(CodestyloError):
    """Corpus directory name is not a recognized task category."""


class SchemaMismatch(CodestyloError):
    """File header, column layout, or model schema differs from the contract."""


class DegenerateSplit(CodestyloError):
    """Requested split would leave a class empty on one side."""


class DegenerateInput(CodestyloError):
    """Training data lacks the variety the estimator requires."""


class BadK(CodestyloError):
    """Neighbor count is even, non-positive, or exceeds the training set."""


class LengthMismatch(CodestyloError):
    """Paired sequences (predictions and truth) differ in length."""


class WrongModelKind(CodestyloError):
    """Operation applies to a different estimator kind than the one given."""


class NotFitted(CodestyloError):
    """Estimator method needs a fitted model; call fit first."""


class NoCodeBlock(CodestyloError):
    """Chat response contains no fenced code block to extract."""


class TransportError(CodestyloError):
    """HTTP request failed or the endpoint answered with garbage."""


class GenerationFailed(CodestyloError):
    """Every prompt in a generation batch failed."""

    def __init__(self, message: str, outcomes=()):
        super().__init__(message)
        self.outcomes = tuple(outcomes)
