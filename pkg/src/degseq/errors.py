"""Exception hierarchy shared by the degseq modules."""


class DegSeqError(Exception):
    """Base class for every error raised by degseq."""


class ParseError(DegSeqError, ValueError):
    """Sequence text does not follow the ``V`` / ``V^C`` grammar."""


class ZeroEntry(ParseError):
    pass


class EmptySequence(ParseError):
    pass


class Malformed(ParseError):
    pass


class Overflow(ParseError):
    pass


class BadParameters(DegSeqError, ValueError):
    pass


class IndexOutOfRange(DegSeqError, IndexError):
    pass


class NotGraphic(DegSeqError):
    """Raised by the realizer when no simple graph has the given degrees."""

    def __init__(self, seq, report=None):
        super().__init__(f"{seq} is not graphic")
        self.seq = seq
        self.report = report


class Refused(DegSeqError):
    """A feasibility guard rejected a search that would be too large."""
