"""Exceptions raised by hiwalks.

Contents
--------

:HiwalksError: Root of every exception raised by this package.
:OrdinalError: Bad ordinal arithmetic or construction.
:ParseError: Base for syntax errors; carries a position.
:OrdinalSyntaxError: Malformed ordinal text.
:ClubSyntaxError: Malformed club literal.
:SpecFileError: Malformed sequence spec file.
:ClubError: A club that cannot be represented or queried.
:TupleError: Tuple arity or ordering violations.
:InvalidIndexError: A tuple outside the index set of a sequence.
:MissingClubError: An index set entry with no assigned club.
:ResourceCapError: A walk that grew past its node cap.
:MoveRejected: An invalid move in the sequence-building game.
:IncoherentSequenceError: A sequence that fails its coherence precondition.
:BuilderError: Invalid parameters for a sequence builder.

"""


class HiwalksError(Exception):
    """Base class for all hiwalks exceptions."""
    pass


class OrdinalError(HiwalksError, ValueError):
    pass


class ParseError(HiwalksError, ValueError):
    """A syntax error with a position.

    Args:
        message (str): What went wrong.
        text (str): The offending input (one line).
        column (int): Zero-based column of the error in ``text``.
        line (int): One-based line number, when the input is a file.
    """

    def __init__(self, message, text="", column=0, line=None):
        self.message = message
        self.text = text
        self.column = column
        self.line = line
        super(ParseError, self).__init__(str(self))

    def __str__(self):
        where = "column %i" % (self.column + 1)
        if self.line is not None:
            where = "line %i, %s" % (self.line, where)
        return "%s: %s" % (where, self.message)

    def at_line(self, line, column_offset=0):
        """Return a copy of this error relocated into a file."""
        return self.__class__(self.message, self.text,
                              self.column + column_offset, line)


class OrdinalSyntaxError(ParseError):
    pass


class ClubSyntaxError(ParseError):
    pass


class SpecFileError(ParseError):
    pass


class ClubError(HiwalksError, ValueError):
    pass


class TupleError(HiwalksError, ValueError):
    pass


class InvalidIndexError(HiwalksError, KeyError):
    """Raised when a tuple is not a valid index of a sequence."""

    def __init__(self, index, reason=""):
        self.index = tuple(index)
        self.reason = reason
        super(InvalidIndexError, self).__init__(str(self))

    def __str__(self):
        from .ordinal import format_tuple
        msg = "invalid index %s" % format_tuple(self.index)
        if self.reason:
            msg += ": " + self.reason
        return msg


class MissingClubError(InvalidIndexError):
    pass


class ResourceCapError(HiwalksError, RuntimeError):
    def __init__(self, cap, what="walk"):
        self.cap = cap
        super(ResourceCapError, self).__init__(
            "%s exceeded the cap of %i nodes" % (what, cap))


class MoveRejected(HiwalksError):
    """Raised by the game when Player I's move is not a valid extension.

    Attributes:
        diagnosis (List[str]): Human-readable reasons for the rejection.
    """

    def __init__(self, move, diagnosis):
        self.move = move
        self.diagnosis = list(diagnosis)
        super(MoveRejected, self).__init__(
            "rejected %r: %s" % (move, "; ".join(self.diagnosis)))


class IncoherentSequenceError(HiwalksError):
    def __init__(self, report):
        self.report = report
        super(IncoherentSequenceError, self).__init__(
            "sequence is not coherent below %s (%i violations)"
            % (report.window, len(report.violations)))


class BuilderError(HiwalksError, ValueError):
    """Raised for invalid parameters of a sequence builder."""
    pass
