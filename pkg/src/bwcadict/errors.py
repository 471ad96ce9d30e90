"""Exception hierarchy shared by every stage of the toolkit."""


class CompressionError(Exception):
    """Base class for all errors raised by bwcadict."""


class InvalidInputError(CompressionError, ValueError):
    """An argument violates an operation's precondition."""


class CorruptStreamError(CompressionError):
    """A stage's encoded input cannot be decoded."""


class FormatError(CompressionError):
    """A serialized container or dictionary file is malformed."""


class WrongDictionaryError(CompressionError):
    """The supplied dictionary does not match the one used to compress."""


class ConfigurationError(CompressionError):
    """The pipeline and the supplied dictionary do not fit together."""


class VerificationError(CompressionError):
    """A compressed result failed to roundtrip to its source."""
