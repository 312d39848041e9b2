class ContactLatticeError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(ContactLatticeError, ValueError):
    pass


class NotAnIdeal(ContactLatticeError):
    pass


class NotAbelian(ContactLatticeError):
    pass


class NotADerivation(ContactLatticeError):
    pass


class NotClosed(ContactLatticeError):
    """A 2-form used for a central extension has nonzero differential."""


class NotContact(ContactLatticeError):
    pass


class NotNilpotent(ContactLatticeError):
    pass


class DecompositionError(ContactLatticeError):
    """Supplied semisimple/nilpotent parts do not decompose the derivation."""


class UnknownEntry(ContactLatticeError, KeyError):
    pass


class InvalidParameter(ContactLatticeError, ValueError):
    pass


class ParseError(ContactLatticeError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = f"{path or '<text>'}:{line}: " if line is not None else ""
        super().__init__(where + message)


class ObstructionInapplicable(ContactLatticeError):
    pass


class CertificateError(ContactLatticeError):
    pass


class SpectralShapeError(CertificateError):
    pass
