"""Exception hierarchy shared by all modules."""


class GpknitError(Exception):
    pass


class PresentationError(GpknitError, ValueError):
    pass


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownVertex(PresentationError):
    pass


class UnknownArrow(PresentationError):
    pass


class NonComposableRelation(PresentationError):
    pass


class RelationLengthError(PresentationError):
    pass


class InfiniteDimensional(PresentationError):
    pass


class ZeroPath(GpknitError, ValueError):
    pass


class ZeroModule(GpknitError, ValueError):
    pass


class PresentationMismatch(GpknitError, ValueError):
    pass


class BoundExceeded(GpknitError):
    """No periodicity found within the bound.  Not a disproof."""


class NonPeriodic(GpknitError):
    """Some syzygy became projective, so the module has finite projective dimension."""


class ExtNonVanishing(GpknitError):
    """A syzygy has nonzero Ext^1 against a projective."""


class OracleDisagreement(GpknitError):
    pass


class TemplatePreconditionFailed(GpknitError):
    pass


class NotSelfInjective(GpknitError):
    pass


class SinkUnsupported(GpknitError):
    pass
