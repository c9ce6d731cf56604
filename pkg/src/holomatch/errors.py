"""Exception types shared across the package."""


class HolomatchError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HolomatchError, ValueError):
    pass


class SingularMatrix(HolomatchError):
    pass


class NotSkewSymmetric(HolomatchError):
    pass


class ShapeMismatch(HolomatchError, ValueError):
    pass


class IndexOutOfRange(HolomatchError, IndexError):
    pass


class LengthMismatch(HolomatchError, ValueError):
    pass


class ArityBoundExceeded(HolomatchError):
    pass


class WrongArity(HolomatchError, ValueError):
    pass


class BoundExceeded(HolomatchError):
    pass


class NotPlanarEmbedding(HolomatchError):
    pass


class NotExternal(HolomatchError, ValueError):
    pass


class OrderViolation(HolomatchError):
    pass


class PlanarityViolation(HolomatchError):
    pass


class PairingMismatch(HolomatchError, ValueError):
    pass


class WiringMismatch(HolomatchError, ValueError):
    pass


class DegenerateBasis(HolomatchError):
    """A transform that needs a full-rank basis was handed a rank-deficient one."""


class NotCubic(HolomatchError, ValueError):
    pass


class RealizabilityFailed(HolomatchError):
    """A transformed tensor is not the standard signature of any matchgate."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidInstance(HolomatchError):
    """The input to a collapse pipeline is not a genuine basis realization."""


class RankTooLow(InvalidInstance):
    pass


class DistanceLemmaViolated(InvalidInstance):
    pass


class SingularSubbasis(InvalidInstance):
    pass


class RankDeficient(InvalidInstance):
    pass


class RankMismatch(InvalidInstance):
    pass


class TransducerNotStandard(InvalidInstance):
    pass


class FormViolation(InvalidInstance):
    pass


class SignRelationViolation(InvalidInstance):
    pass


class NotRealized(InvalidInstance):
    """A declared (tensor, standard signature) pair does not match the basis."""


class CollapseCheckFailed(InvalidInstance):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NoFullRankGenerator(HolomatchError):
    pass
