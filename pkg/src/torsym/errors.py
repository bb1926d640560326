"""Exception types shared across the package."""


class TorsymError(Exception):
    """Base class for all errors raised by torsym."""


class NotASublattice(TorsymError):
    pass


class NotNormal(TorsymError):
    pass


class ClosureCapExceeded(TorsymError):
    pass


class BasisNotPreserved(TorsymError):
    pass


class MixedBases(TorsymError):
    pass


class NotConnected(TorsymError):
    pass


class NotPreserved(TorsymError):
    """An isometry does not carry one quotient graph onto the other."""


class ConstraintViolated(TorsymError):
    pass


class SupergroupNotFound(TorsymError):
    pass


class GenusOutOfRange(TorsymError):
    pass
