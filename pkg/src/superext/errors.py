"""Exception types shared across the package.

Every domain error derives from SuperextError so the CLI and the service can
map failures to a single exit code / HTTP status without enumerating them.
"""


class SuperextError(Exception):
    """Base class for all domain errors."""


class NotInBlock(SuperextError):
    """Coordinates violate the ordering/integrality rules of the block."""


class SignIllegal(SuperextError):
    """A sign was supplied for a weight whose diagram is unsigned."""


class SignRequired(SuperextError):
    """The diagram is signed but no sign was supplied."""


class ContextMismatch(SuperextError):
    """The two weights do not live in one algebra/block."""


class WindowTooLarge(SuperextError):
    """An enumeration request exceeds the configured cap."""


class MalformedDiagram(SuperextError):
    """A diagram does not encode any block weight."""


class MoveUndefined(SuperextError):
    """The requested symbol move is not defined on this diagram."""


class NoSymbol(SuperextError):
    """The queried position carries no arch-supporting symbol."""


class ParseError(SuperextError):
    """Bad ASCII diagram or weight/algebra spec."""


class Typical(SuperextError):
    """Reduction is undefined for weights of atypicality zero."""


class EqualWeights(SuperextError):
    """The operation needs two distinct weights."""


class OspLambdaZero(SuperextError):
    """The full K-polynomial with an osp top weight 0 is not determined."""


class SizeMismatch(SuperextError):
    """General q-weights of different sizes cannot be compared."""


class MixedCharacters(SuperextError):
    """The vertex set mixes central characters."""


class VerificationFailed(SuperextError):
    """At least one verification property failed."""
