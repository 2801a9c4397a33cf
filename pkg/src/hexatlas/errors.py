"""Exception hierarchy shared by all hexatlas modules."""


class HexatlasError(Exception):
    """Base class for every error raised by this package."""

    reason = "error"


class NotAdmissible(HexatlasError, ValueError):
    """Three arc classes that do not form one of the 14 arc triples."""

    reason = "not_admissible"


class NotInGoodPosition(HexatlasError, ValueError):
    reason = "not_in_good_position"


class ZeroCoords(HexatlasError, ValueError):
    reason = "zero_coords"


class ZeroFoliation(HexatlasError, ValueError):
    reason = "zero_foliation"


class Infeasible(HexatlasError, ArithmeticError):
    """A trigonometric relation has no solution for the given input."""

    reason = "infeasible"


class NonPositiveLength(HexatlasError, ValueError):
    reason = "non_positive_length"


class NotInChart(HexatlasError, ValueError):
    reason = "not_in_chart"


class NotConverged(HexatlasError, ArithmeticError):
    reason = "not_converged"


class UnsupportedSpec(HexatlasError, ValueError):
    reason = "unsupported_spec"


class SequenceSyntaxError(HexatlasError, ValueError):
    """Malformed sequence text."""

    reason = "sequence_syntax"
