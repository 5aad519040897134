"""Exception hierarchy shared by every subpackage.

Input-validation failures derive from :class:`InputError`; the CLI maps them
to exit code 2.  Everything else derived from :class:`CoxrefError` is a
domain failure (caps exceeded, search failed) and maps to exit code 1.
"""


class CoxrefError(Exception):
    """Base class for all errors raised by coxref."""

    code = "error"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class InputError(CoxrefError, ValueError):
    code = "input_error"


# --- matrices and words ---------------------------------------------------

class MatrixError(InputError):
    code = "matrix_error"


class NotSymmetric(MatrixError):
    code = "not_symmetric"


class DiagonalNotOne(MatrixError):
    code = "diagonal_not_one"


class OffDiagonalTooSmall(MatrixError):
    code = "off_diagonal_too_small"


class BadEntry(MatrixError):
    code = "bad_entry"


class InvalidWord(InputError):
    code = "invalid_word"


class WordTooLong(CoxrefError):
    """Braid-move closure grew past its cap."""

    code = "word_too_long"


class BallTooLarge(CoxrefError):
    code = "ball_too_large"


class OrderExceedsCap(CoxrefError):
    """The group has more elements than the cap allows (possibly infinitely many)."""

    code = "exceeds_cap"


class NotClosed(CoxrefError):
    code = "not_closed"


class NotAReflection(InputError):
    code = "not_a_reflection"


# --- spaces ---------------------------------------------------------------

class UnknownReflection(InputError):
    code = "unknown_reflection"


class IterationCapExceeded(CoxrefError):
    code = "iteration_cap_exceeded"


class NotEnclosing(CoxrefError):
    code = "not_enclosing"


class WitnessNotFound(CoxrefError):
    code = "witness_not_found"


class PointParseError(InputError):
    code = "point_parse_error"


# --- recognizer -----------------------------------------------------------

class PermutationError(InputError):
    code = "permutation_error"


class NotInvolution(PermutationError):
    code = "not_involution"

    def __init__(self, index):
        super().__init__(f"generator {index} is not an involution")
        self.index = index


class IdentityGenerator(PermutationError):
    code = "identity_generator"

    def __init__(self, index):
        super().__init__(f"generator {index} is the identity")
        self.index = index


class DuplicateGenerator(PermutationError):
    code = "duplicate_generator"

    def __init__(self, index, other):
        super().__init__(f"generator {index} repeats generator {other}")
        self.index = index
        self.other = other


class CapExceeded(CoxrefError):
    code = "cap_exceeded"
