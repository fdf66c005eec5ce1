from typing import Iterable, Optional, Sequence


class WaveNumberError(Exception):
    """Base class for every domain error raised by the waves library"""

    kind = 'wave-number-error'

    def as_dict(self):
        return {'error': self.kind, 'message': str(self)}


class InvalidRationalError(WaveNumberError):
    kind = 'invalid-rational'


class ArgumentError(WaveNumberError, ValueError):
    kind = 'argument-error'


class DivisionByZeroElementError(WaveNumberError, ZeroDivisionError):
    """Element-wise division hit a zero element at phase index xi"""

    kind = 'division-by-zero-element'

    def __init__(self, xi: int, message: Optional[str] = None):
        self.xi = xi
        super().__init__(message or f'division by a zero element at phase xi={xi}')


class DegenerateSubsetError(WaveNumberError):
    """A leave-one-out partial amplitude vanished inside the subset recursion"""

    kind = 'degenerate-subset'

    def __init__(self, subset: Sequence[int], xi: Optional[int] = None):
        self.subset = tuple(subset)
        self.xi = xi
        where = f' at phase xi={xi}' if xi is not None else ''
        super().__init__(f'partial amplitude of subset {list(self.subset)} vanishes{where}')


class DegenerateProductError(WaveNumberError):
    kind = 'degenerate-product'


class ConsistencyError(WaveNumberError):
    kind = 'consistency-error'


class SieveInvariantError(WaveNumberError):
    kind = 'sieve-invariant-violation'


class PhaseRangeError(WaveNumberError):
    kind = 'range-error'


class ExpressionSyntaxError(WaveNumberError):
    """Parse failure; offset is the 1-based character position of the offending input"""

    kind = 'syntax-error'

    def __init__(self, offset: int, expected: Iterable[str], found: str = ''):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        shown = repr(found) if found else 'end of input'
        super().__init__(
            f'syntax error at offset {offset}: expected one of {", ".join(self.expected)}, found {shown}'
        )


class EvaluationError(WaveNumberError):
    """A module error raised while evaluating a sub-expression"""

    kind = 'evaluation-error'

    def __init__(self, path: str, cause: Exception):
        self.path = path
        self.cause = cause
        if isinstance(cause, WaveNumberError):
            self.kind = cause.kind
        super().__init__(f'{cause} (in "{path}")')
