"""Exception hierarchy shared by every module of the package."""


class MoufangError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MoufangError):
    """Malformed input: bad tables, bad parameters, bad files."""


class SizeMismatch(InputError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} table entries, got {got}")
        self.expected = expected
        self.got = got


class EntryOutOfRange(InputError):
    def __init__(self, i: int, j: int, value: int, order: int):
        super().__init__(f"entry ({i},{j}) = {value} is outside [0, {order})")
        self.i, self.j, self.value = i, j, value


class InvalidCharacteristic(InputError):
    def __init__(self, p: int):
        super().__init__(f"characteristic must be an odd prime, got {p}")
        self.p = p


class ZeroWeight(InputError):
    def __init__(self, x: int):
        super().__init__(f"element {x} has weight 0")
        self.x = x


class NotClosed(MoufangError):
    def __init__(self, a: int, b: int, product: int):
        super().__init__(f"{a}*{b} = {product} escapes the subset")
        self.a, self.b, self.product = a, b, product


class CapExceeded(MoufangError):
    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} {value} exceeds cap {cap}")
        self.what, self.value, self.cap = what, value, cap


class NotAnEquivalence(MoufangError):
    """sigma failed transitivity: a~b, b~c but not a~c."""

    def __init__(self, witness: tuple[int, int, int]):
        a, b, c = witness
        super().__init__(f"sigma is not transitive: {a}~{b}, {b}~{c}, but not {a}~{c}")
        self.witness = witness


class NotACongruence(MoufangError):
    def __init__(self, violation):
        super().__init__(f"partition is not a congruence: {violation}")
        self.violation = violation


class NotIdempotent(MoufangError):
    def __init__(self, a: int):
        super().__init__(f"element {a} is not idempotent")
        self.a = a


class NotCommutative(MoufangError):
    def __init__(self, a: int, b: int):
        super().__init__(f"{a}*{b} != {b}*{a}")
        self.a, self.b = a, b


class OrderAxiomFailure(MoufangError):
    def __init__(self, axiom: str, witness: tuple[int, ...]):
        super().__init__(f"natural order fails {axiom} at {witness}")
        self.axiom = axiom
        self.witness = witness


class HypothesisViolation(MoufangError):
    """Input is not a commutative central-Moufang groupoid."""

    def __init__(self, report):
        super().__init__(
            f"{report.kind.value} fails at {report.counterexample}"
        )
        self.report = report
