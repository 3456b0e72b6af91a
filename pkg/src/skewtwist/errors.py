"""Exception types shared across the package.

Validation failures carry the name of the violated axiom and the smallest
witness input, so callers (and the CLI) can report exactly where a table
went wrong.
"""


class SkewtwistError(Exception):
    pass


class SizeMismatch(SkewtwistError):
    pass


class NotBijective(SkewtwistError):
    pass


class BraidFails(SkewtwistError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"braid equation fails at {witness}")


class AxiomFails(SkewtwistError):
    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom} fails at {witness}")


class InvalidTwist(SkewtwistError):
    pass


class Degenerate(SkewtwistError):
    pass


class ShapeMismatch(SkewtwistError):
    pass


class NonCommuting(SkewtwistError):
    pass


class TooLarge(SkewtwistError):
    pass


class NotABrace(SkewtwistError):
    pass


class InvalidFamily(SkewtwistError):
    pass


class NotClassifiable(SkewtwistError):
    pass


class InvalidTheta(SkewtwistError):
    pass


class UnknownGenerator(SkewtwistError):
    pass


class BadParams(SkewtwistError):
    pass


class DocumentError(SkewtwistError):
    """Malformed document: bad JSON shape, missing keys, out-of-range entries."""
