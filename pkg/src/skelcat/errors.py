"""Exception types shared across the package.

Structural problems (bad ids, missing table entries, type mismatches in
composition chains) raise; semantic failures of coherence diagrams never
raise, they come back as failing report entries.
"""


class SkelcatError(Exception):
    pass


class MalformedTable(SkelcatError):
    """An id is out of range, a table entry is missing, or a diagram leg
    does not typecheck."""


class NotComposable(SkelcatError):
    """compose(g, f) with dst(f) != src(g)."""


class NotInvertible(SkelcatError):
    """No two-sided inverse exists in the relevant hom-set."""


class SourceTargetMismatch(SkelcatError):
    """Functors or morphisms do not line up for composition."""


class IndexOutOfRange(SkelcatError):
    """Component family lookup with an index outside the family's space."""


class NonUnitalInput(SkelcatError):
    """A unit-constraint check was requested on non-unital data."""


class SearchSpaceExceeded(SkelcatError):
    """Brute-force search would exceed the configured cap."""

    def __init__(self, size, cap):
        super().__init__(f"search space {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class InternalInconsistency(SkelcatError):
    """Validated input produced data that should be impossible."""


class NotFullyFaithful(SkelcatError):
    """A functor required to be bijective on hom-sets is not."""


class ZigZagViolation(SkelcatError):
    """Adjunction unit/counit fail a zig-zag identity."""


class NotACocycle(SkelcatError):
    """Pointed-category associator data fails the pentagon checker."""


class NotNormalized(SkelcatError):
    """Associator or braiding exponents do not vanish on unit slots."""


class NotAbelianCocycle(SkelcatError):
    """Pointed braiding data fails a hexagon checker, or the group is
    not abelian."""


class NoMutableComponent(SkelcatError):
    """The fuzzer found no component with an alternative in its hom-set."""


class ParseError(SkelcatError):
    """Bundle file does not parse."""


class DanglingReference(SkelcatError):
    """Bundle section references a name that is not defined."""


class VersionMismatch(SkelcatError):
    """Bundle file carries an unsupported format version."""
