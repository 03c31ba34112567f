"""Exception types shared across the workbench."""


class BilocaleLabError(Exception):
    """Base class for every validation or guard failure."""


class EmptyCarrier(BilocaleLabError):
    pass


class InvalidOrder(BilocaleLabError):
    """Input relation is not a partial order (cycle or duplicate element)."""


class NotALattice(BilocaleLabError):
    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind  # "glb" | "lub"
        super().__init__(f"pair {pair} has no {kind}")


class NotDistributive(BilocaleLabError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"distributivity fails at triple {witness}")


class SizeGuardExceeded(BilocaleLabError):
    def __init__(self, size, guard, what="subset enumeration"):
        self.size = size
        self.guard = guard
        super().__init__(f"{what} needs {size} elements, guard is {guard}")


class NotASubframe(BilocaleLabError):
    def __init__(self, side, reason):
        self.side = side
        self.reason = reason
        super().__init__(f"side {side}: {reason}")


class CoveringFails(BilocaleLabError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"covering condition fails at element {element}")


class NotInSide(BilocaleLabError):
    pass


class NotAFrameHom(BilocaleLabError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class SideViolation(BilocaleLabError):
    def __init__(self, side, element):
        self.side = side
        self.element = element
        super().__init__(f"image of side-{side} element {element} lands outside the target side")


class ImageNotSublocale(BilocaleLabError):
    pass


class NotComplemented(BilocaleLabError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no complement")


class NotATopology(BilocaleLabError):
    def __init__(self, side, witness):
        self.side = side
        self.witness = witness
        super().__init__(f"side {side} is not a topology: {witness}")
