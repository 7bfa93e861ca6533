import logging

from ..zlinalg import IntMatrix, kernel_basis, lattice_contains
from ..errors import StructuralError, InputError
from .fg_group import FgAbelianGroup, from_presentation

logger = logging.getLogger(__name__)

class GroupHom:
    """
    Homomorphism between normalized groups, as a matrix on their generators.
    Column j is the image of the j-th domain generator, in reduced codomain coordinates.
    Well-definedness (relations go to zero) is checked at construction.
    """

    def __init__(self, domain: FgAbelianGroup, codomain: FgAbelianGroup, matrix: IntMatrix):
        if matrix.shape != (codomain.ngens, domain.ngens):
            raise StructuralError(f'a hom {domain} -> {codomain} needs a {codomain.ngens}x{domain.ngens} matrix, got {matrix.rows}x{matrix.cols}')
        if not codomain.contains_zero(matrix @ domain.relation_matrix):
            raise StructuralError(f'matrix does not define a homomorphism {domain} -> {codomain}: some relation is not sent to zero')

        self.domain = domain
        self.codomain = codomain
        self.matrix = codomain.reduce(matrix)

    ## CONSTRUCTORS
    @classmethod
    def identity(cls, G: FgAbelianGroup) -> 'GroupHom':
        return cls(G, G, IntMatrix.identity(G.ngens))

    @classmethod
    def zero(cls, domain: FgAbelianGroup, codomain: FgAbelianGroup) -> 'GroupHom':
        return cls(domain, codomain, IntMatrix.zeros(codomain.ngens, domain.ngens))

    ## ARITHMETIC
    def compose(self, other: 'GroupHom') -> 'GroupHom':
        """self after other."""
        if other.codomain != self.domain:
            raise StructuralError(f'cannot compose {other.domain} -> {other.codomain} with {self.domain} -> {self.codomain}')
        return GroupHom(other.domain, self.codomain, self.matrix @ other.matrix)

    def __matmul__(self, other: 'GroupHom') -> 'GroupHom':
        return self.compose(other)

    def _check_parallel(self, other: 'GroupHom'):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise StructuralError(f'homs {self.domain} -> {self.codomain} and {other.domain} -> {other.codomain} are not parallel')

    def __add__(self, other: 'GroupHom') -> 'GroupHom':
        self._check_parallel(other)
        return GroupHom(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other: 'GroupHom') -> 'GroupHom':
        self._check_parallel(other)
        return GroupHom(self.domain, self.codomain, self.matrix - other.matrix)

    def __neg__(self) -> 'GroupHom':
        return GroupHom(self.domain, self.codomain, -self.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.domain, self.codomain, self.matrix))

    def __repr__(self):
        return f'GroupHom({self.domain} -> {self.codomain}, {self.matrix.tolist()})'

    ## JSON CODEC
    def to_json(self) -> dict:
        return {'domain': self.domain.to_json(), 'codomain': self.codomain.to_json(), 'matrix': self.matrix.to_json()}

    @classmethod
    def from_json(cls, obj) -> 'GroupHom':
        if not isinstance(obj, dict):
            raise InputError(detail = 'a homomorphism must be an object with domain, codomain and matrix')
        for key in ('domain', 'codomain', 'matrix'):
            if key not in obj:
                raise InputError(key, 'missing')
        try:
            domain = FgAbelianGroup.from_json(obj['domain'])
        except InputError as err:
            raise err.at('domain')
        try:
            codomain = FgAbelianGroup.from_json(obj['codomain'])
        except InputError as err:
            raise err.at('codomain')
        try:
            matrix = IntMatrix.from_json(obj['matrix'])
        except InputError as err:
            raise err.at('matrix')
        return cls(domain, codomain, matrix)

def hom_cokernel(h: GroupHom) -> FgAbelianGroup:
    """
    Codomain modulo the image of h: codomain relations stacked with the columns of h.
    """
    presentation = IntMatrix.hstack([h.codomain.relation_matrix, h.matrix], rows = h.codomain.ngens)
    return from_presentation(h.codomain.ngens, presentation)

def hom_is_identity(h: GroupHom) -> bool:
    if h.domain != h.codomain:
        raise StructuralError(f'identity check needs an endomorphism, got {h.domain} -> {h.codomain}')
    return h.codomain.contains_zero(h.matrix - IntMatrix.identity(h.domain.ngens))

def kernel_lattice(h: GroupHom) -> IntMatrix:
    """
    Generators (columns) of the preimage of zero in Z^{domain.ngens}. Contains the domain relations.
    """
    n = h.domain.ngens
    joint = IntMatrix.hstack([h.matrix, h.codomain.relation_matrix], rows = h.codomain.ngens)
    K = kernel_basis(joint)
    return K.rows_at(range(n))

def image_lattice(h: GroupHom) -> IntMatrix:
    """
    Generators of the image of h plus the codomain relations, as a lattice in Z^{codomain.ngens}.
    """
    return IntMatrix.hstack([h.matrix, h.codomain.relation_matrix], rows = h.codomain.ngens)

def hom_image(h: GroupHom) -> FgAbelianGroup:
    """
    The image of h as an abstract group: domain modulo the kernel.
    """
    return from_presentation(h.domain.ngens, kernel_lattice(h))

def hom_kernel_is_trivial(h: GroupHom) -> bool:
    return lattice_contains(h.domain.relation_matrix, kernel_lattice(h))

def hom_is_isomorphism(h: GroupHom) -> bool:
    return hom_kernel_is_trivial(h) and hom_cokernel(h).is_trivial()

def is_exact(g: GroupHom, h: GroupHom) -> bool:
    """
    True if image(g) = kernel(h) inside the middle group.
    """
    if g.codomain != h.domain:
        raise StructuralError(f'cannot chain {g.domain} -> {g.codomain} with {h.domain} -> {h.codomain}')
    image = image_lattice(g)
    kernel = kernel_lattice(h)
    exact = lattice_contains(kernel, image) and lattice_contains(image, kernel)
    logger.debug(f'exactness at {g.codomain}: {exact}')
    return exact
