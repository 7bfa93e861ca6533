from .fg_group import FgAbelianGroup, from_presentation, is_torsion_free, groups_isomorphic
from .lattice_quotient import LatticeQuotient
from .homomorphism import GroupHom, hom_cokernel, hom_is_identity, hom_image, hom_kernel_is_trivial, hom_is_isomorphism, is_exact, kernel_lattice, image_lattice
