from .chain_complex import ChainComplex, SubquotientModel, homology, cohomology, all_homology, all_cohomology, euler_characteristic, direct_sum, skeleton
from .chain_map import ChainMap, induced_hom, induced_cohom, mapping_cone
from .pairs import SubcomplexPair, relative_homology, relative_induced_hom, connecting_hom, long_exact_sequence
