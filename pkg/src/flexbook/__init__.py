from .zlinalg import IntMatrix
from .abgroup import FgAbelianGroup, GroupHom
from .chainkit import ChainComplex, ChainMap, SubcomplexPair
from .openbook import PageData, Monodromy, open_book_homology
from .config import Options
