from dataclasses import dataclass
from typing import Optional
import logging

from ..zlinalg import IntMatrix
from ..abgroup import GroupHom, hom_is_identity
from ..chainkit import induced_hom, relative_induced_hom
from ..errors import InternalInvariantError
from .page import PageData, Monodromy
from .double import extend_monodromy

logger = logging.getLogger(__name__)

def _relative_cycle_lifts(page: PageData, i: int):
    # relative cycles representing the generators of H_i(W, dW), as chains of W supported off dW
    P = page.boundary
    model = P.quotient_complex.homology_model(i)
    return model, P.lift(i, model.representatives())

def variation(page: PageData, f: Monodromy, degree: Optional[int] = None) -> GroupHom:
    """
    var(f) : H_i(W, dW) -> H_i(W), [c] -> [f(c) - c] (default degree q).
    f(c) - c is a cycle of W on the nose because f fixes the chains of dW.
    """
    i = page.q if degree is None else degree
    page.complex.check_degree(i)
    C = page.complex
    model, lifts = _relative_cycle_lifts(page, i)
    diff = f.component(i) @ lifts - lifts

    boundary = C.boundary(i) @ diff
    if not boundary.is_zero():
        raise InternalInvariantError(f'f(c) - c is not an absolute cycle in degree {i}',
                                     witness = {'chains': diff.tolist(), 'boundary': boundary.tolist()})

    absolute = C.homology_model(i)
    var = GroupHom(model.group, absolute.group, absolute.classify(diff, check = False))
    logger.debug(f'variation in degree {i}: {model.group} -> {absolute.group}, matrix {var.matrix.tolist()}')
    return var

def relative_action(page: PageData, f: Monodromy, i: int) -> GroupHom:
    """f_* on H_i(W, dW)."""
    return relative_induced_hom(f.map, page.boundary, page.boundary, i)

@dataclass(frozen=True)
class Splitting:
    """
    H_i(DW) = H_i(W_1) + H_i(DW, W_1), with H_i(DW, W_1) identified with H_i(W, dW).

    include:   H_i(W) -> H_i(DW), through the second copy
    section:   H_i(W, dW) -> H_i(DW), [c] -> [c on W_0 minus c on W_1]
    fold:      H_i(DW) -> H_i(W), left inverse of include
    collapse:  H_i(DW) -> H_i(W, dW), left inverse of section
    """
    include: GroupHom
    section: GroupHom
    fold: GroupHom
    collapse: GroupHom

def splitting(page: PageData, i: int) -> Splitting:
    double = page.double
    DW = double.complex
    model, lifts = _relative_cycle_lifts(page, i)
    chains = double.embed0.component(i) @ lifts - double.embed1.component(i) @ lifts
    target = DW.homology_model(i)
    section = GroupHom(model.group, target.group, target.classify(chains))
    return Splitting(include = induced_hom(double.embed1, i), section = section,
                     fold = induced_hom(double.fold, i), collapse = induced_hom(double.collapse, i))

@dataclass(frozen=True)
class DoubleActionBlocks:
    """
    e(f)_* on H_i(DW) in the split basis:
        [[upper_left,  upper_right],     [[Id, var(f)],
         [lower_left,  lower_right]]  =   [0,  f_*   ]]
    """
    degree: int
    upper_left: GroupHom
    upper_right: GroupHom
    lower_left: GroupHom
    lower_right: GroupHom
    split: Splitting

    def assembled(self) -> IntMatrix:
        return IntMatrix.block([[self.upper_left.matrix, self.upper_right.matrix],
                                [self.lower_left.matrix, self.lower_right.matrix]])

    def to_json(self) -> dict:
        return {'degree': self.degree,
                'upper_left': self.upper_left.to_json(), 'upper_right': self.upper_right.to_json(),
                'lower_left': self.lower_left.to_json(), 'lower_right': self.lower_right.to_json()}

def double_action_blocks(page: PageData, f: Monodromy, i: int) -> DoubleActionBlocks:
    page.complex.check_degree(i)
    split = splitting(page, i)
    action = induced_hom(extend_monodromy(page, f), i)

    upper_left = split.fold @ action @ split.include
    upper_right = split.fold @ action @ split.section
    lower_left = split.collapse @ action @ split.include
    lower_right = split.collapse @ action @ split.section

    if not hom_is_identity(upper_left):
        raise InternalInvariantError(f'upper-left block of e(f)_* in degree {i} is not the identity', witness = upper_left.matrix.tolist())
    if not lower_left.is_zero():
        raise InternalInvariantError(f'lower-left block of e(f)_* in degree {i} is not zero', witness = lower_left.matrix.tolist())

    return DoubleActionBlocks(i, upper_left, upper_right, lower_left, lower_right, split)

def verify_block_lemma(page: PageData, f: Monodromy, i: int) -> DoubleActionBlocks:
    """
    Checks e(f)_* against the block assembly two ways and returns the blocks:
    the splitting maps are mutually inverse, e(f)_* o include = include and
    e(f)_* o section = include o var(f) + section o f_*.
    """
    blocks = double_action_blocks(page, f, i)
    s = blocks.split
    action = induced_hom(extend_monodromy(page, f), i)
    var = variation(page, f, i)
    rel = relative_action(page, f, i)

    checks = {
        'fold o include = Id': hom_is_identity(s.fold @ s.include),
        'collapse o section = Id': hom_is_identity(s.collapse @ s.section),
        'fold o section = 0': (s.fold @ s.section).is_zero(),
        'collapse o include = 0': (s.collapse @ s.include).is_zero(),
        'include o fold + section o collapse = Id': hom_is_identity(s.include @ s.fold + s.section @ s.collapse),
        'e(f) o include = include': action @ s.include == s.include,
        'e(f) o section = include o var + section o f': action @ s.section == s.include @ var + s.section @ rel,
        'upper-right block = var': blocks.upper_right == var,
        'lower-right block = f on relative homology': blocks.lower_right == rel,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInvariantError(f'block decomposition of e(f)_* fails in degree {i}',
                                     witness = {'failed': failed, 'blocks': blocks.assembled().tolist()})
    return blocks

@dataclass(frozen=True)
class MayerVietorisBlocks:
    """
    i_0* + i_1* : H_i(DW) -> H_i(W'_0) + H_i(W'_1) in the split basis, rows (identity-glued copy, e(f)-glued copy):
        [[Id, 0     ],
         [Id, var(f)]]
    """
    degree: int
    upper_left: GroupHom
    upper_right: GroupHom
    lower_left: GroupHom
    lower_right: GroupHom

    def assembled(self) -> IntMatrix:
        return IntMatrix.block([[self.upper_left.matrix, self.upper_right.matrix],
                                [self.lower_left.matrix, self.lower_right.matrix]])

def mayer_vietoris_blocks(page: PageData, f: Monodromy, i: int) -> MayerVietorisBlocks:
    page.complex.check_degree(i)
    split = splitting(page, i)
    double = page.double
    plain = induced_hom(double.fold, i)
    twisted = induced_hom(double.fold @ extend_monodromy(page, f), i)

    blocks = MayerVietorisBlocks(i, plain @ split.include, plain @ split.section,
                                 twisted @ split.include, twisted @ split.section)

    var = variation(page, f, i)
    if not (hom_is_identity(blocks.upper_left) and blocks.upper_right.is_zero()
            and hom_is_identity(blocks.lower_left) and blocks.lower_right == var):
        raise InternalInvariantError(f'Mayer-Vietoris map in degree {i} does not have the form [[Id, 0], [Id, var]]',
                                     witness = blocks.assembled().tolist())
    return blocks
