from functools import cached_property

from ..zlinalg import IntMatrix, smith_normal_form
from .fg_group import FgAbelianGroup

class LatticeQuotient:
    """
    The group Z^n / (column span of relations), with explicit maps to and from its normalized form.

    projection: Z^n -> Z^ngens sends a vector to its coordinates on the normalized generators.
    section:    Z^ngens -> Z^n sends normalized coordinates to representative vectors.
    projection @ section is the identity on coordinates; section @ projection is the identity modulo the relations.
    """

    def __init__(self, relations: IntMatrix):
        self.relations = relations
        self.ambient_rank = relations.rows
        self.smith = smith_normal_form(relations)

        rank = self.smith.rank
        factors = self.smith.invariant_factors
        free = list(range(rank, self.ambient_rank))
        torsion = [i for i in range(rank) if factors[i] > 1]
        self._order = free + torsion

        self.group = FgAbelianGroup(len(free), tuple(factors[i] for i in torsion))

    @cached_property
    def projection(self) -> IntMatrix:
        return self.smith.U.rows_at(self._order)

    @cached_property
    def section(self) -> IntMatrix:
        return self.smith.U_inv.columns_at(self._order)

    def classify(self, vectors: IntMatrix) -> IntMatrix:
        """Normalized (reduced) coordinates of the classes of the columns of vectors."""
        return self.group.reduce(self.projection @ vectors)

    def representative(self, coords: IntMatrix) -> IntMatrix:
        return self.section @ coords
