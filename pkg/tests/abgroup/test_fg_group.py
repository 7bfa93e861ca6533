import pytest
import math
import random

from flexbook.zlinalg import IntMatrix
from flexbook.abgroup import FgAbelianGroup, from_presentation, is_torsion_free, groups_isomorphic, LatticeQuotient
from flexbook.errors import StructuralError, InputError
from flexbook.fixtures import random_matrix, random_unimodular

class TestFgAbelianGroup:

    def setup_method(self):
        self.Z = FgAbelianGroup(1)
        self.Z2 = FgAbelianGroup(0, (2,))
        self.trivial = FgAbelianGroup()
        self.rng = random.Random(11)

    def test_normalization(self):
        assert FgAbelianGroup(0, (2, 3)) == FgAbelianGroup(0, (6,))
        assert FgAbelianGroup(1, (4, 2)).torsion == (2, 4)
        assert FgAbelianGroup(0, (1, 1)).is_trivial()
        assert FgAbelianGroup(0, (6, 4)).torsion == (2, 12)
        with pytest.raises(StructuralError):
            FgAbelianGroup(0, (0,))
        with pytest.raises(StructuralError):
            FgAbelianGroup(-1)

    def test_strings(self):
        assert str(self.trivial) == '0'
        assert str(self.Z) == 'Z'
        assert str(FgAbelianGroup(2, (2,))) == 'Z^2 + Z/2'

    def test_order_and_sum(self):
        assert self.Z.order() == math.inf
        assert FgAbelianGroup(0, (2, 4)).order() == 8
        assert self.trivial.order() == 1
        assert self.Z + self.Z2 == FgAbelianGroup(1, (2,))
        assert self.Z2.direct_sum(FgAbelianGroup(0, (3,))) == FgAbelianGroup(0, (6,))

    def test_reduce(self):
        G = FgAbelianGroup(1, (3,))
        assert G.reduce(IntMatrix([[5], [7]])) == IntMatrix([[5], [1]])
        assert G.contains_zero(IntMatrix([[0], [-3]]))
        assert not G.contains_zero(IntMatrix([[1], [0]]))

    def test_presentation(self):
        assert from_presentation(2, IntMatrix([[2], [0]])) == FgAbelianGroup(1, (2,))
        assert from_presentation(3, IntMatrix([[2, 0], [0, 4], [0, 0]])) == FgAbelianGroup(1, (2, 4))
        assert from_presentation(0, IntMatrix.zeros(0, 0)).is_trivial()
        with pytest.raises(StructuralError):
            from_presentation(2, IntMatrix([[1]]))

    def test_predicates(self):
        assert is_torsion_free(FgAbelianGroup(3))
        assert not is_torsion_free(self.Z2)
        assert groups_isomorphic(FgAbelianGroup(0, (2, 3)), FgAbelianGroup(0, (6,)))
        assert not groups_isomorphic(FgAbelianGroup(0, (2, 2)), FgAbelianGroup(0, (4,)))

    def test_json(self):
        G = FgAbelianGroup(2, (2, 10 ** 20))
        encoded = G.to_json()
        assert encoded == {'free_rank': 2, 'torsion': ['2', str(10 ** 20)]}
        assert FgAbelianGroup.from_json(encoded) == G
        assert FgAbelianGroup.from_json({'torsion': [4]}) == FgAbelianGroup(0, (4,))
        with pytest.raises(InputError):
            FgAbelianGroup.from_json({'free_rank': -1})
        with pytest.raises(InputError):
            FgAbelianGroup.from_json({'torsion': ['0']})
        with pytest.raises(InputError):
            FgAbelianGroup.from_json('Z')

class TestLatticeQuotient:

    def setup_method(self):
        self.rng = random.Random(11)

    def test_projection_and_section(self):
        relations = IntMatrix([[2, 0], [0, 3], [0, 0]])
        Q = LatticeQuotient(relations)
        assert Q.group == FgAbelianGroup(1, (6,))
        assert Q.projection @ Q.section == IntMatrix.identity(Q.group.ngens)
        # section o projection is the identity modulo the relations
        for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [5, -4, 7]):
            vector = IntMatrix.column_vector(v)
            back = Q.representative(Q.classify(vector))
            assert Q.classify(back - vector).is_zero()

    def test_classify_relations(self):
        relations = IntMatrix([[4, 6], [6, 9]])
        Q = LatticeQuotient(relations)
        assert Q.classify(relations).is_zero()

    def test_presentation_under_unimodular_change(self):
        for _ in range(50):
            n, m = self.rng.randint(1, 5), self.rng.randint(0, 6)
            R = random_matrix(self.rng, n, m, bound = 6)
            P, _ = random_unimodular(self.rng, n)
            Q, _ = random_unimodular(self.rng, m)
            assert from_presentation(n, P @ R @ Q) == from_presentation(n, R)

    def test_normalization_is_idempotent(self):
        for _ in range(50):
            orders = [self.rng.randint(1, 30) for _ in range(self.rng.randint(0, 5))]
            G = FgAbelianGroup(self.rng.randint(0, 3), tuple(orders))
            assert FgAbelianGroup(G.free_rank, G.torsion) == G
            assert from_presentation(G.ngens, G.relation_matrix) == G
            assert all(b % a == 0 for a, b in zip(G.torsion, G.torsion[1:]))
