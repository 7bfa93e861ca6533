import pytest
import random

from flexbook.zlinalg import IntMatrix
from flexbook.abgroup import FgAbelianGroup
from flexbook.chainkit import (ChainComplex, homology, cohomology, all_homology, all_cohomology, euler_characteristic,
                               direct_sum, skeleton)
from flexbook.errors import StructuralError, InputError
from flexbook import fixtures

Z = FgAbelianGroup(1)
Z2 = FgAbelianGroup(0, (2,))
ZERO = FgAbelianGroup()

def sphere_homology(n):
    if n == 0:
        return [FgAbelianGroup(2)]
    return [Z] + [ZERO] * (n - 1) + [Z]

def projective_homology(n):
    groups = [Z]
    for i in range(1, n + 1):
        if i == n and n % 2 == 1:
            groups.append(Z)
        elif i % 2 == 1:
            groups.append(Z2)
        else:
            groups.append(ZERO)
    return groups

class TestChainComplex:

    def setup_method(self):
        self.rp2 = fixtures.real_projective_space(2)

    def test_rp2(self):
        assert all_homology(self.rp2) == [Z, Z2, ZERO]
        assert all_cohomology(self.rp2) == [Z, ZERO, Z2]
        assert euler_characteristic(self.rp2) == 1

    def test_empty_complex(self):
        C = ChainComplex([])
        assert C.ranks == (0,)
        assert all_homology(C) == [ZERO]
        C = ChainComplex([0, 0, 0], [IntMatrix.zeros(0, 0), IntMatrix.zeros(0, 0)])
        assert all(g.is_trivial() for g in all_homology(C))

    def test_validation(self):
        with pytest.raises(StructuralError):
            ChainComplex([1, 1, 1], [IntMatrix([[1]]), IntMatrix([[1]])])
        with pytest.raises(StructuralError):
            ChainComplex([1, 2], [IntMatrix([[1]])])
        with pytest.raises(StructuralError):
            ChainComplex([1, 1], [])
        with pytest.raises(StructuralError):
            self.rp2.check_degree(3)

    def test_leading_d0(self):
        C = ChainComplex([1, 1], [IntMatrix.zeros(0, 1), IntMatrix([[0]])])
        assert C == fixtures.circle()

    def test_outside_degrees(self):
        assert self.rp2.rank(5) == 0
        assert self.rp2.boundary(0).shape == (0, 1)
        assert self.rp2.boundary(3).shape == (1, 0)

    def test_spheres(self):
        for n in range(0, 6):
            cellular = fixtures.sphere(n)
            simplicial = fixtures.simplex_boundary(n)
            assert all_homology(cellular) == sphere_homology(n)
            assert all_homology(simplicial) == sphere_homology(n)
            assert euler_characteristic(cellular) == euler_characteristic(simplicial)

    def test_projective_spaces(self):
        for n in range(1, 5):
            cellular = fixtures.real_projective_space(n)
            delta = fixtures.projective_space_delta(n)
            assert all_homology(cellular) == projective_homology(n)
            assert all_homology(delta) == projective_homology(n)
            assert euler_characteristic(cellular) == euler_characteristic(delta)
        assert all_homology(fixtures.rp2_six_vertex()) == [Z, Z2, ZERO]

    def test_surfaces(self):
        assert all_homology(fixtures.torus()) == [Z, FgAbelianGroup(2), Z]
        assert all_homology(fixtures.torus_seven_vertex()) == [Z, FgAbelianGroup(2), Z]
        klein = [Z, FgAbelianGroup(1, (2,)), ZERO]
        assert all_homology(fixtures.klein_bottle()) == klein
        assert all_homology(fixtures.klein_bottle_grid()) == klein
        assert all_cohomology(fixtures.klein_bottle_grid()) == [Z, Z, Z2]

    def test_lens_spaces(self):
        for p in (2, 3, 5):
            groups = all_homology(fixtures.lens_space_complex(5, p))
            assert groups == [Z, FgAbelianGroup(0, (p,)), ZERO, FgAbelianGroup(0, (p,)), ZERO, Z]

    def test_direct_sum_and_skeleton(self):
        C = direct_sum(fixtures.torus(), self.rp2)
        assert all_homology(C) == [FgAbelianGroup(2), FgAbelianGroup(2, (2,)), Z]
        S = skeleton(self.rp2, 1)
        assert all_homology(S) == [Z, Z]
        with pytest.raises(StructuralError):
            skeleton(self.rp2, 3)

    def test_random_bases(self):
        rng = random.Random(11)
        for _ in range(20):
            C = fixtures.random_complex(rng)
            P, Pinv = zip(*[fixtures.random_unimodular(rng, r) for r in C.ranks])
            D = fixtures.change_basis(C, P, Pinv)
            assert all_homology(C) == all_homology(D)
            assert all_cohomology(C) == all_cohomology(D)

    def test_universal_coefficients(self):
        # free part of H^i is that of H_i, torsion of H^i is that of H_{i-1}
        rng = random.Random(5)
        for _ in range(20):
            C = fixtures.random_complex(rng)
            for i in range(C.top_degree + 1):
                h, c = homology(C, i), cohomology(C, i)
                assert c.free_rank == h.free_rank
                assert c.torsion == (homology(C, i - 1).torsion if i > 0 else ())

    def test_json(self):
        encoded = self.rp2.to_json()
        assert ChainComplex.from_json(encoded) == self.rp2
        with pytest.raises(InputError) as err:
            ChainComplex.from_json({'ranks': [1, 1], 'boundaries': [{'rows': 1, 'cols': 1, 'entries': [['x']]}]})
        assert err.value.location == 'boundaries[0].entries'
        with pytest.raises(InputError) as err:
            ChainComplex.from_json({'ranks': [1, 1, 1], 'boundaries': [[[1]], [[1]]]})
        assert err.value.location == 'boundaries'
        with pytest.raises(InputError):
            ChainComplex.from_json({'ranks': [-1]})

    def test_euler_characteristic(self):
        rng = random.Random(19)
        complexes = [fixtures.random_complex(rng) for _ in range(25)]
        complexes += [page.complex for page in fixtures.page_families(max_cells = 10, max_q = 2)]
        for C in complexes:
            betti = [g.free_rank for g in all_homology(C)]
            assert euler_characteristic(C) == sum((-1) ** i * b for i, b in enumerate(betti))
