import pytest
import random

from flexbook.zlinalg import IntMatrix
from flexbook.abgroup import FgAbelianGroup, GroupHom, is_torsion_free
from flexbook.chainkit import all_homology
from flexbook.openbook import (Monodromy, variation, open_book_homology, open_book_homology_from_variation, twisted_double_complex,
                               evaluate_skeleton_criterion, skeleton_criterion, page_cohomology_action, skeleton_cohomology_action)
from flexbook.errors import StructuralError
from flexbook import fixtures

Z = FgAbelianGroup(1)
ZERO = FgAbelianGroup()

def cyclic(n):
    return FgAbelianGroup(0, (n,))

class TestOpenBookHomology:

    def setup_method(self):
        self.rng = random.Random(7)

    def test_annulus_twists(self):
        for n in range(1, 11):
            page, f = fixtures.annulus_twist(n)
            result = open_book_homology(page, f)
            expected = [Z, cyclic(n) if n > 1 else ZERO, ZERO, Z]
            assert result.groups == expected
            assert result.middle == expected[1]
            assert result.method_tags == ['formula', 'formula', 'glued', 'glued']
            assert result.agreement == {0: True, 1: True}
            # the glued complex alone gives the same groups
            cone = twisted_double_complex(page, f)
            assert all_homology(cone)[:4] == expected

    def test_identity_monodromies(self):
        page = fixtures.annulus_page()
        assert open_book_homology(page, Monodromy.identity(page)).groups == [Z, Z, Z, Z]
        page = fixtures.disk_page(1)
        assert open_book_homology(page, Monodromy.identity(page)).groups == [Z, ZERO, ZERO, Z]
        page = fixtures.disk_page(2)
        assert open_book_homology(page, Monodromy.identity(page)).groups == [Z] + [ZERO] * 4 + [Z]
        page = fixtures.sphere_product_page(2, 2)
        result = open_book_homology(page, Monodromy.identity(page))
        assert result.middle == FgAbelianGroup(4)
        assert result.groups[3] == FgAbelianGroup(4)

    def test_formula_matches_glued_complex(self):
        for _ in range(60):
            page = fixtures.random_page(self.rng)
            f = fixtures.random_monodromy(self.rng, page)
            result = open_book_homology(page, f, oracle_check = True)
            assert len(result.groups) == page.manifold_dim + 1
            if page.weinstein_type:
                assert all(result.agreement.values())
            else:
                assert set(result.method_tags) == {'glued'}
                assert result.agreement is None

    def test_homotopy_invariance(self):
        for _ in range(30):
            page = fixtures.random_page(self.rng, max_q = 2)
            f = fixtures.random_monodromy(self.rng, page)
            g = fixtures.homotopic_monodromy(self.rng, f)
            assert open_book_homology(page, g).groups == open_book_homology(page, f).groups

    def test_json(self):
        page, f = fixtures.annulus_twist(4)
        encoded = open_book_homology(page, f).to_json()
        assert encoded['groups'][1] == {'free_rank': 0, 'torsion': ['4']}
        assert encoded['agreement'] == {'0': True, '1': True}
        assert 'agreement' not in open_book_homology(page, f, oracle_check = False).to_json()

    def test_rejects_bad_pages(self):
        page = fixtures.interval_page()
        with pytest.raises(StructuralError):
            open_book_homology(page, Monodromy.identity(page))

class TestFromVariation:

    def test_annulus(self):
        page = fixtures.annulus_page()
        for n in range(1, 8):
            result = open_book_homology_from_variation(page, IntMatrix([[n]]))
            assert result.groups == [Z, cyclic(n) if n > 1 else ZERO, ZERO, Z]
            assert result.method_tags == ['formula', 'formula', 'duality', 'duality']

    def test_matches_monodromy(self):
        rng = random.Random(19)
        for _ in range(30):
            page = fixtures.random_page(rng, max_q = 2)
            if not page.weinstein_type:
                continue
            f = fixtures.random_monodromy(rng, page)
            var = variation(page, f)
            assert open_book_homology_from_variation(page, var).groups == open_book_homology(page, f).groups

    def test_rejects(self):
        page = fixtures.annulus_page()
        with pytest.raises(StructuralError):
            open_book_homology_from_variation(page, GroupHom.zero(Z, FgAbelianGroup(2)))
        with pytest.raises(StructuralError):
            open_book_homology_from_variation(page, IntMatrix([[1, 0]]))
        with pytest.raises(StructuralError):
            open_book_homology_from_variation(fixtures.cylinder_page(2), IntMatrix([[0]]))

class TestSkeletonCriterion:

    def test_identity_and_twist(self):
        page = fixtures.annulus_page()
        criterion = evaluate_skeleton_criterion(page, Monodromy.identity(page))
        assert criterion.homology_identity and criterion.cohomology_identity
        assert criterion
        page, f = fixtures.annulus_twist(2)
        assert not skeleton_criterion(page, f)

    def test_homotopic_to_identity(self):
        rng = random.Random(31)
        for _ in range(40):
            page = fixtures.random_page(rng, max_q = 2)
            if not page.weinstein_type:
                continue
            f = fixtures.homotopic_monodromy(rng, Monodromy.identity(page), zero_degrees = [page.q])
            assert skeleton_criterion(page, f)
            assert variation(page, f).is_zero()
            middle = open_book_homology(page, f).middle
            assert middle == page.homology(page.q)
            assert is_torsion_free(middle)

    def test_criterion_forces_torsion_free_middle(self):
        rng = random.Random(37)
        for _ in range(60):
            page = fixtures.random_page(rng, max_q = 2)
            if not page.weinstein_type:
                continue
            f = fixtures.random_monodromy(rng, page, degrees = [d for d in range(page.complex.top_degree + 1) if d != page.q])
            if evaluate_skeleton_criterion(page, f).homology_identity:
                assert is_torsion_free(open_book_homology(page, f).middle)

    def test_cohomology_actions(self):
        page, f = fixtures.annulus_twist(3)
        actions = page_cohomology_action(page, f)
        assert len(actions) == 3
        skeleton = skeleton_cohomology_action(page, f)
        assert len(skeleton) == page.q + 1
        assert skeleton[1].domain == FgAbelianGroup(3)
