import pytest
import random

from flexbook.abgroup import FgAbelianGroup, hom_is_identity
from flexbook.openbook import (Monodromy, variation, relative_action, splitting, double_action_blocks, verify_block_lemma,
                               mayer_vietoris_blocks)
from flexbook import fixtures

class TestVariation:

    def setup_method(self):
        self.rng = random.Random(2024)

    def test_annulus_twist(self):
        for n in range(-3, 6):
            page, f = fixtures.annulus_twist(n)
            var = variation(page, f)
            assert var.domain == FgAbelianGroup(1) and var.codomain == FgAbelianGroup(1)
            assert abs(var.matrix.entry(0, 0)) == abs(n)

    def test_identity_has_zero_variation(self):
        for page in fixtures.page_families(max_cells = 10):
            f = Monodromy.identity(page)
            for i in range(page.complex.top_degree + 1):
                assert variation(page, f, i).is_zero()
                assert hom_is_identity(relative_action(page, f, i))

    def test_block_lemma_on_random_pages(self):
        for _ in range(200):
            page = fixtures.random_page(self.rng)
            f = fixtures.random_monodromy(self.rng, page)
            for i in range(page.complex.top_degree + 1):
                blocks = verify_block_lemma(page, f, i)
                assert blocks.upper_right == variation(page, f, i)
                assert blocks.lower_left.is_zero()

    def test_block_lemma_in_a_changed_basis(self):
        for _ in range(30):
            page = fixtures.random_page(self.rng, max_q = 2)
            f = fixtures.random_monodromy(self.rng, page)
            moved, P, Pinv = fixtures.change_page_basis(self.rng, page)
            g = fixtures.transport_monodromy(f, moved, P, Pinv)
            q = page.q
            assert variation(page, f).domain == variation(moved, g).domain
            verify_block_lemma(moved, g, q)

    def test_homotopy_invariance(self):
        for _ in range(100):
            page = fixtures.random_page(self.rng, max_q = 2)
            f = fixtures.random_monodromy(self.rng, page)
            g = fixtures.homotopic_monodromy(self.rng, f)
            q = page.q
            assert variation(page, g) == variation(page, f)
            assert relative_action(page, g, q) == relative_action(page, f, q)
            assert double_action_blocks(page, g, q).upper_right == double_action_blocks(page, f, q).upper_right

    def test_splitting(self):
        page, f = fixtures.annulus_twist(2)
        split = splitting(page, 1)
        # H_1 of the torus splits as H_1(W) + H_1(W, dW)
        assert split.include.codomain == FgAbelianGroup(2)
        assert hom_is_identity(split.fold @ split.include)
        assert hom_is_identity(split.collapse @ split.section)

    def test_annulus_blocks(self):
        page, f = fixtures.annulus_twist(3)
        blocks = verify_block_lemma(page, f, 1)
        assert hom_is_identity(blocks.upper_left)
        assert hom_is_identity(blocks.lower_right)
        assert abs(blocks.upper_right.matrix.entry(0, 0)) == 3
        encoded = blocks.to_json()
        assert encoded['degree'] == 1
        assert set(encoded) == {'degree', 'upper_left', 'upper_right', 'lower_left', 'lower_right'}
        assert blocks.assembled().shape == (2, 2)

    def test_mayer_vietoris(self):
        for _ in range(30):
            page = fixtures.random_page(self.rng, max_q = 2)
            f = fixtures.random_monodromy(self.rng, page)
            blocks = mayer_vietoris_blocks(page, f, page.q)
            assert blocks.lower_right == variation(page, f)
