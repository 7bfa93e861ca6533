import pytest

from flexbook.zlinalg import IntMatrix
from flexbook.abgroup import FgAbelianGroup, is_exact
from flexbook.chainkit import (ChainMap, SubcomplexPair, relative_homology, relative_induced_hom, connecting_hom,
                               long_exact_sequence, induced_hom)
from flexbook.errors import StructuralError, InputError
from flexbook import fixtures

class TestSubcomplexPair:

    def setup_method(self):
        self.disk = fixtures.disk_page(1)
        self.annulus = fixtures.annulus_page()

    def test_validation(self):
        C = self.disk.complex
        with pytest.raises(StructuralError):
            SubcomplexPair(self.annulus.complex, [[], [2], []])
        with pytest.raises(StructuralError):
            SubcomplexPair(C, [[0, 0]])
        with pytest.raises(StructuralError):
            SubcomplexPair(C, [[5]])
        with pytest.raises(InputError) as err:
            SubcomplexPair.from_json(C, {'sub_indices': [[0], ['a']]})
        assert err.value.location == 'sub_indices'

    def test_relative_homology(self):
        pair = self.disk.boundary
        assert [relative_homology(pair, i) for i in range(3)] == [FgAbelianGroup(), FgAbelianGroup(), FgAbelianGroup(1)]
        pair = self.annulus.boundary
        assert [relative_homology(pair, i) for i in range(3)] == [FgAbelianGroup(), FgAbelianGroup(1), FgAbelianGroup(1)]

    def test_connecting(self):
        # H_2(D, S^1) -> H_1(S^1) is an isomorphism
        delta = connecting_hom(self.disk.boundary, 2)
        assert delta.domain == FgAbelianGroup(1) and delta.codomain == FgAbelianGroup(1)
        assert abs(delta.matrix.entry(0, 0)) == 1
        assert connecting_hom(self.disk.boundary, 0).codomain.is_trivial()

    def test_long_exact_sequence(self):
        pages = fixtures.page_families(max_cells = 10, max_q = 2) + [fixtures.interval_page()]
        for page in pages:
            P = page.boundary
            top = P.ambient.top_degree
            for i in range(top + 1):
                inc, proj, delta = long_exact_sequence(P, i)
                assert is_exact(inc, proj)
                assert is_exact(proj, delta)
                if i >= 1:
                    assert is_exact(delta, induced_hom(P.inclusion, i - 1))

    def test_relative_induced(self):
        page, f = fixtures.annulus_twist(3)
        h = relative_induced_hom(f.map, page.boundary, page.boundary, 1)
        assert h.domain == FgAbelianGroup(1)
        assert abs(h.matrix.entry(0, 0)) == 1
        swap = ChainMap(page.complex, page.complex,
                        [IntMatrix([[0, 1], [1, 0]]), IntMatrix([[0, 1, 0], [1, 0, 0], [0, 0, -1]]), IntMatrix([[-1]])])
        with pytest.raises(StructuralError):
            relative_induced_hom(swap, page.boundary, SubcomplexPair(page.complex, [[0, 1], [], []]), 1)
