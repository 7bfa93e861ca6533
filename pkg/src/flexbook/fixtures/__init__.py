from .spaces import (circle, sphere, real_projective_space, lens_space_complex, torus, klein_bottle,
                     interval_page, disk_page, cylinder_page, annulus_page, surface_page, sphere_product_page,
                     twist_monodromy, annulus_twist)
from .simplicial import (ordered_chain_complex, simplicial_complex, simplex_boundary, rp2_six_vertex, torus_seven_vertex,
                         klein_bottle_grid, projective_space_delta)
from .random_pages import (MAX_PAGE_CELLS, random_matrix, random_unimodular, change_basis, random_complex, random_chain_homotopy,
                           page_families, change_page_basis, transport_monodromy, random_page, random_monodromy, homotopic_monodromy)
from .problems import DATA_DIR, bundled_problem_paths, bundled_problem_names, bundled_problem_path, load_bundled
