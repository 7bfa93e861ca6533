from .page import PageData, Monodromy, handle_bound_holds, duality_check
from .double import DoubleData, build_double, extend_monodromy
from .variation import variation, relative_action, Splitting, splitting, DoubleActionBlocks, double_action_blocks, verify_block_lemma, MayerVietorisBlocks, mayer_vietoris_blocks
from .open_book import (twisted_double_complex, OpenBookHomology, open_book_homology, open_book_homology_from_variation,
                        SkeletonCriterion, evaluate_skeleton_criterion, skeleton_criterion,
                        page_cohomology_action, skeleton_cohomology_action)
