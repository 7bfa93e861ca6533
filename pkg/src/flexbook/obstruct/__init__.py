from .verdicts import Hypotheses, ObstructionStatus, ObstructionVerdict, FilterResult, flexible_obstruction, flexible_monodromy_filter, MIN_DIMENSION
from .forms import BilinearForm, hyperbolic_form, preserves_form
from .automorphism import automorphism_order, INFINITE_ORDER
from .loops import LoopStatus, LoopVerdict, loop_verdict
from .models import lens_space_homology, connected_sum_homology
from .pipeline import PipelineReport, flexible_page_pipeline
