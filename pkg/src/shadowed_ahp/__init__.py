"""Shadowed AHP: multi-criteria AHP over heterogeneous uncertain comparisons."""

from .ahp import (ComparisonMatrix, DecisionProblem, DecisionResult, consistency_ratio,
                  convert_matrix, geometric_mean_rows, normalize, rank_alternatives,
                  solve, synthesize, validate_reciprocal)
from .errors import (ConsistencyError, ConversionError, DomainError, NumericalError,
                     ParseError, ShadowedAHPError, ValidationError)
from .granular import (DEFAULT_SCALE, GFN, IFN, TFN, Crisp, Family, Interval, ScaleTable,
                       alpha_cut, crisp_projection, membership, reciprocal, scale_lookup)
from .problem import format_problem, parse_entry, parse_problem_file, parse_scale_file
from .sfn import SFN, RankBreakdown, add, div, mul, nth_root, rank_index, sub
from .shadow import (UncertaintyProfile, avg_nonspecificity_ifn, core_interval_ifn,
                     core_interval_t1, entropy_widths_ifn, fuzziness_widths, hartley,
                     pedrycz_optimal_alpha, to_sfn, to_sfn_with_profile)

__version__ = "0.1.0"
