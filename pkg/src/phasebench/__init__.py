"""phasebench: exhaustive desk-scale verification of acceptance-fraction
phase transitions in paddable decision problems over even-sized alphabets."""

from .alphabet import (Alphabet, ParityCounts, Word, digits, enumerate_words,
                       is_symmetric, parity_counts, rank, unrank, weight,
                       word_from_digits, words_upto)
from .errors import (BudgetExceededError, ConfigError, ContractViolationError,
                     EmptySliceError, IsoInfeasibleError, PhasebenchError,
                     UndefinedParameterError)
from .exactnum import SQRT_HALF, Root2Num
from .isomorphism import (BijectionReport, PIso, SlotBudget, build_table_iso,
                          export_pairs, identity_iso, import_table_iso,
                          slot_budget, verify_bijection)
from .languages import (LanguageSpec, PaddabilityReport, check_paddability,
                        dec, decide, even_weight_language,
                        first_is_two_language, odd_weight_language, pad,
                        table_language)
from .parameter import Ball, ParamValue, Slice, ball, gamma, param_slice, slice_pair
from .roughp import (ClassCounts, Verdict, bottom_fraction, class_counts,
                     decide_rough, discriminate, psi, qprime, verify_errorless,
                     within_dnk_bound)
from .sharpening import (PULL_IN, ReassignmentTable, ZeroBalanceReport,
                         crossing_magnitude, generate_reassignment,
                         sharpen_parameter, verify_zero_balance)
from .transition import (AccBoundsReport, BalanceReport, BoundParams,
                         DensityReport, FStat, Req3Result, Req12Result,
                         ScanReport, SliceStats, ThresholdResult,
                         accepting_fraction, balance_check, bound_curve,
                         build_scan, compute_F, density_counts, f_from_counts,
                         fixed_width_count, geometric_series_range,
                         geometric_series_total, invert_scan,
                         requirement3_check, requirement12_check, threshold,
                         threshold_biconditional_holds, verify_acc_bounds)

__version__ = "0.1.0"
