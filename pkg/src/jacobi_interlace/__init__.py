"""Zeros, mixed three-term recurrences and zero interlacing of Jacobi and
Gegenbauer (ultraspherical) polynomials."""
from .config import Settings, get_settings, load_config, set_settings, using
from .errors import (BracketFailure, DegenerateRecurrence, JacobiInterlaceError,
                     NoRootInBracket, RegimeError, TheoremViolation, WrongRegime)
from .identities import (IDENTITIES, IDENTITY_IDS, residual_sweep, verify_identity,
                         worst_residual)
from .interlace import (CriticalPointSet, InterlacingVerdict, Interval, QuadraticQ, Scenario,
                        check_corollary_2_1, check_remark_2_1, check_theorem_2_1,
                        check_theorem_2_2, check_theorem_3_1, check_theorem_4_1,
                        check_theorem_4_2, classify_pair, critical_k, critical_linear,
                        quadratic_q, quartic_h, run_scenario)
from .polyeval import (Family, JacobiParams, PolySpec, UltrasphericalParams, eval_jacobi,
                       eval_ultraspherical, evaluate, pochhammer)
from .tables import TABLES, TableId, run_all_tables, run_table
from .zerofinder import ZeroSet, compute_zeros, compute_zeros_quasi, refine_zero, zeros

__version__ = "0.1.0"
