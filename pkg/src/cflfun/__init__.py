"""Nondeterministic pushdown transducers computing multi-valued partial functions."""

from .algebra import (
    FunctionHandle,
    advice_membership,
    char_fn,
    complement,
    compose,
    domain,
    from_machine,
    intersect,
    nivat_check,
    quasi_char_fn,
    range_,
    refinement_check,
    set_difference,
    union,
)
from .engine import (
    accepts,
    certify_termination,
    check_termination,
    enumerate_outputs,
    is_single_valued,
    is_stack_free,
    lambda_step_bound,
)
from .errors import CflError, ResourceError, TerminationError
from .machine import LinearBound, MachineSpec, load_machine, parse_machine, validate_spec
from .optimization import OptMode, opt_eval, opt_nfa_el_eval, opt_refinement
from .oracle import Oracle, build_level, complement_oracle, eval_many_one, eval_turing, language_from_machine
from .pumping import Decomposition, PumpingParams, check_decomposition, search_decomposition
from .strings import Alphabet, alphabet, dict_compare, natural_extensions, project_naturals, track_pair

__version__ = "0.1.0"
