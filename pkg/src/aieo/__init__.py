"""Workbench for Hilbert's epsilon/tau calculus: syntax, proof checking,
finite choice-model semantics, the Montague-style layer, and
square-of-opposition verification for the A/E/I/O sentence forms."""

from .backend import BACKEND_NAME
from .kernel import Derivation, Sequent, check_derivation, shipped_library
from .models import (
    BudgetExceeded,
    ChoiceModel,
    Countermodel,
    Oracle,
    ValidUpTo,
    entails,
    enumerate_models,
    eval_formula,
    eval_term,
)
from .montague import Lexicon, beta_normalize, demonstrate_inadequacy, reify, typecheck
from .parser import parse_formula, parse_term
from .printer import formula_to_text, term_to_text
from .sentences import translate
from .square import (
    AieoSquare,
    Bivalence,
    SquareReport,
    bivalence,
    build_square,
    check_square,
    proposition_check,
    remark_check,
)
from .syntax import (
    And,
    Constant,
    Epsilon,
    Equals,
    Exists,
    Falsum,
    Forall,
    Formula,
    FunApp,
    Implies,
    Not,
    Or,
    PredApp,
    Signature,
    Tau,
    Term,
    Variable,
    alpha_eq,
    dual_normalize,
    expand_quantifiers,
    free_vars,
    substitute,
)

__version__ = "0.1.0"
