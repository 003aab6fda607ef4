"""Exact Gotzmann thresholds of powers of a variable."""

from .combinatorics import MacaulayRep, binomial, macaulay_growth, macaulay_rep
from .errors import CapacityError, FitUnstable, InconsistencyError, ScanExhausted, ThresholdNotFound
from .monomials import Monomial
from .oracle import GotzmannVerdict, is_gotzmann, threshold_search
from .polyfit import BinomialPoly, dominant_term, fit, verify_dominant
from .thresholds import tau_delta_sum, tau_machinery, tau_r2, tau_recursive

__version__ = "0.1.0"
