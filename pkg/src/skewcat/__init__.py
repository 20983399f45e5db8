"""skewcat: verification and construction toolkit for skew-monoidal
categories, skew enrichments, skew actegories and skew proactegories on
finite data.

Every structure is immutable after construction; every check is a pure
function returning a Report with deterministic violation ordering, so checks
may safely run concurrently.
"""

from .report import Report, Violation
from .sets import (EMPTY, SINGLETON, FinFn, FinSet, SizeCapExceeded, coprod_set,
                   equalizer, finset, power_set, prod_set, quotient, set_size_cap)
from .cats import (SET, FinCat, check_category, discrete_cat, idem2_cat, monoid_cat,
                   op_cat, parallel_pair, product_cat, sets_fragment, terminal_cat,
                   walking_arrow, z2_cat)
from .functors import (FunctorRep, NatTransRep, Family, ProfunctorRep,
                       check_functor, check_profunctor, hom_functor, identity_functor)
from .limits import Coend, End, TwoSided, coend, end

__all__ = [
    "Report", "Violation", "FinSet", "FinFn", "FinCat", "SET",
    "FunctorRep", "NatTransRep", "ProfunctorRep", "Family",
    "Coend", "End", "TwoSided", "coend", "end",
    "check_category", "check_functor", "check_profunctor",
    "finset", "prod_set", "coprod_set", "power_set", "quotient", "equalizer",
    "set_size_cap", "SizeCapExceeded", "EMPTY", "SINGLETON",
    "terminal_cat", "discrete_cat", "walking_arrow", "parallel_pair",
    "monoid_cat", "z2_cat", "idem2_cat", "sets_fragment", "op_cat", "product_cat",
    "hom_functor", "identity_functor",
]
