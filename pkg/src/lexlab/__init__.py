"""lexlab: exact lex ideals, saturation, Gotzmann data and local cohomology tables."""

from .cohomology import (DegreeWindow, Differential, LCTable, SequentialCMVerdict,
                         TaylorComplex, adjoin_variable, default_window,
                         depth_and_dim, ext_dimensions, graded_component_rank,
                         local_cohomology_table, sequentially_cm_verdict,
                         tables_agree, taylor_complex, verify_complex)
from .errors import (GeneratorCapExceeded, InternalInconsistency, LexlabError,
                     MacaulayViolation, ParseError, UnluckyCoordinates)
from .families import FamilySpec, all_strongly_stable, borel_filters, enumerate_strongly_stable
from .gotzmann import (ExchangeReport, GotzmannData, exchange_property,
                       gotzmann_representation, is_gotzmann, lex_ideal,
                       lex_ideal_from_values, predict_lc_vanishing,
                       saturated_lex_generators)
from .groebner import (CoordinateChange, GBasis, buchberger, gin, initial_ideal,
                       normal_form, polynomial_degree_dim, spoly)
from .hilbert import (HilbertData, MacaulayRep, dimension, hilbert_function,
                      hilbert_numerator, hilbert_series, macaulay_growth,
                      macaulay_rep, multiplicity, values_from_numerator)
from .ideals import (MonomialIdeal, colon, contains, depth_positive_stable,
                     graded_generator_counts, intersect, is_strongly_stable,
                     maximal_ideal, minimalize, saturate, strong_stability_witness)
from .parsing import parse_ideal, parse_monomial, parse_polynomial, parse_ring
from .reports import (RigidityReport, VerificationReport, probe_rigidity, verify_main)
from .ring import (DEGREVLEX, LEX, Exp, Poly, RingSpec, TermOrder, borel_move,
                   compare, enumerate_monomials, monomial_divides, monomial_lcm,
                   total_degree)

__all__ = [name for name in dir() if not name.startswith("_")]
