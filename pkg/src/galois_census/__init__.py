"""Exact-arithmetic census of integer polynomials by Galois group.

Core surface:

  intpoly      resultants, discriminants, the double discriminant,
               factorization over Q, integer diagnostics
  ffpoly       factorization over F_p, splitting types, the weighted
               Fourier transform and its equidistribution bounds, box counts
  galois       classification for degree <= 7, Dedekind certificates,
               Frobenius cycle-type sampling, transitive group tables
  census       exhaustive sharded censuses with checkpoint/resume,
               case decomposition, growth-exponent fitting
  cli          command-line interface (galois-census)
"""

from . import arith, census, ffpoly, galois, grouptables, intpoly
from .census import CensusConfig, CensusReport, case_decompose, enumerate_census, fit_exponent
from .ffpoly import (FourierReport, FpPoly, SplittingType, factor_mod_p,
                     fourier_transform_w, poisson_box_count, splitting_type, weight_w)
from .galois import (ClassifyOptions, FieldDiscCertificate, GaloisLabel, classify,
                     cycle_type_sample, dedekind_test, field_disc_certificate, group_table)
from .intpoly import (IntFactorization, IntPoly, MonicIntPoly, disc_in_an,
                      discriminant, double_discriminant, factor_over_Q,
                      int_poly, integer_diagnostics, mod_p2_persistence, resultant)

__version__ = "0.1.0"
