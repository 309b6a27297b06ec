"""Named law suites and the harness that runs them."""
from .catalog import (CSPEC, DERIVED, HSPEC, IR, PCIR, QSPEC, RU, SKMD, SUITES,
                      Law, LawSuite, derived_props_catalog, get_suite,
                      spec_suites)
from .harness import (Exhaustive, Grid, LawOutcome, LawReport, Random,
                      render_tuple, run_suite, sampler)
