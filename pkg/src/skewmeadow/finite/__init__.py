"""Finite rings as tables, regularity predicates, expansions and decomposition."""
from .decompose import (Decomposition, DecompositionError, NotSkewMeadow, atoms,
                        central_idempotents, corner, decompose,
                        is_zero_totalized_field)
from .expansion import (ExpansionError, NotDistinctlyRegular, NotStronglyRegular,
                        SearchResult, SemigroupReport, UniquenessReport,
                        check_semigroup_props, expand_distinctly_regular,
                        expand_strongly_regular, search_inversion_expansion,
                        verify_unique_inverse)
from .regularity import (RegularityReport, check_regularity, idempotents,
                         inverse_pairs, is_central, is_commutative,
                         pseudoinverses)
from .ring import (FiniteInversionStructure, FiniteRing, InversionTableError,
                   RingTableError, TableFormatError, direct_product, dump_table,
                   from_operations, from_structure, load_table,
                   matrix_ring_mod, read_table, write_table, zmod)
