"""Exact radical filtrations, morphism depth, postprojective/preinjective partitions
and the Delta-good category of quasi-hereditary quiver algebras over the rationals."""

from .algebra import (AlgebraPresentation, Arrow, Path, Quiver, Relation, compute_path_basis,
                      injective, opposite, projective, simple)
from .ar import (Ext1Space, ProjPresentation, ShortExact, almost_split_sequence,
                 build_extension, dim_ext1, enumerate_indecomposables, ext1, min_presentation,
                 pushout, tau, tau_inverse, transpose)
from .category import IndexedCategory
from .errors import (AmbientMismatch, CocycleMismatch, CoverFailure, DivisionAlgebraEnd,
                     EmptyLevelWithRemainder, EnumerationBound, NonAdmissible,
                     NonVanishingSelfExt, NotAlmostSplit, PowerBound)
from .io import AlgebraFile, load_algebra, load_preset, parse_algebra, presets
from .linalg import Mat, Rat, Subspace, kernel, rref, solve
from .modules import (HomBasis, Morph, Rep, decompose, dual, end_algebra, hom_basis,
                      injective_envelope, is_indecomposable, is_isomorphic,
                      kernel_image_cokernel, projective_cover, radical_of_end,
                      radical_top_socle)
from .partitions import (POSTPROJECTIVE, PREINJECTIVE, Partition, epi_from_cover,
                         is_splitting_injective, is_splitting_projective, lift_through_epi,
                         mono_into_cocover, postprojective_partition, preinjective_mono_chain,
                         preinjective_partition, restrict, verify_cocover, verify_cover,
                         verify_propdan)
from .qh import (DeltaFiltration, DeltaGoodCategory, QHData, characteristic_modules,
                 costandard_modules, delta_filtration, delta_good_category, delta_membership,
                 is_quasi_hereditary, qh_data, standard_modules, universal_extension,
                 verify_section4)
from .radical import (INFINITE, RadTable, depth, finite_type_certificate, is_rad_inf_square_zero,
                      rad_basis, rad_inf_square, rad_power_table, simple_envelopes)

__version__ = "0.1.0"
