"""Skeletal finite categories as explicit tables, with exhaustive
coherence checking, Drinfeld centers and module monoidal structure."""

from .bridge import (AdjointEquivalenceData, adjoint_equivalence,
                     check_adjoint_equivalence, check_psi_strictness,
                     compose_modmon_functors, gamma_from_s, pair_from_mmc,
                     promote_equivalence, psi_2morphism, psi_morphism,
                     psi_object, roundtrip_mmc_witness, roundtrip_pair_witness)
from .bundle import (Bundle, BundleBuilder, dumps_bundle, load_bundle,
                     save_bundle)
from .center import (CenterCategory, HalfBraiding, PairData, PairMorphismData,
                     check_center_morphism, check_pair_2morphism,
                     check_pair_morphism, compose_pair_morphisms,
                     drinfeld_center, enumerate_half_braidings,
                     identity_pair_morphism, pair_morphism, unit_half_braiding,
                     validate_pair)
from .coherence import (check_braided, check_braided_functor, check_modmon,
                        check_modmon_functor, check_module,
                        check_module_functor, check_module_nat,
                        check_monoidal, check_monoidal_functor,
                        check_monoidal_nat, derived_laws_suite)
from .errors import SkelcatError
from .fincat import (FinCategory, FunctorData, NatTransfData, chain, compose,
                     compose_functors, identity_functor, identity_nat,
                     invert_iso, validate_category, validate_functor,
                     validate_nat_transf)
from .generators import (MutationDescriptor, PointedSpec, cyclic_group,
                         enumerate_braidings, enumerate_cocycles, mutate,
                         pointed_braided, pointed_category, self_action_pair)
from .report import DiagramReport, ReportEntry
from .structures import (BifunctorData, BraidedData, ModMonData,
                         ModMonFunctorData, ModuleData, ModuleFunctorData,
                         MonoidalData, MonoidalFunctorData, component,
                         identity_modmon_functor, identity_monoidal_functor,
                         validate_bifunctor)
from .suite import run_suite, suite_passed

__version__ = "0.1.0"
