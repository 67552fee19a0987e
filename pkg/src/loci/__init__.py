from .ambient import Ambient, AmbientSpec, build_base
from .reports import Classification, HodgeTable, LocusReport
from .forms import (FormsLocus, FormsLocusConfig, GrassmannBundleCheck, check_conditions, check_grassmann_bundle,
                    polynomial_identity_checks, fundamental_class, grassmann_bundle_catalog, hodge_numbers,
                    generic_polynomials, invariants, schur_forms, twisted_coherence)
from .nilpotent import (NilpotentLocus, NilpotentLocusConfig, RichardsonOrbit, feasibility, fourfold_catalog,
                        full_cone_ci_check, minimal_orbit_ci_check, orbit_catalog, typeA_invariants)

__all__ = [
    'Ambient', 'AmbientSpec', 'build_base',
    'Classification', 'HodgeTable', 'LocusReport',
    'FormsLocus', 'FormsLocusConfig', 'GrassmannBundleCheck', 'check_conditions', 'check_grassmann_bundle',
    'polynomial_identity_checks', 'fundamental_class', 'grassmann_bundle_catalog', 'hodge_numbers',
    'generic_polynomials', 'invariants', 'schur_forms', 'twisted_coherence',
    'NilpotentLocus', 'NilpotentLocusConfig', 'RichardsonOrbit', 'feasibility', 'fourfold_catalog',
    'full_cone_ci_check', 'minimal_orbit_ci_check', 'orbit_catalog', 'typeA_invariants',
]
