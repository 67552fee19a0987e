from .flags import FlagType, FlagVariety, parse_flag, parse_weight
from .cohomology import (BottResult, CohomologyTable, bott_cohomology, cohomology_of_character, decompose,
                         irreducible_sheaf, serre_dual_weight)
from .expressions import BundleExpr, parse_bundle
from .pushforward import pushforward_table, relative_pushforward
from .koszul import SpectralAssembly, cohomology_on_ambient, koszul_terms, tighten_with_euler

__all__ = [
    'FlagType', 'FlagVariety', 'parse_flag', 'parse_weight',
    'BottResult', 'CohomologyTable', 'bott_cohomology', 'cohomology_of_character', 'decompose',
    'irreducible_sheaf', 'serre_dual_weight',
    'BundleExpr', 'parse_bundle',
    'pushforward_table', 'relative_pushforward',
    'SpectralAssembly', 'cohomology_on_ambient', 'koszul_terms', 'tighten_with_euler',
]
