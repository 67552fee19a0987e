from .partitions import Partition, SchurVector, complement, partitions_in_box, partitions_of, weyl_dim
from .littlewood_richardson import (column_class_integral, lr_coefficient, schur_in_elementary,
                                    schur_product, to_schur_basis, vertical_strips)
from .characters import (GLCharacter, block_schur_character, schur_character, schur_decompose,
                         sym_of_character, wedge_of_character)
from .numerology import crepancy_check, n_value, rank_variety_numerology, schur_rank_locus_condition

__all__ = [
    'Partition', 'SchurVector', 'complement', 'partitions_in_box', 'partitions_of', 'weyl_dim',
    'column_class_integral', 'lr_coefficient', 'schur_in_elementary', 'schur_product',
    'to_schur_basis', 'vertical_strips',
    'GLCharacter', 'block_schur_character', 'schur_character', 'schur_decompose',
    'sym_of_character', 'wedge_of_character',
    'crepancy_check', 'n_value', 'rank_variety_numerology', 'schur_rank_locus_condition',
]
