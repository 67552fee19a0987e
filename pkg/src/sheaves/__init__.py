from .sheaf_class import SheafClass, todd_log_coefficients
from .operations import (adjoint_sl, ch, ch_from_chern, chern_from_ch, cotangent_of_zero_locus, det,
                         direct_sum, dual, line_bundle, schur, sym, tensor, tensor_line, todd, trivial,
                         wedge)

__all__ = [
    'SheafClass', 'todd_log_coefficients',
    'adjoint_sl', 'ch', 'ch_from_chern', 'chern_from_ch', 'cotangent_of_zero_locus', 'det',
    'direct_sum', 'dual', 'line_bundle', 'schur', 'sym', 'tensor', 'tensor_line', 'todd', 'trivial',
    'wedge',
]
