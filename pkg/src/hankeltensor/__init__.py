"""Hankel tensors: fast products, SOS and Vandermonde decompositions, and
H-eigenvalue checks of the inheritance properties."""

from ._backend import BACKEND
from .core import (AntiCirculantEmbedding, HankelMatrix, HankelTensor,
                   associated_matrix, as_tensor, conv_power, convolve,
                   grad_eval, higher_order_associate, hilbert_tensor,
                   make_hankel, poly_eval, tvp_fft, tvp_naive)
from .errors import (ConvergenceError, DimensionError, HankelError,
                     NotPSDError, NotStrongError, NumericalError,
                     StructureError)
from .linalg import poly_roots, sym_eig, takagi_psd, vandermonde_solve
from .sos import SOSDecomposition, sos_decompose, sos_eval
from .spectra import (HEigenPair, LiftBoundConstants, check_first_inheritance,
                      check_second_inheritance, heig_all_small,
                      heig_multistart, heig_power, lift_constants)
from .vandermonde import VandermondeDecomposition, avd_decompose, reconstruct

__version__ = "0.1.0"
