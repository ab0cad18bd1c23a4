"""Exact linear-algebra checks behind the pi^2/6 evaluation of sum 1/n^2,
with squeeze enclosures of zeta(2p)."""

from .bounds import (
    PartialSum,
    ZetaEnclosure,
    odd_sum_enclosure,
    partial_sum,
    squeeze_table,
    zeta_enclosure,
)
from .cot_sums import PowerSumReport, power_sum, verify_lemma2, verify_remark
from .determinant import eval_closed_form, eval_recurrence, verify_zero_set
from .exact_matrices import (
    Kind,
    StructuredMatrix,
    TraceCapExceeded,
    TraceRecord,
    build_matrix,
    trace_power,
    verify_inverse,
)
from .spectrum import (
    SpectrumReport,
    ThetaGrid,
    bisection_eigenvalues,
    closed_form_eigenvalues,
    spectrum_report,
    theta_grid,
)

__version__ = "0.1.0"
