"""Exact computation of Motzkin, associated Motzkin and telephone numbers.

Everything is done in integers and :class:`fractions.Fraction`; generating
functions are checked as truncated formal power series.
"""

from .exactnum import binomial, catalan, factorial, recip_gamma_int
from .hermite import hermite_kdf, verify_hermite_identity
from .identities import IDENTITY_TAGS, verify_all, verify_identity
from .motzkin import (
    Triangle,
    assoc_motzkin,
    hybrid_poly,
    motzkin,
    motzkin_coeff,
    motzkin_triangle,
    tilde_motzkin,
    verify_motzkin_identity,
)
from .oeis import SequenceFixture, compare_prefix, fetch_bfile, load_fixture, parse_bfile
from .powerseries import Series, cq_series, egf_coeff, ps_add, ps_exp, ps_inflate, ps_mul, ps_scale
from .report import VerificationReport
from .telephone import (
    gen_telephone,
    hermite_number,
    telephone,
    telephone_coeff,
    telephone_triangle,
    verify_telephone_identity,
)
from .umbral import UmbralPoly, c_power, umbral_compose, umbral_eval, umbral_hermite

__version__ = "0.1.0"
