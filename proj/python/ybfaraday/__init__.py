"""Faraday rotation physics of spin-polarized ytterbium.

Thin python layer over the C++ core: transition constants, exact
Clebsch-Gordan strengths, dispersive/absorptive lineshapes, per-isotope
rotation spectra, optical-pumping rate equations, polarimeter observables,
the three experiment compositions and the least-squares fitting engine.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
