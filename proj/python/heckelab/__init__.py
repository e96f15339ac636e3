"""Exact Hecke-algebra Satake computations for GL_r and GSp_2g.

Everything is exact: rational coefficients, a formal invertible symbol Q for
the residue field size, and brute-force finite-geometry oracles over small
prime fields.
"""

from heckelab._core import *  # noqa: F401,F403
from heckelab._core import __version__  # noqa: F401
