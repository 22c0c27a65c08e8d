"""Weighted transmuted exponential distribution toolkit.

Thin wrapper over the C++ core in `_nwte`: distribution evaluation and
sampling, moments and entropies, residual-life functions, maximum-likelihood
fitting of NWTE and eight competitor families, goodness-of-fit statistics and
hydrologic return-level analysis.
"""

try:
    # wheel layout: the extension is installed inside the package
    from ._nwte import *  # noqa: F401,F403
except ImportError:
    # development layout: extension on PYTHONPATH from the CMake build tree
    from _nwte import *  # noqa: F401,F403
