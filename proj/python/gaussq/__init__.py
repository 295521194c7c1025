"""Entropies of Gaussian bosonic states and the one-mode attenuation/amplification channel."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
