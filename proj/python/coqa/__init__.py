# SPDX-License-Identifier: Apache-2.0
"""Swap-network compiler for QAOA cost layers on heavy-hex devices."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
