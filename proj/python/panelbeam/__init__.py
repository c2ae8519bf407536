# SPDX-License-Identifier: Apache-2.0
# panelbeam: multi-panel analog beamforming under stochastic path blockage
# Copyright (C) 2026 The panelbeam authors

from panelbeam._core import *  # noqa: F401,F403
from panelbeam._core import __doc__  # noqa: F401

__version__ = "0.1.0"
