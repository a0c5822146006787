# Copyright 2026 The ESS Engine Authors.
# SPDX-License-Identifier: Apache-2.0

"""Scoring, selection and tiered recommendation of explainability techniques."""

from ._ess import *  # noqa: F401,F403
from ._ess import __version__, EssError, ValidationError, ParseError, DomainError, IoError  # noqa: F401
