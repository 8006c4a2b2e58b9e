#!/usr/bin/python
# -*- coding: utf-8 -*- 

# Copyright (c) 2026, so3sr developers
# All rights reserved. 
# 
# Redistribution and use in source and binary forms, with or without 
# modification, are permitted provided that the following conditions are met: 
# 
#     * Redistributions of source code must retain the above copyright notice, 
#       this list of conditions and the following disclaimer. 
#     * Redistributions in binary form must reproduce the above copyright 
#       notice,this list of conditions and the following disclaimer in the 
#       documentation and/or other materials provided with the distribution. 
#     * Neither the name of the copyright holder nor the names of its 
#       contributors may be used to endorse or promote products derived from 
#       this software without specific prior written permission. 
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" 
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE 
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE 
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT OWNER OR CONTRIBUTORS BE 
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR 
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF 
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS 
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN 
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) 
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE 
# POSSIBILITY OF SUCH DAMAGE. 

"""
Common definitions.
"""

__revision__ = "$Id$"

import math

# rotations
ORTHOGONALITY_TOL = 1e-12
REPROJECT_TOL = 1e-6 # above this a matrix is rejected instead of re-projected
AXIS_TOL = 1e-9
AXIS_ZERO_TOL = 1e-7
AXIS_PI_TOL = 1e-7
POLE_TOL = 1e-10
CONVENTIONAL_AXIS = (0.0, 0.0, 1.0)
DEFAULT_FD_STEP = 1e-4
MAX_FD_STEP = 1e-2

# wigner
MAX_DEGREE = 128
WIGNER_CHUNK = 4096

# filter
MIN_SMOOTHNESS = 6
MAX_SMOOTHNESS = 16
MIN_LEMMA_SMOOTHNESS = 8
SPLINE_DIGITS = 50
ZETA_TOL = 1e-14

LOCALIZATION_SLACK = 1.02
LOCALIZATION_FACTORS = ((1, 0), (2, 0), (4, 1), (9, -2)) # c_{l,s} = slack*(s-1)!*2^s*(a*s+b)
LOWER_SLACK = 0.999
UPPER_SLACK = 1.001
SIXTH_SLACK = 1.011
RING_CONSTANT = 124
RING_FIRST = 27
OFFDIAG_THIRD_SLACK = 1.2

# kernel
MAX_DERIVATIVE_ORDER = 3
MAX_ZERO_ORDER = 6
SMALL_ANGLE = 1e-6
KERNEL_CHUNK = 8192
LOCALIZATION_SAMPLES = 10000

# certificate
DEFAULT_NU = 36.0
DEFAULT_B = 28.0
MIN_CERTIFICATE_DEGREE = 20
SOLVER_CONDITION_LIMIT = 1e12
RESIDUAL_TOL = 1e-8
SOLVE_RESIDUAL_TOL = 1e-10 # relative to the right-hand side
DEFAULT_MARGIN = 1e-3
DEFAULT_FAR_SAMPLES = 2000
SWEEP_AXES = 24
SWEEP_RADII = 96
BAND_GRID = 2001
EVAL_CHUNK = 1024
NEAR_SIGN_FLOOR = 0.9
NEAR_Q_REFERENCE = 0.92
HESSIAN_DIAG_REFERENCE = -0.041 # times (N+1)^2
HESSIAN_OFF_REFERENCE = 0.01 # times (N+1)^2
BAND_T0 = 2.0 * math.sqrt(10.0 * UPPER_SLACK / LOWER_SLACK)
BAND_MID = 2.45 * math.pi
BAND_OUTER = 18.0
BAND_CEILINGS = (0.96, 0.60, 0.99, 0.032)
BAND_SLACK = 0.01
MAX_PATTERN_SUPPORT = 20
DEFAULT_PATTERN_LIMIT = 256

# recovery
MIN_RESOLUTION = math.pi / 256.0
MAX_GRID_SIZE = 10 ** 6
GRID_STRETCH = 1.1
ADMM_RHO = 1.0
ADMM_ITERATIONS = 2000
ADMM_TOL = 1e-8
SUPPORT_THRESHOLD = 0.05
CLUSTER_FACTOR = 2.0
PRUNE_THRESHOLD = 1e-3
REFINE_STEPS = 50
REFINE_FD_STEP = 1e-5
RANK_TOL = 1e-9

# experiments
DEFAULT_SEED = 20260101
THREADS_ENV = "SO3SR_THREADS"
DEFAULT_S = 8
DEFAULT_N = 20
DEFAULT_M = 3
DEFAULT_EPSILON = 0.25
DEFAULT_SUPPORTS = 1
DEFAULT_RESOLUTION = 0.3
DEFAULT_LAMBDA = 1e-2
DEFAULT_COEFFS = (1.0, -2.0, 1.0) # cycled to M entries
IDENTITY_TOL = 1e-9 # relative
RECOVERY_ANGLE_TOL = 1e-3
RECOVERY_COEFF_TOL = 1e-2
