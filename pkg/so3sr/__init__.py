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
Exact recovery of signed Dirac measures on the rotation group SO(3) from their
Wigner D-moments: the localized kernel, the dual certificate and its
verification, and a desk-scale recovery pipeline.

@group Geometry:
    Rotation, AxisAngle, EulerZXZ, SupportSet

@group Harmonic analysis:
    MomentVector, PointMeasure, moments

@group Filter and kernel:
    FilterSpec, filterSpec, ZonalKernel, buildKernel

@group Certificate:
    InterpolationSystem, Certificate, assemble, solveCertificate, CertificateVerifier

@group Recovery:
    recoverMeasure, plantMeasure, score

@group Experiments:
    ExperimentConfig, run

@group Exceptions:
    So3srException, DomainException, CapabilityException, SaturationException,
    SolverException, ConsistencyException, UsageException, So3srWarning,
    BoundWarning, RefinementWarning

@type version: str
@var version: This so3sr release version.
"""

__revision__ = "$Id$"

__all__ = [
           # Library version
           "version",
           "version_number",

           # from so3core import *
           "Rotation",
           "AxisAngle",
           "EulerZXZ",
           "SupportSet",

           # from wigner import *
           "MomentVector",
           "PointMeasure",
           "moments",

           # from filters import *
           "FilterSpec",
           "filterSpec",

           # from kernel import *
           "ZonalKernel",
           "buildKernel",

           # from certificate import *
           "InterpolationSystem",
           "Certificate",
           "assemble",
           "solveCertificate",
           "CertificateVerifier",

           # from recovery import *
           "recoverMeasure",
           "plantMeasure",
           "score",

           # from experiments import *
           "ExperimentConfig",
           "run",

           # from excep import *
           "So3srException",
           "DomainException",
           "CapabilityException",
           "SaturationException",
           "SolverException",
           "ConsistencyException",
           "UsageException",
           "So3srWarning",
           "BoundWarning",
           "RefinementWarning",
           ]

from .so3core import Rotation, AxisAngle, EulerZXZ, SupportSet
from .wigner import MomentVector, PointMeasure, moments
from .filters import FilterSpec, filterSpec
from .kernel import ZonalKernel, buildKernel
from .certificate import InterpolationSystem, Certificate, assemble, solveCertificate, CertificateVerifier
from .recovery import recoverMeasure, plantMeasure, score
from .experiments import ExperimentConfig, run
from .excep import *

# Library version
version_number = 0.1
version = "Version %s" % version_number
