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
Exceptions and warnings used by the entire library.

@group Base exceptions:
    So3srException, So3srWarning

@group Warnings:
    BoundWarning, RefinementWarning

@group Exceptions:
    DomainException, CapabilityException, SaturationException, SolverException,
    ConsistencyException, UsageException
"""

__revision__ = "$Id$"

__all__ = [
           "So3srException",
           "So3srWarning",
           "BoundWarning",
           "RefinementWarning",
           "DomainException",
           "CapabilityException",
           "SaturationException",
           "SolverException",
           "ConsistencyException",
           "UsageException",
           ]

class So3srException(Exception):
    """Base exception class."""
    pass

class So3srWarning(Warning):
    """Base warning class."""
    pass

class BoundWarning(So3srWarning):
    """Issued when a measured value exceeds a stated reference value."""
    pass

class RefinementWarning(So3srWarning):
    """Issued when a local refinement step is skipped."""
    pass

class DomainException(So3srException):
    """Raised when an argument lies outside the domain of an operation."""
    pass

class CapabilityException(So3srException):
    """Raised when a request goes beyond what the library supports (degree, derivative order, grid size)."""
    pass

class SaturationException(So3srException):
    """Raised when rejection sampling runs out of tries."""
    def __init__(self, message, achieved):
        """
        @type message: str
        @param message: Error description.

        @type achieved: int
        @param achieved: Number of points accepted before giving up.
        """
        So3srException.__init__(self, message)
        self.achieved = achieved

class SolverException(So3srException):
    """Raised when a linear system is singular to working precision."""
    def __init__(self, message, condition):
        """
        @type message: str
        @param message: Error description.

        @type condition: float
        @param condition: Estimated 1-norm condition number of the system.
        """
        So3srException.__init__(self, message)
        self.condition = condition

class ConsistencyException(So3srException):
    """Raised when an internal consistency check fails."""
    pass

class UsageException(So3srException):
    """Raised when an experiment configuration violates a hypothesis."""
    pass
