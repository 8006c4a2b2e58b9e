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

__revision__ = "$Id$"

__all__ = ['metadata', 'setup']

from setuptools import setup

import os
import sys
import glob

if sys.version_info < (3, 8):
    sys.exit('Sorry, Python 3.8 or newer is required.')

# Get the base directory
here = os.path.dirname(__file__)
if not here:
    here = os.path.curdir

long_description = """so3sr recovers signed Dirac measures on SO(3) from finitely many Wigner D-moments
and numerically verifies the interpolating dual certificate behind the exact recovery."""

# Get the list of scripts in the "tools" folder
scripts = glob.glob(os.path.join('tools', '*.py'))

# Set the parameters for the setup script
metadata = {

    # Setup instructions
    'provides'          : ['so3sr'],
    'packages'          : ['so3sr'],
    'scripts'           : scripts,
    'python_requires'   : '>=3.8',
    'install_requires'  : ['numpy>=1.20', 'scipy>=1.7', 'mpmath>=1.2'],
    'extras_require'    : {'test': ['pytest>=6', 'sympy>=1.8']},

    # Metadata
    'name'              : 'so3sr',
    'version'           : 'v0.1',
    'description'       : 'Super-resolution of point measures on the rotation group from Wigner D-moments.',
    'long_description'  : long_description,
    'license'           : 'BSD 3-Clause',
    'keywords'          : ['so3', 'rotation group', 'super-resolution', 'wigner', 'dual certificate'],
    }

# Execute the setup script
if __name__ == '__main__':
    setup(**metadata)
