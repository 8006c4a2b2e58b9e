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
__author__ = "so3sr developers"
__contact__ = "so3sr-dev@users.noreply.github.com"
__license__ = "BSD 3-Clause"

import logging
import sys

from so3sr import excep, experiments

from optparse import OptionParser,  OptionGroup

def prepareOptions(parser):
    FilterGroup = OptionGroup(parser,  "Options for the filter and the support")
    BoundsGroup = OptionGroup(parser,  "Options for bound verification")
    CertificateGroup = OptionGroup(parser,  "Options for certificates")
    RecoveryGroup = OptionGroup(parser,  "Options for recovery")
    AdditionalInformationGroup = OptionGroup(parser,  "Additional Options")

    FilterGroup.add_option("--s",  dest="s",  type="int",  help="filter smoothness, even and in [6, 16]")
    FilterGroup.add_option("--N",  dest="N",  type="int",  help="degree of the moments")
    FilterGroup.add_option("--nu",  dest="nu",  type="float",  help="separation factor, support separation is nu/(N+1)")
    FilterGroup.add_option("--M",  dest="M",  type="int",  help="number of support points")
    FilterGroup.add_option("--seed",  dest="seed",  type="int",  help="64-bit root seed")

    BoundsGroup.add_option("--samples",  dest="samples",  type="int",  help="samples per localization bound")
    BoundsGroup.add_option("--epsilon",  dest="epsilon",  type="float",  help="offset factor of the evaluation point, in [0, 1/2]")

    CertificateGroup.add_option("--patterns",  dest="patterns",  help="'all' or the number of random sign patterns")
    CertificateGroup.add_option("--supports",  dest="supports",  type="int",  help="number of random supports")
    CertificateGroup.add_option("--near-mesh",  dest="near_mesh",  type="float",  help="mesh of the near-region balls, at most pi/(8(N+1))")
    CertificateGroup.add_option("--far-samples",  dest="far_samples",  type="int",  help="Haar samples of the far region")
    CertificateGroup.add_option("--margin",  dest="margin",  type="float",  help="required gap below 1 in the far region")
    CertificateGroup.add_option("--b",  dest="b",  type="float",  help="cascade parameter of the coefficient bounds")

    RecoveryGroup.add_option("--resolution",  dest="resolution",  type="float",  help="covering radius of the grid in radians")
    RecoveryGroup.add_option("--lambda",  dest="lam",  type="float",  help="lasso penalty")
    RecoveryGroup.add_option("--iters",  dest="iters",  type="int",  help="ADMM iteration cap")
    RecoveryGroup.add_option("--coeffs",  dest="coeffs",  help="planted coefficients, i.e. --coeffs 1,-2,1")
    RecoveryGroup.add_option("--match-radius",  dest="match_radius",  type="float",  help="matching radius of the score")

    AdditionalInformationGroup.add_option("-o",  "--out",  dest="out",  help="artifact path")
    AdditionalInformationGroup.add_option("-c",  "--config",  dest="config",  help="JSON file with settings, overridden by flags")
    AdditionalInformationGroup.add_option("-v",  "--verbose",  dest="verbose",  action="store_true",  default=False,  help="print debug messages")
    AdditionalInformationGroup.add_option("-q",  "--quiet",  dest="quiet",  action="store_true",  default=False,  help="print warnings and errors only")

    parser.add_option_group(FilterGroup)
    parser.add_option_group(BoundsGroup)
    parser.add_option_group(CertificateGroup)
    parser.add_option_group(RecoveryGroup)
    parser.add_option_group(AdditionalInformationGroup)

    return parser

def main():
    usage = "usage %%prog <option> {%s}" % "|".join(experiments.SUBCOMMANDS)

    parserInst = OptionParser(usage=usage,  version="%prog 1.0")

    parser = prepareOptions(parserInst)

    (options,  args) = parser.parse_args()

    if len(args) != 1:
        parser.error("incorrect number of arguments: exactly one subcommand is expected.")

    if options.verbose and options.quiet:
        parser.error("--verbose and --quiet are mutually exclusive.")

    level = logging.DEBUG if options.verbose else (logging.WARNING if options.quiet else logging.INFO)
    logging.basicConfig(level=level,  format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    flags = dict((name,  getattr(options,  name)) for name in experiments.ExperimentConfig.fields)

    try:
        config = experiments.ExperimentConfig.fromSources(args[0],  flags,  options.config)
        status = experiments.run(config)
    except excep.UsageException as error:
        parser.error(str(error))

    sys.exit(status)

if __name__ == "__main__":
    main()
