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
Experiment suites behind the command line.

Every suite reads an L{ExperimentConfig}, draws its randomness from streams
derived from the root seed by fixed labels, writes one artifact atomically and
reports whether its hard assertions held. Measured values that exceed a
reference value without breaking a proof obligation are logged as findings.

@group Configuration:
    SUBCOMMANDS, ExperimentConfig, parsePatterns, parseCoeffs

@group Suites:
    constantsSuite, localizationSuite, offdiagSuite, certificateSuite,
    recoverSuite

@group Runner:
    SUITES, run
"""

__revision__ = "$Id$"

__all__ = [
           "SUBCOMMANDS",
           "ExperimentConfig",
           "parsePatterns",
           "parseCoeffs",
           "constantsSuite",
           "localizationSuite",
           "offdiagSuite",
           "certificateSuite",
           "recoverSuite",
           "SUITES",
           "run",
           ]

from . import certificate
from . import consts
from . import excep
from . import filters
from . import kernel
from . import recovery
from . import so3core
from . import utils

from collections import OrderedDict
import datetime
import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("constants", "verify-localization", "verify-offdiag", "certificate", "recover")

_OUTPUTS = {
    "constants": "constants.csv",
    "verify-localization": "localization.csv",
    "verify-offdiag": "offdiag.json",
    "certificate": "report.json",
    "recover": "result.json",
    }

_FILTER_SUITES = ("constants", "verify-localization", "verify-offdiag", "certificate")
_SUPPORT_SUITES = ("verify-offdiag", "certificate", "recover")

def parsePatterns(value):
    """
    C{"all"} or a positive pattern count.

    @raise ValueError: Anything else.
    """
    if isinstance(value, str) and value.strip().lower() == "all":
        return "all"
    count = int(value)
    if count < 1:
        raise ValueError("pattern count must be positive")
    return count

def parseCoeffs(value):
    """
    Coefficients from a list or a comma separated string such as C{"1,-2,1"}.

    @rtype: tuple
    """
    if isinstance(value, str):
        value = [part for part in value.split(",") if part.strip()]
    return tuple(float(v) for v in value)

def _integer(value):
    if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
        raise ValueError("not an integer: %r" % (value,))
    return int(value)

class ExperimentConfig(object):
    """
    One subcommand and every numeric setting.

    Values come from the defaults, then L{update} calls (a JSON config file,
    then the command line flags). C{None} leaves a setting unchanged.
    """
    fields = OrderedDict([
        ("s", (consts.DEFAULT_S, _integer)),
        ("N", (consts.DEFAULT_N, _integer)),
        ("nu", (consts.DEFAULT_NU, float)),
        ("M", (consts.DEFAULT_M, _integer)),
        ("seed", (consts.DEFAULT_SEED, _integer)),
        ("samples", (consts.LOCALIZATION_SAMPLES, _integer)),
        ("epsilon", (consts.DEFAULT_EPSILON, float)),
        ("b", (consts.DEFAULT_B, float)),
        ("supports", (consts.DEFAULT_SUPPORTS, _integer)),
        ("patterns", ("all", parsePatterns)),
        ("near_mesh", (None, float)),
        ("far_samples", (consts.DEFAULT_FAR_SAMPLES, _integer)),
        ("margin", (consts.DEFAULT_MARGIN, float)),
        ("resolution", (consts.DEFAULT_RESOLUTION, float)),
        ("lam", (consts.DEFAULT_LAMBDA, float)),
        ("iters", (consts.ADMM_ITERATIONS, _integer)),
        ("coeffs", (None, parseCoeffs)),
        ("match_radius", (None, float)),
        ("out", (None, str)),
        ])

    def __init__(self, subcommand, **values):
        """
        @type subcommand: str
        @param subcommand: One of L{SUBCOMMANDS}.

        @raise UsageException: Unknown subcommand or setting, or a value of the wrong type.
        """
        if subcommand not in SUBCOMMANDS:
            raise excep.UsageException("unknown subcommand %r, expected one of %s" % (subcommand, ", ".join(SUBCOMMANDS)))
        self.subcommand = subcommand
        for name, (default, convert) in self.fields.items():
            setattr(self, name, default)
        self.update(values)

    def __repr__(self):
        return "ExperimentConfig(%s)" % ", ".join("%s=%r" % (k, v) for (k, v) in self.toDict().items())

    @classmethod
    def fromSources(cls, subcommand, flags=None, path=None):
        """
        Defaults, then the JSON object in C{path}, then C{flags}. The result is validated.

        @rtype: L{ExperimentConfig}

        @raise UsageException: A value is invalid or a hypothesis fails.
        """
        config = cls(subcommand)
        if path:
            config.update(utils.readJsonConfig(path))
        if flags:
            config.update(flags)
        config.validate()
        return config

    def update(self, values):
        """
        Overrides settings from a mapping.

        @rtype: L{ExperimentConfig}
        @return: C{self}.
        """
        for name, value in values.items():
            if name not in self.fields:
                raise excep.UsageException("unknown setting %r" % (name,))
            if value is None:
                continue
            try:
                setattr(self, name, self.fields[name][1](value))
            except (TypeError, ValueError):
                raise excep.UsageException("invalid value for %s: %r" % (name, value))
        return self

    @property
    def output(self):
        """The artifact path."""
        return self.out or _OUTPUTS[self.subcommand]

    def coefficients(self):
        """The planted coefficients, C{(1, -2, 1)} cycled to C{M} entries unless set."""
        if self.coeffs is not None:
            return list(self.coeffs)
        return [consts.DEFAULT_COEFFS[i % len(consts.DEFAULT_COEFFS)] for i in range(self.M)]

    def patternLimit(self):
        return 2 ** self.M if self.patterns == "all" else min(self.patterns, 2 ** self.M)

    def _require(self, condition, hypothesis, value):
        if not condition:
            raise excep.UsageException("%s: hypothesis %s fails (got %s)" % (self.subcommand, hypothesis, value))

    def validate(self):
        """
        Checks every setting the subcommand uses against the ranges of the
        module it feeds.

        @raise UsageException: The message names the failed hypothesis.
        """
        sub = self.subcommand
        self._require(1 <= self.N <= consts.MAX_DEGREE, "1 <= N <= %d" % consts.MAX_DEGREE, "N = %r" % self.N)
        self._require(0 <= self.seed < 2 ** 64, "0 <= seed < 2^64", "seed = %r" % self.seed)
        if sub in _FILTER_SUITES:
            self._require(self.s % 2 == 0 and consts.MIN_SMOOTHNESS <= self.s <= consts.MAX_SMOOTHNESS,
                          "s even and in [%d, %d]" % (consts.MIN_SMOOTHNESS, consts.MAX_SMOOTHNESS), "s = %r" % self.s)
            self._require(self.N >= 2 * self.s, "N >= 2s", "N = %r, s = %r" % (self.N, self.s))
        if sub in _SUPPORT_SUITES:
            self._require(self.nu >= math.pi, "nu >= pi", "nu = %r" % self.nu)
            self._require(self.M >= 1, "M >= 1", "M = %r" % self.M)
        if sub == "verify-localization":
            self._require(self.samples >= 1, "samples >= 1", "samples = %r" % self.samples)
        if sub == "verify-offdiag":
            self._require(0.0 <= self.epsilon <= 0.5, "0 <= epsilon <= 1/2", "epsilon = %r" % self.epsilon)
        if sub == "certificate":
            self._require(self.s >= consts.MIN_LEMMA_SMOOTHNESS, "s >= %d" % consts.MIN_LEMMA_SMOOTHNESS, "s = %r" % self.s)
            self._require(self.N >= consts.MIN_CERTIFICATE_DEGREE, "N >= %d" % consts.MIN_CERTIFICATE_DEGREE, "N = %r" % self.N)
            self._require(self.M <= consts.MAX_PATTERN_SUPPORT, "M <= %d" % consts.MAX_PATTERN_SUPPORT, "M = %r" % self.M)
            cs = consts.LOWER_SLACK / (2.0 * (self.s + 1))
            self._require(self.b > 3.0 + cs / 4.0, "b > 3 + c_s/4", "b = %r" % self.b)
            self._require(self.supports >= 1, "supports >= 1", "supports = %r" % self.supports)
            self._require(self.far_samples >= 1, "far_samples >= 1", "far_samples = %r" % self.far_samples)
            self._require(0.0 <= self.margin < 1.0, "0 <= margin < 1", "margin = %r" % self.margin)
            limit = math.pi / (8.0 * (self.N + 1))
            self._require(self.near_mesh is None or 0.0 < self.near_mesh <= limit, "0 < near_mesh <= pi/(8(N+1))", "near_mesh = %r" % self.near_mesh)
        if sub == "recover":
            self._require(self.resolution >= consts.MIN_RESOLUTION, "resolution >= pi/256", "resolution = %r" % self.resolution)
            size = recovery.gridSize(self.resolution)
            self._require(size <= consts.MAX_GRID_SIZE, "grid size <= 10^6", "%d points" % size)
            self._require(self.lam > 0.0, "lambda > 0", "lambda = %r" % self.lam)
            self._require(self.iters >= 1, "iters >= 1", "iters = %r" % self.iters)
            self._require(self.coeffs is None or len(self.coeffs) == self.M, "one coefficient per spike", "%r for M = %d" % (self.coeffs, self.M))
            self._require(self.coeffs is None or all(c != 0.0 for c in self.coeffs), "nonzero coefficients", "%r" % (self.coeffs,))
            self._require(self.match_radius is None or self.match_radius > 0.0, "match_radius > 0", "match_radius = %r" % self.match_radius)
        return self

    def toDict(self):
        out = OrderedDict([("subcommand", self.subcommand)])
        for name in self.fields:
            out[name] = getattr(self, name)
        out["out"] = self.output
        return out

def _euler(matrices):
    return [list(so3core.eulerArrays(m)) for m in so3core.asMatrices(matrices)]

def _closeEnough(measured, closed):
    return abs(measured - closed) <= consts.IDENTITY_TOL * max(1.0, abs(closed))

def constantsSuite(config, workers=None):
    """
    Writes the constants table C{s,N,name,value} and checks the closed forms
    of the spline ladder, the sandwich estimate and the zero-derivative bounds.
    """
    spec = filters.filterSpec(config.s, config.N)
    passed = True
    for check in filters.bsplineIdentities(config.s):
        if not _closeEnough(check.measured, check.closed):
            logger.warning("identity %s: measured %.17g, closed form %.17g", check.name, check.measured, check.closed)
            passed = False
    for entry in filters.variationConstants(config.s):
        if entry.relation == "=" and not _closeEnough(entry.measured, entry.closed):
            logger.warning("identity %s: measured %.17g, closed form %.17g", entry.name, entry.measured, entry.closed)
            passed = False
        elif entry.relation == "<=" and entry.measured > entry.closed * (1.0 + consts.IDENTITY_TOL):
            logger.warning("finding: %s = %.6g exceeds the stated bound %.6g", entry.name, entry.measured, entry.closed)
    sandwich = filters.sandwichReport(spec)
    if not sandwich["holds"]:
        logger.warning("sandwich estimate fails: %r", sandwich)
        passed = False
    if spec.zeroBounds is not None:
        for row in filters.zeroDerivativeReport(spec):
            if not row["holds"]:
                logger.warning("zero-derivative bound of order %d fails: %r", row["order"], row)
                passed = False
    utils.writeCsvAtomic(config.output, ["s", "N", "name", "value"], filters.constantRows(spec))
    return passed

def localizationSuite(config, workers=None):
    """Writes the localization report C{bound_name,s,N,worst_ratio,arg_at_worst}."""
    spec = filters.filterSpec(config.s, config.N)
    report = kernel.verifyLocalization(spec, samples=config.samples, rng=utils.streamFor(config.seed, "localization"), workers=workers)
    report.toCsv(config.output)
    return report.passed

def offdiagSuite(config, workers=None):
    """
    Off-diagonal sums at a point on the C{epsilon} sphere around the first
    center of a random support.
    """
    spec = filters.filterSpec(config.s, config.N)
    n1 = config.N + 1.0
    support = so3core.wellSeparatedSupport(utils.streamFor(config.seed, "support"), config.M, config.nu / n1)
    offset = utils.streamFor(config.seed, "offset")
    axis = offset.standard_normal(3)
    axis /= np.linalg.norm(axis)
    radius = config.epsilon * config.nu / n1 * (1.0 - 1e-9)
    x = so3core.Rotation(support.matrices[0].dot(so3core.expMap(radius * axis)))
    report = kernel.verifyOffdiagSums(support, x, spec, config.epsilon, config.nu)
    document = OrderedDict()
    document["config"] = config.toDict()
    document["support"] = _euler(support.matrices)
    document["separation"] = support.separation
    document["x"] = list(so3core.eulerArrays(x.matrix))
    document["report"] = report.toDict()
    document["passed"] = report.passed
    utils.writeJsonAtomic(config.output, document)
    return report.passed

def certificateSuite(config, workers=None):
    """
    For each random support: the bound cascade, and the certificates of all
    (or a sample of) sign patterns with their near and far checks. The Taylor
    envelope and the analytic band values are recorded once.
    """
    spec = filters.filterSpec(config.s, config.N)
    supportStream = utils.streamFor(config.seed, "support")
    patternStream = utils.streamFor(config.seed, "patterns")
    envelope = certificate.taylorEnvelope(spec)
    bands = certificate.analyticBandBounds(spec, config.nu, config.b)
    runs = []
    passed = True
    for index in range(config.supports):
        centers = so3core.wellSeparatedSupport(supportStream, config.M, config.nu / (config.N + 1.0))
        system = certificate.assemble(centers, spec)
        schur = certificate.checkSchurBounds(system, spec, config.nu, config.b)
        summary = certificate.enumerateSignPatterns(centers, spec, config.patternLimit(), patternStream, config.near_mesh,
                                                    config.far_samples, config.margin, config.b, workers)
        ceilings = all(row["ceilings_held"] for row in summary.results)
        ok = bool(schur.passed and summary.passed and ceilings)
        entry = OrderedDict()
        entry["index"] = index
        entry["centers"] = _euler(centers.matrices)
        entry["separation"] = centers.separation
        entry["condition"] = system.condition
        entry["schur"] = schur.toDict()
        entry["patterns"] = summary.toDict()
        entry["ceilings_held"] = ceilings
        entry["passed"] = ok
        runs.append(entry)
        logger.info("support %d of %d: %s", index + 1, config.supports, "passed" if ok else "FAILED")
        passed = passed and ok
    document = OrderedDict()
    document["config"] = config.toDict()
    document["envelope"] = envelope
    document["analytic_bands"] = bands
    document["supports"] = runs
    document["passed"] = passed
    utils.writeJsonAtomic(config.output, document)
    return passed

def recoverSuite(config, workers=None):
    """
    Plants a measure, recovers it from its moments and scores the estimate
    before and after refinement.
    """
    truth, b = recovery.plantMeasure(utils.streamFor(config.seed, "support"), config.N, config.M, config.nu, config.coefficients())
    run = recovery.recoverMeasure(b, config.N, config.resolution, config.lam, config.iters, workers=workers)
    radius = config.match_radius or config.resolution
    coarse = recovery.score(truth, run.coarse, radius)
    result = recovery.score(truth, run.estimate, radius)
    result.residual = run.residual
    result.iterations = run.solution.iterations
    result.converged = run.solution.converged
    passed = bool(not result.unmatchedTrue and not result.unmatchedEstimated
                  and result.maxGeodesicError <= consts.RECOVERY_ANGLE_TOL
                  and result.maxCoefficientError <= consts.RECOVERY_COEFF_TOL)

    document = OrderedDict()
    document["config"] = config.toDict()
    document["truth"] = OrderedDict([("euler", _euler(truth.centers.matrices)), ("coeffs", list(truth.coeffs)),
                                     ("separation", truth.centers.separation)])
    document["lasso"] = OrderedDict([("degree", run.degree), ("grid_size", len(run.grid)), ("iterations", run.solution.iterations),
                                     ("converged", run.solution.converged), ("gap", run.solution.gap),
                                     ("primal", run.solution.primal), ("dual", run.solution.dual)])
    if run.refinement is not None:
        document["refinement"] = OrderedDict([("initial", run.refinement.initial), ("final", run.refinement.final),
                                              ("steps", run.refinement.steps), ("flagged", run.refinement.flagged),
                                              ("reason", run.refinement.reason)])
    else:
        document["refinement"] = None
    document["coarse"] = coarse.toDict()
    document["result"] = result.toDict()
    document["passed"] = passed
    document["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    utils.writeJsonAtomic(config.output, document)
    return passed

SUITES = OrderedDict([
    ("constants", constantsSuite),
    ("verify-localization", localizationSuite),
    ("verify-offdiag", offdiagSuite),
    ("certificate", certificateSuite),
    ("recover", recoverSuite),
    ])

def run(config, workers=None):
    """
    Runs the suite of C{config.subcommand}.

    @type config: L{ExperimentConfig}

    @type workers: int
    @param workers: (Optional) Thread count, defaults to C{SO3SR_THREADS}.

    @rtype: int
    @return: 0 if every hard assertion held, 1 otherwise (including errors
        raised by the library).

    @raise UsageException: The configuration is invalid.
    """
    config.validate()
    workers = workers or utils.threadCount()
    logger.info("running %s with seed %d on %d thread(s)", config.subcommand, config.seed, workers)
    try:
        passed = SUITES[config.subcommand](config, workers)
    except excep.UsageException:
        raise
    except excep.So3srException as error:
        logger.error("%s aborted: %s", config.subcommand, error)
        return 1
    logger.info("%s %s, artifact %s", config.subcommand, "passed" if passed else "FAILED", config.output)
    return 0 if passed else 1
