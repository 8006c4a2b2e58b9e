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
Auxiliary functions: seeded random streams, thread pools and artifact writers.

@group Random streams:
    streamFor

@group Threads:
    threadCount, threadPool, chunkRanges, mapChunks

@group Artifacts:
    toJsonable, writeCsvAtomic, writeJsonAtomic, readJsonConfig
"""

__revision__ = "$Id$"

__all__ = [
           "streamFor",
           "threadCount",
           "threadPool",
           "chunkRanges",
           "mapChunks",
           "toJsonable",
           "writeCsvAtomic",
           "writeJsonAtomic",
           "readJsonConfig",
           ]

from . import consts
from . import excep

from concurrent.futures import ThreadPoolExecutor
import csv
import json
import logging
import math
import os
import tempfile
import zlib

import numpy as np

logger = logging.getLogger(__name__)

def streamFor(seed, label):
    """
    Derives an independent random stream from a root seed and a fixed label.

    @type seed: int
    @param seed: 64-bit root seed.

    @type label: str
    @param label: Stream label, e.g. C{"support"} or C{"far-samples"}.

    @rtype: C{numpy.random.Generator}
    @return: A generator that depends only on C{(seed, label)}.
    """
    key = zlib.crc32(label.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF, spawn_key=(key,)))

def threadCount():
    """
    Reads the thread budget from the C{SO3SR_THREADS} environment variable.

    @rtype: int
    @return: Number of worker threads, at least 1.

    @raise UsageException: The variable is set but is not a positive integer.
    """
    value = os.environ.get(consts.THREADS_ENV)
    if not value:
        return 1
    try:
        count = int(value)
    except ValueError:
        raise excep.UsageException("%s must be a positive integer, got %r" % (consts.THREADS_ENV, value))
    if count < 1:
        raise excep.UsageException("%s must be a positive integer, got %r" % (consts.THREADS_ENV, value))
    return count

def threadPool(workers=None):
    return ThreadPoolExecutor(max_workers=workers or threadCount())

def chunkRanges(total, size):
    """
    Splits C{range(total)} into consecutive C{(start, stop)} pairs of at most C{size} items.
    """
    size = max(1, int(size))
    return [(start, min(start + size, total)) for start in range(0, total, size)]

def mapChunks(func, total, size, workers=None):
    """
    Applies C{func(start, stop)} to consecutive chunks of C{range(total)}.

    Results come back in chunk order, so the outcome does not depend on the
    number of threads.

    @type func: callable
    @param func: Worker taking C{(start, stop)}.

    @type total: int
    @param total: Number of items.

    @type size: int
    @param size: Chunk size.

    @type workers: int
    @param workers: (Optional) Thread count. Defaults to L{threadCount}.

    @rtype: list
    @return: One result per chunk.
    """
    ranges = chunkRanges(total, size)
    workers = workers or threadCount()
    if workers == 1 or len(ranges) <= 1:
        return [func(start, stop) for (start, stop) in ranges]
    with threadPool(workers) as pool:
        futures = [pool.submit(func, start, stop) for (start, stop) in ranges]
        return [future.result() for future in futures]

def toJsonable(value):
    """
    Converts numpy scalars and arrays, tuples and nested containers into plain
    JSON types. Non-finite floats become C{null} so that every numeric field
    holds numbers only.
    """
    if isinstance(value, dict):
        return dict((str(k), toJsonable(v)) for (k, v) in value.items())
    if isinstance(value, (list, tuple)):
        return [toJsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return toJsonable(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if not math.isfinite(value):
            return None
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value

def _replace(path, writer, mode):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, mode, newline="" if "b" not in mode else None) as stream:
            writer(stream)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.info("wrote %s", path)

def writeCsvAtomic(path, header, rows):
    """
    Writes a CSV file through a temporary file and a rename.

    Floats are written with C{repr} so that reruns are byte-identical.

    @type path: str
    @param path: Destination.

    @type header: list
    @param header: Column names.

    @type rows: iterable
    @param rows: Row sequences.
    """
    def fmt(value):
        if isinstance(value, (float, np.floating)):
            return repr(float(value))
        return value

    def writer(stream):
        out = csv.writer(stream, lineterminator="\n")
        out.writerow(header)
        for row in rows:
            out.writerow([fmt(v) for v in row])

    _replace(path, writer, "w")

def writeJsonAtomic(path, document):
    """
    Writes a JSON document (sorted keys, fixed indentation) through a temporary
    file and a rename.
    """
    text = json.dumps(toJsonable(document), sort_keys=True, indent=2)

    def writer(stream):
        stream.write(text)
        stream.write("\n")

    _replace(path, writer, "w")

def readJsonConfig(path):
    """
    Loads a JSON object from C{path}.

    @raise UsageException: The file cannot be read or does not hold a JSON object.
    """
    try:
        with open(path, "r") as stream:
            document = json.load(stream)
    except (IOError, OSError, ValueError) as error:
        raise excep.UsageException("cannot read config file %s: %s" % (path, error))
    if not isinstance(document, dict):
        raise excep.UsageException("config file %s must hold a JSON object" % path)
    return document
