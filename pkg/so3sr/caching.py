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
Named caches for values that are expensive to build and pure in their arguments
(spline ladders per C{s}, filter specs and kernels per C{(s, N)}).

@group Caches:
    Cache, getCache, cached, clearCaches
"""

__revision__ = "$Id$"

__all__ = [
           "Cache",
           "getCache",
           "cached",
           "clearCaches",
           ]

import functools
import logging
import threading

logger = logging.getLogger(__name__)

caches = {}
_cachesLock = threading.Lock()

class Cache(object):
    """Thread safe key/value store."""
    def __init__(self, name):
        self.name = name
        self.cache = {}
        self.lock = threading.RLock()

    def __len__(self):
        return len(self.cache)

    def get(self, key):
        with self.lock:
            return self.cache.get(key)

    def put(self, key, value):
        with self.lock:
            self.cache.update({ key: value })

    def clear(self):
        with self.lock:
            self.cache.clear()

def getCache(name):
    """
    Returns the cache registered under C{name}, creating it on first use.

    @type name: str
    @param name: Cache name.

    @rtype: L{Cache}
    @return: The named cache.
    """
    with _cachesLock:
        cache = caches.get(name)
        if cache is None:
            cache = Cache(name)
            caches[name] = cache
        return cache

def cached(*ids):
    """
    Memoizes a function on its positional arguments.

    The arguments must be hashable. Built values are shared between callers, so
    they must not be mutated.
    """
    def decorator(func):
        funcname = "#".join([func.__module__, func.__name__] + [str(_) for _ in ids])
        @functools.wraps(func)
        def decorated(*args):
            cache = getCache(funcname)
            # building is serialized per cache so concurrent callers share one build
            with cache.lock:
                result = cache.get(args)
                if result is None:
                    logger.debug("building %s%r", func.__name__, args)
                    result = func(*args)
                    cache.put(args, result)
            return result
        return decorated
    return decorator

def clearCaches():
    """Empties every registered cache."""
    with _cachesLock:
        for cache in caches.values():
            cache.clear()
