#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.entities.validation import Reject

from logging import getLogger



LOGGER = getLogger(__name__)



class Codec(object):
    """
    Common ground of the codecs: they keep reading past bad rows and
    collect each of them as a 'Reject', which callers fetch through
    'rejects' once the load is over.
    """

    def __init__(self):
        self._rejects = []


    @property
    def rejects(self):
        return list(self._rejects)


    def _start(self):
        self._rejects = []


    def _reject(self, path, row, problem, hint):
        reject = Reject(path, row, problem, hint)
        LOGGER.warning(str(reject))
        self._rejects.append(reject)
