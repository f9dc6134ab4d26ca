#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



class InvalidConfiguration(Exception):
    """
    Root of the problems that come from the command line or from the
    configuration file. Reported with exit status 1.
    """

    EXIT_STATUS = 1



class InvalidData(Exception):
    """
    Root of the problems found in the input data (EMR tables, drug
    knowledge base, ontology, trained tables, link decisions). Reported
    with exit status 2.
    """

    EXIT_STATUS = 2



class MissingInput(InvalidConfiguration):


    def __init__(self, path):
        super(MissingInput, self).__init__("Cannot find '%s'" % path)
        self._path = path


    @property
    def path(self):
        return self._path



class InvalidConfigurationValue(InvalidConfiguration):


    def __init__(self, key, value, hint):
        super(InvalidConfigurationValue, self).__init__(
            "Invalid value '%s' for '%s'" % (value, key))
        self._key = key
        self._value = value
        self._hint = hint


    @property
    def key(self):
        return self._key


    @property
    def value(self):
        return self._value


    @property
    def hint(self):
        return self._hint



class InvalidInput(InvalidData):


    def __init__(self, path, errors):
        super(InvalidInput, self).__init__(
            "'%s' is invalid (%d error(s))" % (path, len(errors)))
        self._path = path
        self._errors = errors


    @property
    def path(self):
        return self._path


    @property
    def errors(self):
        return self._errors



class Error(object):

    def __init__(self, problem, hint):
        self._problem = problem
        self._hint = hint


    def __repr__(self):
        return self.TEMPLATE % (self._problem, self._hint)

    TEMPLATE = ("Error: %s\n"
                "       %s\n")


    def __str__(self):
        return self._problem


    @property
    def hint(self):
        return self._hint


    @property
    def problem(self):
        return self._problem



class Reject(Error):
    """
    A row that a loader refused. Rows are numbered from 1 and the header
    line, if any, counts as row 1.
    """

    def __init__(self, path, row, problem, hint):
        super(Reject, self).__init__(problem, hint)
        self._path = path
        self._row = row


    def __str__(self):
        return "%s, row %d: %s" % (self._path, self._row, self._problem)


    @property
    def path(self):
        return self._path


    @property
    def row(self):
        return self._row



class MissingColumn(Error):

    PROBLEM = "The column '%s' is missing."
    HINT = "The header must read: %s"

    def __init__(self, column, expected):
        super(MissingColumn, self).__init__(
            self.PROBLEM % column,
            self.HINT % ",".join(expected))



class DuplicateIdentifier(Error):

    PROBLEM = "The identifier '%s' is used by more than one entry."
    HINT = "Knowledge base identifiers must be unique."

    def __init__(self, identifier):
        super(DuplicateIdentifier, self).__init__(
            self.PROBLEM % identifier,
            self.HINT)



class EmptyName(Error):

    PROBLEM = "The entry '%s' has no name."
    HINT = "Every drug needs a non-empty canonical name."

    def __init__(self, identifier):
        super(EmptyName, self).__init__(
            self.PROBLEM % identifier,
            self.HINT)



class Malformed(Error):

    PROBLEM = "Cannot read '%s': %s"
    HINT = "Check the file against its documented format."

    def __init__(self, what, reason):
        super(Malformed, self).__init__(
            self.PROBLEM % (what, reason),
            self.HINT)
