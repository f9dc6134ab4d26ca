#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.entities.validation import InvalidData

from re import compile as regex



class InvalidCode(InvalidData):


    def __init__(self, raw):
        super(InvalidCode, self).__init__("Invalid ICD-9 code '%s'" % raw)
        self._raw = raw


    @property
    def raw(self):
        return self._raw



class InvalidMention(InvalidData):


    def __init__(self, raw):
        super(InvalidMention, self).__init__(
            "The drug mention '%s' has no token" % raw)
        self._raw = raw


    @property
    def raw(self):
        return self._raw



class TokenizedName(object):
    """
    Immutable value object: a drug name and its tokens.
    """

    def __init__(self, raw, tokens):
        self._raw = raw
        self._tokens = tuple(tokens)


    @property
    def raw(self):
        return self._raw


    @property
    def tokens(self):
        return self._tokens


    def __len__(self):
        return len(self._tokens)


    def __iter__(self):
        return iter(self._tokens)


    def __eq__(self, other):
        if not isinstance(other, TokenizedName):
            return False
        return self._tokens == other.tokens


    def __hash__(self):
        return hash(self._tokens)


    def __repr__(self):
        return "TokenizedName(%r, %r)" % (self._raw, list(self._tokens))


# '<' and '>' are separators too, so that no name ever yields the
# reserved "<NULL>" word of the translation tables.
SEPARATORS = regex(r"[\s(),/;+\-<>]+")


def tokenize_name(raw):
    tokens = [each for each in SEPARATORS.split(raw.lower()) if each]
    return TokenizedName(raw, tokens)



def normalize_icd9(raw):
    code = raw.strip().replace(".", "").upper()
    if not code:
        raise InvalidCode(raw)
    return code



def dotted_icd9(code):
    """
    Inverse of the normalization, for IRIs of ontologies that keep the
    dot: 'E' codes have a four-character category, the others three.
    """
    code = normalize_icd9(code)
    width = 4 if code.startswith("E") else 3
    if len(code) <= width:
        return code
    return code[:width] + "." + code[width:]
