#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#

"""
The entity name model: a drug mention m is read as a word-by-word
translation of a knowledge-base name d, where each word of d is either
retained, converted into an alias word, or where the mention word comes
from nothing at all (the NULL word, which accounts for omitted,
insignificant words). The lexical probabilities t(m_i | d_j) are
estimated by expectation-maximization over (name, alias) pairs, and a
mention is scored as

    P(m|d) = eps / (l_d + 1)^l_m * prod_i sum_j t(m_i | d_j)

with j ranging over the words of d plus NULL.
"""

from pdd.codecs.json import JSON, InvalidTable
from pdd.entities.validation import InvalidData, MissingInput
from pdd.normalize import tokenize_name, InvalidMention

from collections import OrderedDict

from logging import getLogger

from math import exp, log

from os.path import isfile



LOGGER = getLogger(__name__)


NULL = "<NULL>"

UNKNOWN_WORD_FLOOR = 1e-6

NORMALIZATION_TOLERANCE = 1e-9



class EmptyTrainingSet(InvalidData):


    def __init__(self):
        super(EmptyTrainingSet, self).__init__(
            "There is no (name, alias) pair to train from")



class InvalidTrainingPair(InvalidData):


    def __init__(self, source, target):
        super(InvalidTrainingPair, self).__init__(
            "Training pair ('%s', '%s') has an empty name" % (source, target))



class EmConfig(object):


    def __init__(self, max_iterations=50, log_likelihood_tolerance=1e-4,
                 epsilon=1.0):
        if max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if not log_likelihood_tolerance > 0:
            raise ValueError("log_likelihood_tolerance must be positive")
        if not 0 < epsilon <= 1:
            raise ValueError("epsilon must be in (0, 1]")
        self._max_iterations = max_iterations
        self._tolerance = log_likelihood_tolerance
        self._epsilon = epsilon


    @property
    def max_iterations(self):
        return self._max_iterations


    @property
    def log_likelihood_tolerance(self):
        return self._tolerance


    @property
    def epsilon(self):
        return self._epsilon



class TrainingPair(object):
    """
    A knowledge-base name (the source) and one of the ways it is
    written (the target).
    """

    def __init__(self, source, target):
        if not len(source) or not len(target):
            raise InvalidTrainingPair(source.raw, target.raw)
        self._source = source
        self._target = target


    @property
    def source(self):
        return self._source


    @property
    def target(self):
        return self._target


    def __repr__(self):
        return "TrainingPair(%r, %r)" % (self._source, self._target)



def training_pairs(kb):
    """
    One identity pair per entry, so that words learn to stay
    themselves, and one pair per alias, so that they learn their
    conversions.
    """
    pairs = []
    for each_entry in kb:
        if not len(each_entry.tokens):
            continue
        pairs.append(TrainingPair(each_entry.tokens, each_entry.tokens))
        for each_alias in sorted(each_entry.aliases):
            alias = tokenize_name(each_alias)
            if len(alias):
                pairs.append(TrainingPair(each_entry.tokens, alias))
    return pairs



class TranslationTable(object):
    """
    Immutable lexical translation probabilities t(target | source),
    stored sparsely: pairs that are absent have probability zero.
    """

    def __init__(self, probabilities, epsilon=1.0):
        self._rows = OrderedDict()
        for source, row in probabilities.items():
            self._rows[source] = dict(row)
        self._epsilon = epsilon
        self._targets = frozenset(target
                                  for row in self._rows.values()
                                  for target in row)


    @property
    def epsilon(self):
        return self._epsilon


    @property
    def sources(self):
        return frozenset(self._rows)


    @property
    def targets(self):
        return self._targets


    def probability(self, target, source):
        row = self._rows.get(source)
        if row is None:
            return 0.
        return row.get(target, 0.)


    def row(self, source):
        return dict(self._rows.get(source, {}))


    def entries(self):
        return sorted((source, target, probability)
                      for source, row in self._rows.items()
                      for target, probability in row.items())


    def normalization_errors(self, tolerance=NORMALIZATION_TOLERANCE):
        """
        The sources whose outgoing probabilities do not sum to one, and
        the problems with the table as a whole.
        """
        errors = []
        if not 0. < self._epsilon <= 1.:
            errors.append("epsilon %r is not in (0, 1]" % self._epsilon)
        if NULL not in self._rows:
            errors.append("the NULL word has no translation")
        for source, row in self._rows.items():
            if any(not 0. <= p <= 1. for p in row.values()):
                errors.append("'%s' has a probability outside [0, 1]" % source)
            total = sum(row.values())
            if abs(total - 1.) > tolerance:
                errors.append("t(.|%s) sums to %r" % (source, total))
        return errors


    def __len__(self):
        return sum(len(row) for row in self._rows.values())


    def __eq__(self, other):
        if not isinstance(other, TranslationTable):
            return False
        return self._epsilon == other.epsilon \
            and self.entries() == other.entries()


    def __ne__(self, other):
        return not self == other



def expectation(pairs, table=None, epsilon=1.0):
    """
    Exact E-step: expected alignment counts c(source, target) and the
    corpus log-likelihood under the given table. Without a table, every
    target word of the corpus is equally likely.
    """
    if table is None:
        size = len(set(word for each in pairs for word in each.target))
        uniform = 1. / size
        translate = lambda target, source: uniform
    else:
        translate = table.probability

    counts = OrderedDict()
    log_likelihood = 0.
    for each_pair in pairs:
        sources = (NULL,) + each_pair.source.tokens
        log_likelihood += log(epsilon) \
                          - len(each_pair.target) * log(len(sources))
        for each_word in each_pair.target:
            masses = [translate(each_word, each) for each in sources]
            total = sum(masses)
            log_likelihood += log(total)
            for source, mass in zip(sources, masses):
                if mass > 0.:
                    row = counts.setdefault(source, OrderedDict())
                    row[each_word] = row.get(each_word, 0.) + mass / total
    return counts, log_likelihood



def maximization(counts, epsilon=1.0):
    probabilities = OrderedDict()
    for source, row in counts.items():
        total = sum(row.values())
        probabilities[source] = {target: count / total
                                 for target, count in row.items()}
    return TranslationTable(probabilities, epsilon)



def train_em(pairs, config=None):
    config = config or EmConfig()
    if not pairs:
        raise EmptyTrainingSet()
    for each_pair in pairs:
        if not len(each_pair.source) or not len(each_pair.target):
            raise InvalidTrainingPair(each_pair.source.raw, each_pair.target.raw)

    table = None
    trace = []
    for iteration in range(1, config.max_iterations + 1):
        counts, log_likelihood = expectation(pairs, table, config.epsilon)
        table = maximization(counts, config.epsilon)
        LOGGER.debug("EM iteration %d: log-likelihood %r",
                     iteration, log_likelihood)
        trace.append(log_likelihood)
        if len(trace) > 1 \
           and trace[-1] - trace[-2] < config.log_likelihood_tolerance:
            break

    LOGGER.info("EM stopped after %d iteration(s), %d entries",
                len(trace), len(table))
    return table, trace



def _translation(table, word, source):
    if word not in table.targets:
        return UNKNOWN_WORD_FLOOR if source == NULL else 0.
    return table.probability(word, source)



def log_score(mention, candidate, table, epsilon=None):
    """
    Natural logarithm of P(m|d); minus infinity when some mention word
    cannot be produced at all.
    """
    if not len(mention):
        raise InvalidMention(mention.raw)
    if not len(candidate):
        raise InvalidMention(candidate.raw)
    epsilon = table.epsilon if epsilon is None else epsilon

    sources = (NULL,) + candidate.tokens
    result = log(epsilon) - len(mention) * log(len(sources))
    for each_word in mention:
        mass = sum(_translation(table, each_word, each) for each in sources)
        if mass <= 0.:
            return float("-inf")
        result += log(mass)
    return result



def score(mention, candidate, table, epsilon=None):
    return exp(log_score(mention, candidate, table, epsilon))



def unknown_words(mention, table):
    return sum(1 for each in mention if each not in table.targets)



def has_lexical_support(mention, candidate, table):
    """
    True when at least one mention word is a translation of some word
    of the candidate, rather than of NULL alone.
    """
    return any(table.probability(word, source) > 0.
               for word in mention
               for source in candidate)



class Mode:

    RETAINED = "retained"
    OMITTED = "omitted"
    CONVERTED = "converted"



def align(mention, candidate, table):
    alignment = []
    for each_word in mention:
        best, best_probability = NULL, _translation(table, each_word, NULL)
        for each_source in candidate:
            probability = _translation(table, each_word, each_source)
            if probability > best_probability:
                best, best_probability = each_source, probability
        if best == NULL:
            mode = Mode.OMITTED
        elif best == each_word:
            mode = Mode.RETAINED
        else:
            mode = Mode.CONVERTED
        alignment.append((each_word, best, mode))
    return alignment



def save_table(table, path):
    with open(path, "w", encoding="utf-8", newline="\n") as stream:
        JSON.save_table(table, stream)



def load_table(path):
    if not isfile(path):
        raise MissingInput(path)
    with open(path, "r", encoding="utf-8") as stream:
        epsilon, rows = JSON().load_table_from(stream, path)
    table = TranslationTable(rows, epsilon)
    problems = table.normalization_errors()
    if problems:
        raise InvalidTable(path, problems)
    return table
