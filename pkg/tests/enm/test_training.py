#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from unittest import TestCase

from pdd.enm import EmConfig, TrainingPair, TranslationTable, NULL, \
    training_pairs, expectation, train_em, EmptyTrainingSet, \
    InvalidTrainingPair
from pdd.entities.records import DrugKbEntry
from pdd.normalize import tokenize_name

from itertools import product

from math import log

from random import Random



def pair(source, target):
    return TrainingPair(tokenize_name(source), tokenize_name(target))



def brute_force_em(pairs, iterations, epsilon=1.0):
    """
    EM where every alignment of every pair is enumerated explicitly.
    Returns the final table as {source: {target: probability}} and the
    log-likelihood seen before each M-step.
    """
    vocabulary = set(word for each in pairs for word in each.target)
    table = None
    trace = []
    for _ in range(iterations):
        counts = {}
        log_likelihood = 0.
        for each in pairs:
            sources = [NULL] + list(each.source)
            targets = list(each.target)
            weights = []
            for alignment in product(range(len(sources)), repeat=len(targets)):
                weight = 1.
                for word, position in zip(targets, alignment):
                    if table is None:
                        weight *= 1. / len(vocabulary)
                    else:
                        weight *= table.get(sources[position], {}).get(word, 0.)
                weights.append((alignment, weight))
            total = sum(weight for _, weight in weights)
            log_likelihood += log(epsilon) \
                              - len(targets) * log(len(sources)) + log(total)
            for alignment, weight in weights:
                for word, position in zip(targets, alignment):
                    row = counts.setdefault(sources[position], {})
                    row[word] = row.get(word, 0.) + weight / total
        trace.append(log_likelihood)
        table = {}
        for source, row in counts.items():
            mass = sum(row.values())
            table[source] = dict((word, count / mass)
                                 for word, count in row.items() if count > 0.)
    return table, trace



def random_corpus(random, size=None, length=3):
    words = ["a", "b", "c", "d", "e"]
    pairs = []
    for _ in range(size or random.randint(1, 3)):
        source = [random.choice(words) for _ in range(random.randint(1, length))]
        target = [random.choice(words) for _ in range(random.randint(1, length))]
        pairs.append(pair(" ".join(source), " ".join(target)))
    return pairs



class TrainingPairsAreChecked(TestCase):


    def test_given_an_empty_source(self):
        with self.assertRaises(InvalidTrainingPair):
            pair("  ", "aspirin")


    def test_given_an_empty_target(self):
        with self.assertRaises(InvalidTrainingPair):
            pair("aspirin", "( )")


    def test_given_no_pair(self):
        with self.assertRaises(EmptyTrainingSet):
            train_em([])



class EmConfigIsChecked(TestCase):


    def test_defaults(self):
        config = EmConfig()
        self.assertEqual(50, config.max_iterations)
        self.assertEqual(1e-4, config.log_likelihood_tolerance)
        self.assertEqual(1.0, config.epsilon)


    def test_given_no_iteration(self):
        with self.assertRaises(ValueError):
            EmConfig(max_iterations=0)


    def test_given_a_null_tolerance(self):
        with self.assertRaises(ValueError):
            EmConfig(log_likelihood_tolerance=0.)


    def test_given_an_epsilon_above_one(self):
        with self.assertRaises(ValueError):
            EmConfig(epsilon=1.5)


    def test_given_a_null_epsilon(self):
        with self.assertRaises(ValueError):
            EmConfig(epsilon=0.)



class TrainingPairsComeFromTheKnowledgeBase(TestCase):


    def test_given_a_drug_with_aliases(self):
        kb = [DrugKbEntry("DB09341", "Dextrose", ["Glucose", "D-Glucose"])]

        pairs = training_pairs(kb)

        self.assertEqual([(["dextrose"], ["dextrose"]),
                          (["dextrose"], ["d", "glucose"]),
                          (["dextrose"], ["glucose"])],
                         [(list(each.source), list(each.target))
                          for each in pairs])


    def test_given_a_drug_without_alias(self):
        kb = [DrugKbEntry("DB00945", "Aspirin")]

        pairs = training_pairs(kb)

        self.assertEqual(1, len(pairs))



class TrainingMatchesTheBruteForceOracle(TestCase):


    def test_given_a_single_identity_pair(self):
        pairs = [pair("glucose", "glucose")]

        table, _ = train_em(pairs, EmConfig(max_iterations=10))

        self.assertAlmostEqual(table.probability("glucose", "glucose"),
                               table.probability("glucose", NULL),
                               delta=1e-12)


    def test_identity_pair_splits_its_counts_evenly(self):
        pairs = [pair("glucose", "glucose")]

        counts, _ = expectation(pairs)

        self.assertAlmostEqual(0.5, counts[NULL]["glucose"], delta=1e-12)
        self.assertAlmostEqual(0.5, counts["glucose"]["glucose"], delta=1e-12)


    def test_given_a_shared_source_word(self):
        pairs = [pair("a", "x"), pair("a b", "x y")]

        table, _ = train_em(pairs, EmConfig(max_iterations=10,
                                            log_likelihood_tolerance=1e-12))

        self.assertGreater(table.probability("x", "a"),
                           table.probability("y", "a"))
        self.assert_matches_oracle(pairs, table, 10)


    def test_given_random_small_corpora(self):
        random = Random(42)
        for _ in range(25):
            pairs = random_corpus(random)
            config = EmConfig(max_iterations=random.randint(1, 8),
                              log_likelihood_tolerance=1e-12)

            table, trace = train_em(pairs, config)

            self.assert_matches_oracle(pairs, table, len(trace), trace)


    def assert_matches_oracle(self, pairs, table, iterations, trace=None):
        expected, expected_trace = brute_force_em(pairs, iterations)
        for source, row in expected.items():
            for target, probability in row.items():
                self.assertAlmostEqual(probability,
                                       table.probability(target, source),
                                       delta=1e-6)
        for source, target, probability in table.entries():
            self.assertAlmostEqual(expected.get(source, {}).get(target, 0.),
                                   probability,
                                   delta=1e-6)
        if trace is not None:
            for actual, oracle in zip(trace, expected_trace):
                self.assertAlmostEqual(oracle, actual, delta=1e-6)



class LikelihoodNeverDecreases(TestCase):


    def test_on_random_corpora(self):
        random = Random(2018)
        for _ in range(100):
            pairs = random_corpus(random, size=random.randint(1, 6), length=4)

            _, trace = train_em(pairs, EmConfig(max_iterations=20,
                                                log_likelihood_tolerance=1e-12))

            for before, after in zip(trace, trace[1:]):
                self.assertGreaterEqual(after - before, -1e-9)



class TrainedTablesAreNormalized(TestCase):


    def test_after_every_iteration(self):
        pairs = random_corpus(Random(3), size=6, length=4)
        for iterations in range(1, 11):
            table, _ = train_em(pairs,
                                EmConfig(max_iterations=iterations,
                                         log_likelihood_tolerance=1e-12))
            self.assertEqual([], table.normalization_errors())


    def test_the_null_word_is_a_source(self):
        table, _ = train_em([pair("aspirin", "acetylsalicylic acid")])

        self.assertIn(NULL, table.sources)



class TrainingStops(TestCase):


    def test_at_the_iteration_limit(self):
        pairs = random_corpus(Random(5), size=5, length=3)

        _, trace = train_em(pairs, EmConfig(max_iterations=3,
                                            log_likelihood_tolerance=1e-12))

        self.assertEqual(3, len(trace))


    def test_when_the_likelihood_stalls(self):
        pairs = [pair("glucose", "glucose")]

        _, trace = train_em(pairs, EmConfig(max_iterations=50))

        self.assertLess(len(trace), 50)
        self.assertLess(trace[-1] - trace[-2], 1e-4)



class TrainingIsDeterministic(TestCase):


    def test_when_trained_twice(self):
        kb = [DrugKbEntry("DB09341", "Dextrose", ["Glucose", "Dextrose 5%"]),
              DrugKbEntry("DB00945", "Aspirin", ["Acetylsalicylic acid"])]

        first, _ = train_em(training_pairs(kb))
        second, _ = train_em(training_pairs(kb))

        self.assertEqual(first.entries(), second.entries())
