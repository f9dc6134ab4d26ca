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

from pdd.entities.records import PatientRecord, PrescriptionRecord, \
    DiagnosisRecord
from pdd.graph import PddGraph, GraphSettings, Vocabulary, InvalidIri, \
    MissingDecision, DEFAULT_NAMESPACE, mint_patient_iri, mint_drug_iri, \
    mint_disease_iri, build_graph, serialize_ntriples, parse_ntriples, \
    query_triples
from pdd.linker import LinkDecision, DiseaseDecision

from rdflib import URIRef, Literal
from rdflib.namespace import OWL, RDF

from os import makedirs
from os.path import isdir, join as join_paths

from random import Random

from shutil import rmtree



NS = DEFAULT_NAMESPACE

PATIENT = URIRef(NS + "18740")
OTHER_PATIENT = URIRef(NS + "274671")
ASPIRIN = URIRef(NS + "aspirin")
SEPSIS = URIRef(NS + "icd99592")
VOCABULARY = Vocabulary(NS)



def linked(mention, kb_id):
    return LinkDecision.linked(mention, kb_id, 0.5, [])



def unlinked(mention):
    return LinkDecision.unlinked(mention, LinkDecision.NO_LEXICAL_SUPPORT, [])



def micro_graph():
    patients = [PatientRecord("18740", [("gender", "F")]),
                PatientRecord("274671")]
    prescriptions = [PrescriptionRecord("18740", "Aspirin"),
                     PrescriptionRecord("18740", "Aspirin"),
                     PrescriptionRecord("274671", "NS")]
    diagnoses = [DiagnosisRecord("274671", "995.92")]
    drugs = {"Aspirin": linked("Aspirin", "DB00945"), "NS": unlinked("NS")}
    diseases = {"99592": DiseaseDecision("995.92", True)}
    return build_graph(patients, prescriptions, diagnoses, drugs, diseases)



class IrisAreMinted(TestCase):


    def test_given_a_patient(self):
        self.assertEqual(URIRef(NS + "18740"), mint_patient_iri("18740"))


    def test_given_a_disease_code(self):
        self.assertEqual(URIRef(NS + "icd99592"), mint_disease_iri("99592"))


    def test_given_a_dotted_disease_code(self):
        self.assertEqual(URIRef(NS + "icd99592"), mint_disease_iri("995.92"))


    def test_given_a_drug_with_a_strength(self):
        self.assertEqual(URIRef(NS + "dextrose%205%25"),
                         mint_drug_iri("Dextrose 5%"))


    def test_given_a_drug_with_punctuation(self):
        self.assertEqual(URIRef(NS + "ns%20%28glass%20bottle%29"),
                         mint_drug_iri("NS (Glass Bottle)"))


    def test_given_another_namespace(self):
        self.assertEqual(URIRef("http://example.org/pdd/aspirin"),
                         mint_drug_iri("Aspirin", "http://example.org/pdd/"))


    def test_given_non_ascii_characters(self):
        self.assertEqual(URIRef(NS + "caf%C3%A9ine"), mint_drug_iri("Caféine"))


    def test_given_a_relative_namespace(self):
        with self.assertRaises(InvalidIri):
            mint_patient_iri("18740", "pdd_data/")


    def test_given_a_relative_prefix_in_settings(self):
        with self.assertRaises(InvalidIri):
            GraphSettings(drug_kb_iri_prefix="drugbank:")



class GraphsAreBuilt(TestCase):


    def setUp(self):
        self.graph = micro_graph()


    def test_prescriptions_become_triples(self):
        self.assertIn((PATIENT, VOCABULARY.prescribed, ASPIRIN), self.graph)
        self.assertIn((OTHER_PATIENT, VOCABULARY.prescribed, URIRef(NS + "ns")),
                      self.graph)


    def test_diagnoses_become_triples(self):
        self.assertIn((OTHER_PATIENT, VOCABULARY.diagnosed, SEPSIS), self.graph)


    def test_demographics_become_literals(self):
        self.assertIn((PATIENT, URIRef(NS + "gender"), Literal("F")), self.graph)


    def test_linked_drugs_are_same_as_the_knowledge_base(self):
        self.assertIn((ASPIRIN, OWL.sameAs,
                       URIRef("http://bio2rdf.org/drugbank:DB00945")),
                      self.graph)


    def test_linked_diseases_keep_the_dot(self):
        self.assertIn((SEPSIS, OWL.sameAs,
                       URIRef("http://bio2rdf.org/icd9:995.92")),
                      self.graph)


    def test_unlinked_drugs_have_no_same_as(self):
        self.assertEqual(set(), self.graph.objects(URIRef(NS + "ns"), OWL.sameAs))


    def test_entities_are_typed(self):
        self.assertEqual({PATIENT, OTHER_PATIENT},
                         self.graph.subjects_of_type(VOCABULARY.patient))
        self.assertEqual({ASPIRIN, URIRef(NS + "ns")},
                         self.graph.subjects_of_type(VOCABULARY.drug))
        self.assertEqual({SEPSIS}, self.graph.subjects_of_type(VOCABULARY.disease))


    def test_duplicate_prescriptions_collapse(self):
        self.assertEqual(1, len(list(self.graph.triples(
            (PATIENT, VOCABULARY.prescribed, None)))))


    def test_every_triple_is_accounted_for(self):
        # 2 patients typed, 1 demographic, 2 prescribed, 2 drugs typed,
        # 1 drug sameAs, 1 diagnosed, 1 disease typed, 1 disease sameAs
        self.assertEqual(11, len(self.graph))


    def test_given_no_record(self):
        self.assertEqual(0, len(build_graph([], [], [], {}, {})))


    def test_mentions_differing_by_case_share_an_entity(self):
        graph = build_graph(
            [PatientRecord("1")],
            [PrescriptionRecord("1", "Aspirin"), PrescriptionRecord("1", "ASPIRIN")],
            [],
            {"Aspirin": linked("Aspirin", "DB00945"),
             "ASPIRIN": linked("ASPIRIN", "DB00945")},
            {})

        self.assertEqual(1, len(graph.subjects_of_type(VOCABULARY.drug)))


    def test_given_a_mention_without_decision(self):
        with self.assertRaises(MissingDecision) as context:
            build_graph([PatientRecord("1")],
                        [PrescriptionRecord("1", "Aspirin")],
                        [], {}, {})
        self.assertEqual("Aspirin", context.exception.key)


    def test_given_a_code_without_decision(self):
        with self.assertRaises(MissingDecision):
            build_graph([PatientRecord("1")], [],
                        [DiagnosisRecord("1", "995.92")], {}, {})


    def test_spellings_of_one_code_give_one_disease(self):
        graph = build_graph([PatientRecord("1"), PatientRecord("2")], [],
                            [DiagnosisRecord("1", "995.92"),
                             DiagnosisRecord("2", "99592")],
                            {},
                            {"99592": DiseaseDecision("99592", True,
                                                      ["995.92", "99592"])})

        self.assertEqual(1, len(list(graph.triples((None, OWL.sameAs, None)))))
        self.assertIn((URIRef(NS + "2"), VOCABULARY.diagnosed, SEPSIS), graph)


    def test_given_custom_prefixes(self):
        settings = GraphSettings("http://example.org/pdd/",
                                 "http://example.org/drugs/",
                                 "http://example.org/icd9/")

        graph = build_graph([PatientRecord("1")],
                            [PrescriptionRecord("1", "Aspirin")],
                            [DiagnosisRecord("1", "99592")],
                            {"Aspirin": linked("Aspirin", "DB00945")},
                            {"99592": DiseaseDecision("99592", True)},
                            settings)

        self.assertIn((URIRef("http://example.org/pdd/aspirin"), OWL.sameAs,
                       URIRef("http://example.org/drugs/DB00945")), graph)
        self.assertIn((URIRef("http://example.org/pdd/icd99592"), OWL.sameAs,
                       URIRef("http://example.org/icd9/995.92")), graph)


    def test_literal_subjects_are_refused(self):
        with self.assertRaises(InvalidIri):
            PddGraph().add((Literal("18740"), VOCABULARY.prescribed, ASPIRIN))



class GraphsAreQueried(TestCase):


    def setUp(self):
        self.graph = micro_graph()


    def test_given_a_subject(self):
        triples = query_triples(self.graph, subject=PATIENT)

        self.assertEqual(3, len(triples))
        self.assertTrue(all(each[0] == PATIENT for each in triples))


    def test_given_only_wildcards(self):
        self.assertEqual(set(self.graph), set(query_triples(self.graph)))


    def test_results_are_sorted(self):
        triples = query_triples(self.graph)

        self.assertEqual(sorted(triples, key=lambda t: tuple(e.n3() for e in t)),
                         triples)


    def test_given_a_predicate_and_an_object(self):
        self.assertEqual([(OTHER_PATIENT, VOCABULARY.diagnosed, SEPSIS)],
                         query_triples(self.graph, None,
                                       VOCABULARY.diagnosed, SEPSIS))


    def test_matches_a_linear_scan(self):
        graph = random_graph(Random(8), 500)
        for subject, predicate, obj in list(graph)[:50]:
            for pattern in [(subject, None, None), (None, predicate, obj),
                            (None, predicate, None), (subject, None, obj)]:
                expected = set(each for each in graph
                               if all(bound is None or bound == value
                                      for bound, value in zip(pattern, each)))

                self.assertEqual(expected,
                                 set(query_triples(graph, *pattern)))



def random_graph(random, size):
    predicates = [VOCABULARY.prescribed, VOCABULARY.diagnosed, RDF.type,
                  URIRef(NS + "age")]
    graph = PddGraph()
    while len(graph) < size:
        subject = URIRef(NS + str(random.randint(1, size)))
        predicate = random.choice(predicates)
        if predicate == URIRef(NS + "age"):
            obj = Literal(str(random.randint(18, 90)))
        elif random.random() < 0.1:
            obj = Literal(u"café \"quoted\"\n%d" % random.randint(1, 9))
        else:
            obj = URIRef(NS + "e%d" % random.randint(1, size))
        graph.add((subject, predicate, obj))
    return graph



class GraphsAreSerialized(TestCase):

    WORKSPACE = "temp/graph/ntriples"


    def setUp(self):
        if isdir(self.WORKSPACE):
            rmtree(self.WORKSPACE)
        makedirs(self.WORKSPACE)


    def tearDown(self):
        rmtree(self.WORKSPACE, ignore_errors=True)


    def path(self, file_name):
        return join_paths(self.WORKSPACE, file_name)


    def lines_of(self, file_name):
        with open(self.path(file_name), "r", encoding="utf-8") as stream:
            return stream.read().splitlines()


    def test_given_a_single_triple(self):
        graph = PddGraph(NS, [(PATIENT, VOCABULARY.prescribed, ASPIRIN)])

        count = serialize_ntriples(graph, self.path("pdd.nt"))

        self.assertEqual(1, count)
        self.assertEqual(["<%s> <%s> <%s> ." % (PATIENT, VOCABULARY.prescribed,
                                                ASPIRIN)],
                         self.lines_of("pdd.nt"))


    def test_lines_are_sorted(self):
        serialize_ntriples(micro_graph(), self.path("pdd.nt"))

        lines = self.lines_of("pdd.nt")
        self.assertEqual(sorted(lines), lines)
        self.assertTrue(all(each.endswith(" .") for each in lines))


    def test_round_trip(self):
        graph = micro_graph()

        serialize_ntriples(graph, self.path("pdd.nt"))

        self.assertEqual(graph, parse_ntriples(self.path("pdd.nt")))


    def test_round_trip_on_random_graphs(self):
        random = Random(1000)
        for index in range(1000):
            graph = random_graph(random, random.randint(0, 12))

            serialize_ntriples(graph, self.path("random.nt"))

            self.assertEqual(graph, parse_ntriples(self.path("random.nt")),
                             "graph #%d" % index)


    def test_reruns_are_byte_identical(self):
        serialize_ntriples(micro_graph(), self.path("first.nt"))
        serialize_ntriples(micro_graph(), self.path("second.nt"))

        with open(self.path("first.nt"), "rb") as first, \
             open(self.path("second.nt"), "rb") as second:
            self.assertEqual(first.read(), second.read())


    def test_given_a_large_graph(self):
        graph = PddGraph()
        for index in range(100000):
            graph.add((URIRef(NS + "p%d" % (index // 10)),
                       VOCABULARY.prescribed,
                       URIRef(NS + "d%d" % index)))

        count = serialize_ntriples(graph, self.path("large.nt"))

        self.assertEqual(100000, count)
        self.assertEqual(100000, len(self.lines_of("large.nt")))
