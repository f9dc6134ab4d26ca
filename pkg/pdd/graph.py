#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.codecs.ntriples import NTriples
from pdd.entities.validation import InvalidData
from pdd.normalize import normalize_icd9, dotted_icd9

from rdflib import Graph, URIRef, Literal
from rdflib.namespace import OWL, RDF

from logging import getLogger

from urllib.parse import quote, urlparse



LOGGER = getLogger(__name__)


DEFAULT_NAMESPACE = "http://kmap.xjtudlc.com/pdd_data/"

DEFAULT_DRUG_KB_IRI_PREFIX = "http://bio2rdf.org/drugbank:"

DEFAULT_ICD9_IRI_PREFIX = "http://bio2rdf.org/icd9:"



class InvalidIri(InvalidData):


    def __init__(self, value):
        super(InvalidIri, self).__init__("Cannot make an IRI from %r" % (value,))
        self._value = value


    @property
    def value(self):
        return self._value



class MissingDecision(InvalidData):


    def __init__(self, kind, key):
        super(MissingDecision, self).__init__(
            "No link decision for the %s '%s'" % (kind, key))
        self._kind = kind
        self._key = key


    @property
    def kind(self):
        return self._kind


    @property
    def key(self):
        return self._key



def _encode(text):
    try:
        return quote(text.encode("utf-8"), safe="")
    except UnicodeEncodeError:
        raise InvalidIri(text)



def _absolute(value):
    parts = urlparse(value)
    if not parts.scheme or not (parts.netloc or parts.path):
        raise InvalidIri(value)
    return URIRef(value)



def mint_patient_iri(patient_id, namespace=DEFAULT_NAMESPACE):
    return _absolute(namespace + _encode(patient_id))



def mint_drug_iri(drug_entity_name, namespace=DEFAULT_NAMESPACE):
    return _absolute(namespace + _encode(drug_entity_name.lower()))



def mint_disease_iri(code, namespace=DEFAULT_NAMESPACE):
    return _absolute(namespace + "icd" + _encode(normalize_icd9(code)))



class Vocabulary(object):
    """
    The classes and predicates of a PDD graph, all minted in its
    namespace.
    """

    def __init__(self, namespace):
        self._namespace = namespace
        self.prescribed = URIRef(namespace + "prescribed")
        self.diagnosed = URIRef(namespace + "diagnosed")
        self.patient = URIRef(namespace + "Patient")
        self.drug = URIRef(namespace + "Drug")
        self.disease = URIRef(namespace + "Disease")


    def attribute(self, name):
        return _absolute(self._namespace + _encode(name))


    @property
    def structural(self):
        return frozenset([RDF.type, self.prescribed, self.diagnosed, OWL.sameAs])



class GraphSettings(object):


    def __init__(self, namespace=DEFAULT_NAMESPACE,
                 drug_kb_iri_prefix=DEFAULT_DRUG_KB_IRI_PREFIX,
                 icd9_iri_prefix=DEFAULT_ICD9_IRI_PREFIX):
        for each in (namespace, drug_kb_iri_prefix, icd9_iri_prefix):
            _absolute(each)
        self.namespace = namespace
        self.drug_kb_iri_prefix = drug_kb_iri_prefix
        self.icd9_iri_prefix = icd9_iri_prefix



class PddGraph(object):
    """
    Set of RDF triples about patients, the drugs they were prescribed
    and the diseases they were diagnosed with. Duplicates collapse.
    """

    def __init__(self, namespace=DEFAULT_NAMESPACE, triples=None):
        self._namespace = namespace
        self._vocabulary = Vocabulary(namespace)
        self._graph = Graph()
        for each in triples or []:
            self.add(each)


    @property
    def namespace(self):
        return self._namespace


    @property
    def vocabulary(self):
        return self._vocabulary


    def add(self, triple):
        subject, predicate, _ = triple
        if not isinstance(subject, URIRef) or not isinstance(predicate, URIRef):
            raise InvalidIri(triple)
        self._graph.add(triple)


    def triples(self, pattern=(None, None, None)):
        return self._graph.triples(pattern)


    def subjects_of_type(self, kind):
        return set(self._graph.subjects(RDF.type, kind))


    def objects(self, subject, predicate):
        return set(self._graph.objects(subject, predicate))


    def __len__(self):
        return len(self._graph)


    def __iter__(self):
        return iter(self._graph)


    def __contains__(self, triple):
        return triple in self._graph


    def __eq__(self, other):
        if not isinstance(other, PddGraph):
            return False
        return set(self) == set(other)


    def __ne__(self, other):
        return not self == other



def build_graph(patients, prescriptions, diagnoses, drug_decisions,
                disease_decisions, settings=None):
    settings = settings or GraphSettings()
    namespace = settings.namespace
    graph = PddGraph(namespace)
    vocabulary = graph.vocabulary

    for each_patient in patients:
        patient = mint_patient_iri(each_patient.patient_id, namespace)
        graph.add((patient, RDF.type, vocabulary.patient))
        for name, value in each_patient.demographics:
            graph.add((patient, vocabulary.attribute(name), Literal(value)))

    for each in prescriptions:
        decision = drug_decisions.get(each.drug_name_raw)
        if decision is None:
            raise MissingDecision("drug", each.drug_name_raw)
        patient = mint_patient_iri(each.patient_id, namespace)
        drug = mint_drug_iri(each.drug_name_raw, namespace)
        graph.add((patient, vocabulary.prescribed, drug))
        graph.add((drug, RDF.type, vocabulary.drug))
        if decision.is_linked:
            target = _absolute(settings.drug_kb_iri_prefix + _encode(decision.kb_id))
            graph.add((drug, OWL.sameAs, target))

    for each in diagnoses:
        decision = disease_decisions.get(normalize_icd9(each.icd9_code_raw))
        if decision is None:
            raise MissingDecision("ICD-9 code", each.icd9_code_raw)
        patient = mint_patient_iri(each.patient_id, namespace)
        disease = mint_disease_iri(each.icd9_code_raw, namespace)
        graph.add((patient, vocabulary.diagnosed, disease))
        graph.add((disease, RDF.type, vocabulary.disease))
        if decision.is_linked:
            target = _absolute(settings.icd9_iri_prefix
                               + _encode(dotted_icd9(decision.code)))
            graph.add((disease, OWL.sameAs, target))

    LOGGER.info("PDD graph built: %d triples", len(graph))
    return graph



def serialize_ntriples(graph, path):
    with open(path, "w", encoding="utf-8", newline="\n") as stream:
        return NTriples().save_graph(graph, stream)



def parse_ntriples(path, namespace=DEFAULT_NAMESPACE):
    with open(path, "r", encoding="utf-8") as stream:
        return PddGraph(namespace, NTriples.load_graph_from(stream))



def query_triples(graph, subject=None, predicate=None, obj=None):
    return sorted(graph.triples((subject, predicate, obj)),
                  key=NTriples.line)
