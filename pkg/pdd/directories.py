#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.codecs.audit import Audit
from pdd.codecs.json import JSON
from pdd.codecs.tables import CSV
from pdd.enm import save_table
from pdd.graph import serialize_ntriples

from collections import OrderedDict

from json import dump as dump_json

from os import makedirs
from os.path import exists, isdir, join as join_paths, dirname



class Directory(object):


    def __init__(self, path):
        self._path = path


    @property
    def path(self):
        return self._path


    def path_to(self, file_name):
        return join_paths(self._path, file_name)


    def has_file(self, file_name):
        return exists(self.path_to(file_name))


    def content_of(self, file_name):
        with open(self.path_to(file_name), "r", encoding="utf-8") as stream:
            return stream.read()


    @staticmethod
    def _create(directory):
        if directory and not isdir(directory):
            makedirs(directory)


    def _open_for_writing(self, path):
        self._create(dirname(path))
        return open(path, "w", encoding="utf-8", newline="\n")



class OutputDirectory(Directory):
    """
    Where the pipeline stages leave their artifacts, under fixed names
    so that each stage finds the output of the previous one.
    """

    TABLE = "table.json"
    TRACE = "trace.csv"
    DRUG_LINKS = "links.jsonl"
    DISEASE_LINKS = "disease_links.jsonl"
    GRAPH = "pdd.nt"
    STATISTICS = "statistics.json"
    STATISTICS_TEXT = "statistics.txt"
    EVALUATION = "eval.json"
    EVALUATION_TEXT = "eval.txt"
    AUDIT_SAMPLE = "audit_sample.jsonl"


    def __init__(self, path):
        super(OutputDirectory, self).__init__(path)


    def save_table(self, table, path=None):
        path = path or self.path_to(self.TABLE)
        self._create(dirname(path))
        save_table(table, path)
        return path


    def save_trace(self, trace):
        path = self.path_to(self.TRACE)
        with self._open_for_writing(path) as stream:
            CSV.save_trace(trace, stream)
        return path


    def save_drug_decisions(self, decisions):
        path = self.path_to(self.DRUG_LINKS)
        with self._open_for_writing(path) as stream:
            Audit.save_decisions(decisions, stream)
        return path


    @property
    def drug_decisions(self):
        return self.path_to(self.DRUG_LINKS)


    def save_disease_decisions(self, decisions):
        path = self.path_to(self.DISEASE_LINKS)
        with self._open_for_writing(path) as stream:
            Audit.save_disease_decisions(decisions, stream)
        return path


    @property
    def disease_decisions(self):
        return self.path_to(self.DISEASE_LINKS)


    def save_graph(self, graph):
        path = self.path_to(self.GRAPH)
        self._create(self._path)
        return path, serialize_ntriples(graph, path)


    def save_statistics(self, statistics):
        return self._save_report(self.STATISTICS, self.STATISTICS_TEXT,
                                 statistics)


    def save_evaluation(self, report):
        return self._save_report(self.EVALUATION, self.EVALUATION_TEXT, report)


    def _save_report(self, json_file, text_file, report):
        path = self.path_to(json_file)
        with self._open_for_writing(path) as stream:
            JSON.save_report(report.as_dictionary(), stream)
        with self._open_for_writing(self.path_to(text_file)) as stream:
            stream.write(report.as_text())
        return path


    def save_audit_sample(self, decisions):
        path = self.path_to(self.AUDIT_SAMPLE)
        with self._open_for_writing(path) as stream:
            Audit.save_decisions(decisions, stream)
        return path



class CorpusDirectory(Directory):
    """
    A synthetic corpus on disk: the EMR tables, the drug knowledge base,
    the ontology, the gold links, and a configuration file that points
    at all of them.
    """

    PATIENTS = "patients.csv"
    PRESCRIPTIONS = "prescriptions.csv"
    DIAGNOSES = "diagnoses.csv"
    DRUG_KB = "drug_kb.json"
    ONTOLOGY = "icd9_ontology.json"
    GOLD = "gold.json"
    CONFIGURATION = "config.json"

    OUTPUT = "out"


    def save_corpus(self, corpus):
        with self._open_for_writing(self.path_to(self.PATIENTS)) as stream:
            CSV.save_patients(corpus.patients, stream)
        with self._open_for_writing(self.path_to(self.PRESCRIPTIONS)) as stream:
            CSV.save_prescriptions(corpus.prescriptions, stream)
        with self._open_for_writing(self.path_to(self.DIAGNOSES)) as stream:
            CSV.save_diagnoses(corpus.diagnoses, stream)
        with self._open_for_writing(self.path_to(self.DRUG_KB)) as stream:
            JSON.save_drug_kb(corpus.drug_kb, stream)
        with self._open_for_writing(self.path_to(self.ONTOLOGY)) as stream:
            JSON.save_ontology(corpus.ontology_entries, stream)
        with self._open_for_writing(self.path_to(self.GOLD)) as stream:
            JSON.save_gold(corpus.gold_links, stream)
        return self._save_configuration()


    def _save_configuration(self):
        configuration = OrderedDict([
            ("patients", self.PATIENTS),
            ("prescriptions", self.PRESCRIPTIONS),
            ("diagnoses", self.DIAGNOSES),
            ("drug_kb", self.DRUG_KB),
            ("ontology", self.ONTOLOGY),
            ("gold", self.GOLD),
            ("output", self.OUTPUT)
        ])
        path = self.path_to(self.CONFIGURATION)
        with self._open_for_writing(path) as stream:
            dump_json(configuration, stream, indent=2)
            stream.write("\n")
        return path
