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
from pdd.entities.validation import MissingInput

from logging import getLogger

from os.path import isfile



LOGGER = getLogger(__name__)



class LoadResult(object):
    """
    The records accepted from a file, in file order, and the rows that
    were refused. Iterates over the records.
    """

    def __init__(self, path, records, rejects, merged=0):
        self._path = path
        self._records = list(records)
        self._rejects = list(rejects)
        self._merged = merged


    @property
    def path(self):
        return self._path


    @property
    def records(self):
        return list(self._records)


    @property
    def rejects(self):
        return list(self._rejects)


    @property
    def merged(self):
        return self._merged


    @property
    def rows(self):
        return len(self._records) + len(self._rejects) + self._merged


    def __iter__(self):
        return iter(self._records)


    def __len__(self):
        return len(self._records)


    def __getitem__(self, index):
        return self._records[index]



def _open(path):
    if not isfile(path):
        raise MissingInput(path)
    return open(path, "r", encoding="utf-8", newline="")



def load_patients(path):
    codec = CSV()
    with _open(path) as stream:
        patients = codec.load_patients_from(stream, path)
    LOGGER.info("%d patient(s) loaded from '%s'", len(patients), path)
    return LoadResult(path, patients, codec.rejects, codec.merged)



def _identifiers(patients):
    return set(each if isinstance(each, str) else each.patient_id
               for each in patients)



def load_prescriptions(path, patients):
    codec = CSV()
    with _open(path) as stream:
        prescriptions = codec.load_prescriptions_from(stream,
                                                      _identifiers(patients),
                                                      path)
    LOGGER.info("%d prescription(s) loaded from '%s'", len(prescriptions), path)
    return LoadResult(path, prescriptions, codec.rejects)



def load_diagnoses(path, patients):
    codec = CSV()
    with _open(path) as stream:
        diagnoses = codec.load_diagnoses_from(stream, _identifiers(patients), path)
    LOGGER.info("%d diagnosis(es) loaded from '%s'", len(diagnoses), path)
    return LoadResult(path, diagnoses, codec.rejects)



def load_drug_kb(path):
    with _open(path) as stream:
        entries = JSON().load_drug_kb_from(stream, path)
    LOGGER.info("%d drug(s) loaded from '%s'", len(entries), path)
    return entries



def load_ontology(path):
    with _open(path) as stream:
        ontology = JSON().load_ontology_from(stream, path)
    LOGGER.info("%d ICD-9 code(s) loaded from '%s'", len(ontology), path)
    return ontology



def load_gold(path):
    with _open(path) as stream:
        return JSON().load_gold_from(stream, path)



def load_drug_decisions(path):
    with _open(path) as stream:
        decisions = Audit().load_decisions_from(stream, path)
    return dict((each.mention_raw, each) for each in decisions)



def load_disease_decisions(path):
    with _open(path) as stream:
        decisions = Audit().load_disease_decisions_from(stream, path)
    return dict((each.code, each) for each in decisions)
