#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.normalize import tokenize_name



class Record(object):
    """
    Value semantics for the immutable records below: equality, hashing
    and printing all derive from the tuple returned by '_key'.
    """

    def _key(self):
        raise NotImplementedError()


    def __eq__(self, other):
        if type(other) is not type(self):
            return False
        return self._key() == other._key()


    def __ne__(self, other):
        return not self == other


    def __hash__(self):
        return hash(self._key())


    def __repr__(self):
        return "%s%r" % (type(self).__name__, self._key())



class PatientRecord(Record):


    def __init__(self, patient_id, demographics=None):
        self._patient_id = patient_id
        self._demographics = tuple(demographics or [])


    @property
    def patient_id(self):
        return self._patient_id


    @property
    def demographics(self):
        return self._demographics


    def _key(self):
        return (self._patient_id, self._demographics)



class Dosage(Record):


    def __init__(self, value, unit):
        if not value > 0:
            raise ValueError("dosage must be positive, got %r" % value)
        self._value = value
        self._unit = unit


    @property
    def value(self):
        return self._value


    @property
    def unit(self):
        return self._unit


    def agrees_with(self, standard, tolerance):
        """
        Same unit (case insensitive) and a value within the given
        fraction of the standard value.
        """
        if self._unit.lower() != standard.unit.lower():
            return False
        return abs(self._value - standard.value) <= tolerance * standard.value


    def _key(self):
        return (self._value, self._unit)



class PrescriptionRecord(Record):


    def __init__(self, patient_id, drug_name_raw, dosage=None):
        self._patient_id = patient_id
        self._drug_name_raw = drug_name_raw
        self._dosage = dosage


    @property
    def patient_id(self):
        return self._patient_id


    @property
    def drug_name_raw(self):
        return self._drug_name_raw


    @property
    def dosage(self):
        return self._dosage


    def _key(self):
        return (self._patient_id, self._drug_name_raw, self._dosage)



class DiagnosisRecord(Record):


    def __init__(self, patient_id, icd9_code_raw):
        self._patient_id = patient_id
        self._icd9_code_raw = icd9_code_raw


    @property
    def patient_id(self):
        return self._patient_id


    @property
    def icd9_code_raw(self):
        return self._icd9_code_raw


    def _key(self):
        return (self._patient_id, self._icd9_code_raw)



class DrugKbEntry(Record):
    """
    One drug of the knowledge base. The canonical name is never listed
    among the aliases.
    """

    def __init__(self, kb_id, canonical_name, aliases=None,
                 indications=None, standard_dosages=None):
        self._kb_id = kb_id
        self._canonical_name = canonical_name
        self._aliases = frozenset(aliases or []) - {canonical_name}
        self._indications = frozenset(indications or [])
        self._standard_dosages = frozenset(standard_dosages or [])
        self._tokens = tokenize_name(canonical_name)


    @property
    def kb_id(self):
        return self._kb_id


    @property
    def canonical_name(self):
        return self._canonical_name


    @property
    def tokens(self):
        return self._tokens


    @property
    def aliases(self):
        return self._aliases


    @property
    def indications(self):
        return self._indications


    @property
    def standard_dosages(self):
        return self._standard_dosages


    def _key(self):
        return (self._kb_id,
                self._canonical_name,
                tuple(sorted(self._aliases)),
                tuple(sorted(self._indications)),
                tuple(sorted(self._standard_dosages,
                             key=lambda d: (d.unit, d.value))))



class Icd9Ontology(Record):


    def __init__(self, labels):
        self._labels = dict(labels)


    @property
    def codes(self):
        return frozenset(self._labels)


    def label_of(self, code):
        return self._labels.get(code)


    def __contains__(self, code):
        return code in self._labels


    def __len__(self):
        return len(self._labels)


    def _key(self):
        return tuple(sorted(self._labels.items()))
