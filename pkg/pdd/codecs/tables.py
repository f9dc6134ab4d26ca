#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.codecs.commons import Codec
from pdd.entities.records import PatientRecord, PrescriptionRecord, \
    DiagnosisRecord, Dosage
from pdd.entities.validation import InvalidInput, MissingColumn, Malformed
from pdd.normalize import normalize_icd9, InvalidCode

from collections import OrderedDict

from csv import DictReader, writer as csv_writer

from math import isinf, isnan



class CSV(Codec):
    """
    Reads and writes the EMR tables: patients, prescriptions and
    diagnoses.
    """

    def __init__(self):
        super(CSV, self).__init__()
        self._merged = 0


    @property
    def merged(self):
        """
        Number of patient rows folded into an earlier row with the same
        identifier during the last load.
        """
        return self._merged


    def load_patients_from(self, stream, path="<stream>"):
        self._start()
        self._merged = 0
        reader = DictReader(stream)
        self._expect(reader, path, Columns.PATIENTS)
        attributes = [each for each in reader.fieldnames
                      if each != Columns.PATIENT_ID]
        if any(not each.strip() for each in attributes):
            raise InvalidInput(path, [Malformed(path, "unnamed attribute column")])

        patients = OrderedDict()
        for row in reader:
            row_number = reader.line_num
            patient_id = self._cell(row, Columns.PATIENT_ID)
            if not patient_id:
                self._reject(path, row_number,
                             "The patient identifier is empty.",
                             "Every patient needs an identifier.")
                continue
            demographics = OrderedDict()
            if patient_id in patients:
                self._merged += 1
                demographics.update(patients[patient_id].demographics)
            for each_attribute in attributes:
                value = self._cell(row, each_attribute)
                if value:
                    demographics[each_attribute.strip()] = value
            patients[patient_id] = PatientRecord(patient_id,
                                                 list(demographics.items()))
        return list(patients.values())


    def load_prescriptions_from(self, stream, patients, path="<stream>"):
        self._start()
        reader = DictReader(stream)
        self._expect(reader, path, Columns.PRESCRIPTIONS)
        prescriptions = []
        for row in reader:
            row_number = reader.line_num
            patient_id = self._cell(row, Columns.PATIENT_ID)
            if patient_id not in patients:
                self._unknown_patient(path, row_number, patient_id)
                continue
            drug_name = self._cell(row, Columns.DRUG_NAME)
            if not drug_name:
                self._reject(path, row_number,
                             "The drug name is empty.",
                             "Every prescription names a drug.")
                continue
            try:
                dosage = self._dosage(row)
            except ValueError as error:
                self._reject(path, row_number,
                             "Invalid dosage: %s." % error,
                             "Dosages are positive decimals with a unit.")
                continue
            prescriptions.append(PrescriptionRecord(patient_id, drug_name, dosage))
        return prescriptions


    def _dosage(self, row):
        text = self._cell(row, Columns.DOSAGE_VALUE)
        if not text:
            return None
        value = float(text)
        if isnan(value) or isinf(value):
            raise ValueError("'%s' is not a finite number" % text)
        unit = self._cell(row, Columns.DOSAGE_UNIT)
        if not unit:
            raise ValueError("'%s' has no unit" % text)
        return Dosage(value, unit)


    def load_diagnoses_from(self, stream, patients, path="<stream>"):
        self._start()
        reader = DictReader(stream)
        self._expect(reader, path, Columns.DIAGNOSES)
        diagnoses = []
        for row in reader:
            row_number = reader.line_num
            patient_id = self._cell(row, Columns.PATIENT_ID)
            if patient_id not in patients:
                self._unknown_patient(path, row_number, patient_id)
                continue
            code = self._cell(row, Columns.ICD9_CODE)
            try:
                normalize_icd9(code)
            except InvalidCode:
                self._reject(path, row_number,
                             "The ICD-9 code '%s' is empty." % code,
                             "Every diagnosis carries a code.")
                continue
            diagnoses.append(DiagnosisRecord(patient_id, code))
        return diagnoses


    def _unknown_patient(self, path, row_number, patient_id):
        self._reject(path, row_number,
                     "Unknown patient '%s'." % patient_id,
                     "The patient must be listed in the patients table.")


    @staticmethod
    def _expect(reader, path, columns):
        found = reader.fieldnames or []
        for each_column in columns:
            if each_column not in found:
                raise InvalidInput(path, [MissingColumn(each_column, columns)])


    @staticmethod
    def _cell(row, column):
        return (row.get(column) or "").strip()


    @staticmethod
    def save_patients(patients, stream):
        attributes = []
        for each_patient in patients:
            for name, _ in each_patient.demographics:
                if name not in attributes:
                    attributes.append(name)
        output = csv_writer(stream, lineterminator="\n")
        output.writerow([Columns.PATIENT_ID] + attributes)
        for each_patient in patients:
            values = dict(each_patient.demographics)
            output.writerow([each_patient.patient_id] +
                            [values.get(each, "") for each in attributes])


    @staticmethod
    def save_prescriptions(prescriptions, stream):
        output = csv_writer(stream, lineterminator="\n")
        output.writerow(Columns.PRESCRIPTIONS)
        for each in prescriptions:
            dosage = each.dosage
            output.writerow([each.patient_id,
                             each.drug_name_raw,
                             repr(dosage.value) if dosage else "",
                             dosage.unit if dosage else ""])


    @staticmethod
    def save_diagnoses(diagnoses, stream):
        output = csv_writer(stream, lineterminator="\n")
        output.writerow(Columns.DIAGNOSES)
        for each in diagnoses:
            output.writerow([each.patient_id, each.icd9_code_raw])


    @staticmethod
    def save_trace(trace, stream):
        output = csv_writer(stream, lineterminator="\n")
        output.writerow(["iteration", "log_likelihood"])
        for iteration, log_likelihood in enumerate(trace, 1):
            output.writerow([iteration, repr(log_likelihood)])



class Columns:

    PATIENT_ID = "patient_id"
    DRUG_NAME = "drug_name"
    DOSAGE_VALUE = "dosage_value"
    DOSAGE_UNIT = "dosage_unit"
    ICD9_CODE = "icd9_code"

    PATIENTS = [PATIENT_ID]
    PRESCRIPTIONS = [PATIENT_ID, DRUG_NAME, DOSAGE_VALUE, DOSAGE_UNIT]
    DIAGNOSES = [PATIENT_ID, ICD9_CODE]
