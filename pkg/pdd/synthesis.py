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
Synthetic EMR corpora with known gold links, standing in for
access-controlled hospital data. The 'clean' profile mentions every
drug by its canonical name; the 'mimic_like' profile writes drugs the
way hospital prescription tables do: with packaging and strength words
appended, tokens reordered, brand names instead of the canonical one,
and a few products (normal saline) that no drug knowledge base lists.
"""

from pdd.entities.records import PatientRecord, PrescriptionRecord, \
    DiagnosisRecord, DrugKbEntry, Dosage, Icd9Ontology
from pdd.entities.validation import InvalidConfigurationValue
from pdd.normalize import normalize_icd9, dotted_icd9

from collections import OrderedDict

from itertools import product

from random import Random



class NoiseProfile:

    CLEAN = "clean"
    MIMIC_LIKE = "mimic_like"

    ALL = [CLEAN, MIMIC_LIKE]



INSIGNIFICANT_WORDS = ["10%", "200mg", "Glass Bottle", "Mini Bag Plus", "NS"]

# Strength words also occur in knowledge-base aliases; packaging words never do.
FORM_WORDS = ["10%", "200mg"]

SALINE_MENTIONS = ["NS", "1/2 NS", "NS (Mini Bag Plus)", "NS (Glass Bottle)"]

UNLINKABLE_CODES = ["71970", "NULL"]

SEPSIS = ("995.92", "Sepsis")

SALTS = ["Sodium", "Hydrochloride", "Sulfate", "Acetate", "Potassium", "Citrate"]

SYLLABLES = ["va", "lo", "xin", "me", "ra", "pril", "do", "zol", "ci", "ta",
             "fen", "ab", "tri", "mo", "quel", "pra", "sta", "tin", "ner",
             "gan", "lu", "bi", "cor", "den", "fa", "zi", "mab", "vir", "nol",
             "sar"]

# Distinct drug names the syllables can spell
MAX_DRUGS = len(set("".join(each) for length in [2, 3]
                    for each in product(SYLLABLES, repeat=length))
                - set(each.lower() for each in SALTS))

STANDARD_VALUES = [5, 10, 20, 25, 40, 50, 81, 100, 200, 250, 500]

UNITS = ["mg", "mg", "mg", "mcg", "ml"]

GENDERS = ["F", "M"]

FIRST_PATIENT_ID = 10000



class SyntheticCorpus(object):


    def __init__(self, patients, prescriptions, diagnoses, drug_kb,
                 ontology_entries, gold_links):
        self.patients = patients
        self.prescriptions = prescriptions
        self.diagnoses = diagnoses
        self.drug_kb = drug_kb
        self.ontology_entries = ontology_entries
        self.gold_links = gold_links


    @property
    def ontology(self):
        return Icd9Ontology((normalize_icd9(code), label)
                            for code, label in self.ontology_entries)



def generate_synthetic_corpus(seed, n_patients, n_kb_drugs,
                              noise_profile=NoiseProfile.CLEAN):
    if n_kb_drugs < 1:
        raise InvalidConfigurationValue("drugs", n_kb_drugs,
                                        "The knowledge base needs at least one drug.")
    if n_kb_drugs > MAX_DRUGS:
        raise InvalidConfigurationValue("drugs", n_kb_drugs,
                                        "At most %d drugs can be named." % MAX_DRUGS)
    if n_patients < 1:
        raise InvalidConfigurationValue("patients", n_patients,
                                        "The corpus needs at least one patient.")
    if noise_profile not in NoiseProfile.ALL:
        raise InvalidConfigurationValue("profile", noise_profile,
                                        "Use one of: %s." % ", ".join(NoiseProfile.ALL))
    return _Generator(Random(seed), noise_profile == NoiseProfile.MIMIC_LIKE) \
        .generate(n_patients, n_kb_drugs)



class _Generator(object):


    def __init__(self, random, noisy):
        self._random = random
        self._noisy = noisy
        self._stems = set(each.lower() for each in SALTS)


    def generate(self, n_patients, n_kb_drugs):
        ontology_entries = self._ontology(max(30, 2 * n_kb_drugs))
        codes = [code for code, _ in ontology_entries]
        drug_kb = [self._drug(index, codes) for index in range(1, n_kb_drugs + 1)]
        variants = self._mention_variants(drug_kb)

        patients = []
        prescriptions = []
        diagnoses = []
        gold = OrderedDict()
        for index in range(n_patients):
            patient_id = str(FIRST_PATIENT_ID + index)
            patients.append(PatientRecord(patient_id, [
                ("gender", self._random.choice(GENDERS)),
                ("age", str(self._random.randint(18, 90)))]))
            taken = self._random.sample(drug_kb,
                                        min(len(drug_kb), self._random.randint(1, 4)))
            codes_of_patient = []
            for each_drug in taken:
                mention = self._random.choice(variants[each_drug.kb_id])
                gold[mention] = each_drug.kb_id
                prescription = PrescriptionRecord(patient_id, mention,
                                                  self._dosage(each_drug))
                prescriptions.append(prescription)
                if self._noisy and self._random.random() < 0.1:
                    prescriptions.append(prescription)
                codes_of_patient.append(
                    self._random.choice(sorted(each_drug.indications)))
            for _ in range(self._random.randint(0, 2)):
                codes_of_patient.append(normalize_icd9(self._random.choice(codes)))

            if self._noisy and self._random.random() < 0.1:
                mention = self._random.choice(SALINE_MENTIONS)
                gold[mention] = None
                prescriptions.append(PrescriptionRecord(patient_id, mention))
            if self._noisy and self._random.random() < 0.05:
                codes_of_patient.append(self._random.choice(UNLINKABLE_CODES))

            for each_code in OrderedDict.fromkeys(codes_of_patient):
                diagnoses.append(DiagnosisRecord(patient_id,
                                                 self._written_code(each_code)))

        return SyntheticCorpus(patients, prescriptions, diagnoses, drug_kb,
                               ontology_entries, gold)


    def _ontology(self, size):
        entries = OrderedDict([SEPSIS])
        while len(entries) < size:
            code = "%03d.%d" % (self._random.randint(1, 999),
                                self._random.randint(0, 99))
            if normalize_icd9(code) in UNLINKABLE_CODES or code in entries:
                continue
            entries[code] = "Synthetic condition %s" % code
        return list(entries.items())


    def _stem(self):
        while True:
            length = self._random.randint(2, 3)
            stem = "".join(self._random.choice(SYLLABLES) for _ in range(length))
            if stem not in self._stems:
                self._stems.add(stem)
                return stem.capitalize()


    def _drug(self, index, codes):
        name = self._stem()
        if self._random.random() < 0.3:
            name += " " + self._random.choice(SALTS)
        aliases = [self._stem() for _ in range(self._random.randint(1, 2))]
        if self._random.random() < 0.5:
            aliases.append(name + " " + self._random.choice(FORM_WORDS))
        indications = self._random.sample(codes, self._random.randint(1, 2))
        unit = self._random.choice(UNITS)
        dosages = [Dosage(float(value), unit) for value in
                   self._random.sample(STANDARD_VALUES, self._random.randint(1, 2))]
        return DrugKbEntry("DB%05d" % index, name, aliases,
                           [normalize_icd9(each) for each in indications],
                           dosages)


    def _mention_variants(self, drug_kb):
        """
        The ways each drug is written in prescriptions. No string may
        stand for two different drugs.
        """
        owners = {}
        variants = OrderedDict()
        for each_drug in drug_kb:
            candidates = [each_drug.canonical_name]
            if self._noisy:
                candidates.extend(self._corruptions(each_drug))
            chosen = []
            for each in candidates:
                if owners.setdefault(each, each_drug.kb_id) == each_drug.kb_id \
                   and each not in chosen:
                    chosen.append(each)
            variants[each_drug.kb_id] = chosen
        return variants


    def _corruptions(self, drug):
        name = drug.canonical_name
        words = name.split()
        brands = sorted(each for each in drug.aliases
                        if not any(form in each for form in FORM_WORDS))
        corruptions = []
        for _ in range(self._random.randint(1, 3)):
            kind = self._random.choice(["insignificant", "reorder", "alias",
                                        "alias+insignificant"])
            if kind == "reorder" and len(words) > 1:
                shuffled = list(words)
                while shuffled == words:
                    self._random.shuffle(shuffled)
                corruptions.append(" ".join(shuffled))
            elif kind.startswith("alias") and brands:
                alias = self._random.choice(brands)
                if kind == "alias":
                    corruptions.append(alias)
                else:
                    corruptions.append(self._decorate(alias))
            else:
                corruptions.append(self._decorate(name))
        return corruptions


    def _decorate(self, name):
        word = self._random.choice(INSIGNIFICANT_WORDS)
        if " " in word or self._random.random() < 0.3:
            return "%s (%s)" % (name, word)
        return "%s %s" % (name, word)


    def _dosage(self, drug):
        if self._noisy and self._random.random() < 0.2:
            return None
        dosages = sorted(drug.standard_dosages, key=lambda d: (d.unit, d.value))
        return self._random.choice(dosages)


    def _written_code(self, code):
        if code in UNLINKABLE_CODES:
            return code
        if self._noisy and self._random.random() < 0.5:
            return dotted_icd9(code)
        return code
