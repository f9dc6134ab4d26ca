#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.enm import log_score, has_lexical_support, align, unknown_words, \
    UNKNOWN_WORD_FLOOR
from pdd.entities.validation import InvalidData
from pdd.normalize import tokenize_name, normalize_icd9, InvalidMention

from collections import OrderedDict

from heapq import nsmallest

from logging import getLogger

from math import exp, log



LOGGER = getLogger(__name__)



class EmptyKnowledgeBase(InvalidData):


    def __init__(self):
        super(EmptyKnowledgeBase, self).__init__(
            "The drug knowledge base is empty")



class Rule:

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"



class RuleAudit(object):
    """
    How one candidate fared: its score and the verdict of each rule.
    """

    def __init__(self, kb_id, rule1, rule2, score):
        self._kb_id = kb_id
        self._rule1 = rule1
        self._rule2 = rule2
        self._score = score


    @property
    def kb_id(self):
        return self._kb_id


    @property
    def rule1(self):
        return self._rule1


    @property
    def rule2(self):
        return self._rule2


    @property
    def score(self):
        return self._score


    @property
    def survives(self):
        return Rule.FAIL not in (self._rule1, self._rule2)


    def __eq__(self, other):
        if not isinstance(other, RuleAudit):
            return False
        return (self._kb_id, self._rule1, self._rule2, self._score) == \
            (other.kb_id, other.rule1, other.rule2, other.score)


    def __repr__(self):
        return "RuleAudit(%r, %r, %r, %r)" % \
            (self._kb_id, self._rule1, self._rule2, self._score)



class LinkDecision(object):

    LINKED = "linked"
    UNLINKED = "unlinked"

    ALL_CANDIDATES_FAILED = "all candidates failed rules"
    BELOW_SCORE_FLOOR = "below score floor"
    NO_LEXICAL_SUPPORT = "no lexical support"
    NO_TOKEN = "mention has no token"


    @staticmethod
    def linked(mention_raw, kb_id, score, rule_audit, alignment=None):
        return LinkDecision(mention_raw, LinkDecision.LINKED, kb_id, score,
                            None, rule_audit, alignment)


    @staticmethod
    def unlinked(mention_raw, reason, rule_audit):
        return LinkDecision(mention_raw, LinkDecision.UNLINKED, None, None,
                            reason, rule_audit)


    def __init__(self, mention_raw, outcome, kb_id, score, reason,
                 rule_audit, alignment=None):
        self._mention_raw = mention_raw
        self._outcome = outcome
        self._kb_id = kb_id
        self._score = score
        self._reason = reason
        self._rule_audit = list(rule_audit)
        self._alignment = [tuple(each) for each in alignment or []]


    @property
    def mention_raw(self):
        return self._mention_raw


    @property
    def outcome(self):
        return self._outcome


    @property
    def is_linked(self):
        return self._outcome == self.LINKED


    @property
    def kb_id(self):
        return self._kb_id


    @property
    def score(self):
        return self._score


    @property
    def reason(self):
        return self._reason


    @property
    def rule_audit(self):
        return list(self._rule_audit)


    @property
    def alignment(self):
        return list(self._alignment)


    def _key(self):
        return (self._mention_raw, self._outcome, self._kb_id, self._score,
                self._reason, self._rule_audit, self._alignment)


    def __eq__(self, other):
        if not isinstance(other, LinkDecision):
            return False
        return self._key() == other._key()


    def __ne__(self, other):
        return not self == other


    def __repr__(self):
        if self.is_linked:
            return "LinkDecision(%r -> %r, %r)" % \
                (self._mention_raw, self._kb_id, self._score)
        return "LinkDecision(%r unlinked: %s)" % \
            (self._mention_raw, self._reason)



class DiseaseDecision(object):
    """
    The outcome for one normalized ICD-9 code, whatever the spellings
    the diagnoses use for it ("995.92", "99592").
    """

    LINKED = "linked"
    UNLINKED = "unlinked"


    def __init__(self, code, linked, spellings=None):
        self._code = normalize_icd9(code)
        self._linked = linked
        self._spellings = tuple(sorted(set(spellings or [code])))


    @property
    def spellings(self):
        return self._spellings


    @property
    def code(self):
        return self._code


    @property
    def is_linked(self):
        return self._linked


    def __eq__(self, other):
        if not isinstance(other, DiseaseDecision):
            return False
        return (self._code, self._linked, self._spellings) == \
            (other.code, other.is_linked, other.spellings)


    def __repr__(self):
        return "DiseaseDecision(%r, %s)" % \
            (self._code, self.LINKED if self._linked else self.UNLINKED)



class PatientContext(object):
    """
    Who took which drug mention, and what each patient was diagnosed
    with (normalized codes).
    """

    def __init__(self, diagnoses_by_patient, patients_by_drug):
        self._diagnoses = {patient: frozenset(codes)
                           for patient, codes in diagnoses_by_patient.items()}
        self._patients = {drug: frozenset(patients)
                          for drug, patients in patients_by_drug.items()}


    @staticmethod
    def from_records(prescriptions, diagnoses):
        diagnoses_by_patient = {}
        for each in diagnoses:
            diagnoses_by_patient.setdefault(each.patient_id, set()).add(
                normalize_icd9(each.icd9_code_raw))
        patients_by_drug = {}
        for each in prescriptions:
            patients_by_drug.setdefault(each.drug_name_raw, set()).add(
                each.patient_id)
        return PatientContext(diagnoses_by_patient, patients_by_drug)


    def diagnoses_of(self, patient_id):
        return self._diagnoses.get(patient_id, frozenset())


    def patients_taking(self, mention_raw):
        return self._patients.get(mention_raw, frozenset())



class LinkerSettings(object):


    def __init__(self, k=50, score_floor=1e-12, dosage_tolerance=0.05,
                 require_lexical_support=True):
        self.k = k
        self.score_floor = score_floor
        self.dosage_tolerance = dosage_tolerance
        self.require_lexical_support = require_lexical_support



def _rank(mention, kb, table, k, epsilon=None):
    if not kb:
        raise EmptyKnowledgeBase()
    if k < 1:
        raise ValueError("k must be at least 1")
    scored = ((log_score(mention, each.tokens, table, epsilon), each)
              for each in kb if len(each.tokens))
    return nsmallest(k, scored, key=lambda pair: (-pair[0], pair[1].kb_id))



def generate_candidates(mention, kb, table, k):
    return [(entry.kb_id, exp(value))
            for value, entry in _rank(mention, kb, table, k)]



def check_rule1(candidate, mention_raw, ctx):
    """
    Some patient who took the mentioned drug was diagnosed with one of
    the candidate's indications.
    """
    if not candidate.indications:
        return Rule.SKIPPED
    takers = ctx.patients_taking(mention_raw)
    if not takers:
        return Rule.SKIPPED
    for each_patient in takers:
        if ctx.diagnoses_of(each_patient) & candidate.indications:
            return Rule.PASS
    return Rule.FAIL



def check_rule2(candidate, prescriptions, tolerance=0.05):
    """
    Some prescribed dosage agrees with one of the candidate's standard
    dosages.
    """
    if not candidate.standard_dosages:
        return Rule.SKIPPED
    dosages = [each.dosage for each in prescriptions if each.dosage]
    if not dosages:
        return Rule.SKIPPED
    for each_dosage in dosages:
        for each_standard in candidate.standard_dosages:
            if each_dosage.agrees_with(each_standard, tolerance):
                return Rule.PASS
    return Rule.FAIL



def link_drug(mention_raw, kb, table, ctx, prescriptions, k=50,
              score_floor=1e-12, dosage_tolerance=0.05,
              require_lexical_support=True, epsilon=None):
    mention = tokenize_name(mention_raw)
    if not len(mention):
        raise InvalidMention(mention_raw)
    epsilon = table.epsilon if epsilon is None else epsilon

    audit = []
    survivors = []
    for value, entry in _rank(mention, kb, table, k, epsilon):
        verdict = RuleAudit(entry.kb_id,
                            check_rule1(entry, mention_raw, ctx),
                            check_rule2(entry, prescriptions, dosage_tolerance),
                            exp(value))
        audit.append(verdict)
        if verdict.survives:
            survivors.append((value, entry))

    if not survivors:
        return LinkDecision.unlinked(mention_raw,
                                     LinkDecision.ALL_CANDIDATES_FAILED,
                                     audit)

    # The floor applies to P(m|d) / eps, so that eps never changes a decision.
    # Words the table never saw weigh the same on every candidate: their
    # floor is left out.
    value, best = survivors[0]
    evidence = value - log(epsilon) \
        - unknown_words(mention, table) * log(UNKNOWN_WORD_FLOOR)
    if score_floor > 0 and evidence < log(score_floor):
        return LinkDecision.unlinked(mention_raw,
                                     LinkDecision.BELOW_SCORE_FLOOR,
                                     audit)

    if require_lexical_support \
       and not has_lexical_support(mention, best.tokens, table):
        return LinkDecision.unlinked(mention_raw,
                                     LinkDecision.NO_LEXICAL_SUPPORT,
                                     audit)

    return LinkDecision.linked(mention_raw, best.kb_id, exp(value), audit,
                               align(mention, best.tokens, table))



def link_drugs(prescriptions, kb, table, ctx, settings=None):
    """
    Link every distinct drug mention of the prescriptions, in mention
    order.
    """
    settings = settings or LinkerSettings()
    by_mention = OrderedDict()
    for each in prescriptions:
        by_mention.setdefault(each.drug_name_raw, []).append(each)

    decisions = OrderedDict()
    for mention in sorted(by_mention):
        try:
            decision = link_drug(mention, kb, table, ctx, by_mention[mention],
                                 k=settings.k,
                                 score_floor=settings.score_floor,
                                 dosage_tolerance=settings.dosage_tolerance,
                                 require_lexical_support=settings.require_lexical_support)
        except InvalidMention:
            LOGGER.warning("Drug mention '%s' has no token", mention)
            decision = LinkDecision.unlinked(mention, LinkDecision.NO_TOKEN, [])
        LOGGER.debug("%r", decision)
        decisions[mention] = decision
    return decisions



def link_disease(icd9_raw, ontology):
    code = normalize_icd9(icd9_raw)
    return DiseaseDecision(icd9_raw, code in ontology)



def link_diseases(diagnoses, ontology):
    """
    One decision per normalized code, keyed by that code.
    """
    spellings = {}
    for each in diagnoses:
        spellings.setdefault(normalize_icd9(each.icd9_code_raw), set()).add(
            each.icd9_code_raw)
    decisions = OrderedDict()
    for code in sorted(spellings):
        decisions[code] = DiseaseDecision(code, code in ontology,
                                          spellings[code])
    return decisions
