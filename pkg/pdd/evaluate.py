#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.entities.validation import InvalidData
from pdd.graph import mint_drug_iri

from rdflib.namespace import OWL

from collections import Counter, OrderedDict

from random import Random



class MissingGold(InvalidData):


    def __init__(self, mention):
        super(MissingGold, self).__init__(
            "The gold links do not cover the mention '%s'" % mention)
        self._mention = mention


    @property
    def mention(self):
        return self._mention



class Verdict:

    TRUE_POSITIVE = "true_positive"
    FALSE_POSITIVE = "false_positive"
    FALSE_NEGATIVE = "false_negative"
    TRUE_NEGATIVE = "true_negative"

    ALL = [TRUE_POSITIVE, FALSE_POSITIVE, FALSE_NEGATIVE, TRUE_NEGATIVE]



class EvalReport(object):
    """
    Per-mention verdicts against gold links. Precision and recall are
    None when their denominator is zero.
    """

    def __init__(self, verdicts):
        self._verdicts = list(verdicts)
        self._counts = Counter(verdict for _, verdict, _, _ in self._verdicts)


    @property
    def verdicts(self):
        return list(self._verdicts)


    @property
    def true_positive(self):
        return self._counts[Verdict.TRUE_POSITIVE]


    @property
    def false_positive(self):
        return self._counts[Verdict.FALSE_POSITIVE]


    @property
    def false_negative(self):
        return self._counts[Verdict.FALSE_NEGATIVE]


    @property
    def true_negative(self):
        return self._counts[Verdict.TRUE_NEGATIVE]


    @property
    def precision(self):
        return self._ratio(self.true_positive,
                           self.true_positive + self.false_positive)


    @property
    def recall(self):
        return self._ratio(self.true_positive,
                           self.true_positive + self.false_negative)


    @staticmethod
    def _ratio(numerator, denominator):
        if denominator == 0:
            return None
        return float(numerator) / denominator


    def as_dictionary(self):
        data = OrderedDict()
        for each in Verdict.ALL:
            data[each] = self._counts[each]
        data["precision"] = self.precision
        data["recall"] = self.recall
        data["verdicts"] = [OrderedDict([("mention", mention),
                                         ("verdict", verdict),
                                         ("predicted", predicted),
                                         ("expected", expected)])
                            for mention, verdict, predicted, expected
                            in self._verdicts]
        return data


    def as_text(self):
        rows = [(name.replace("_", " "), str(self._counts[name]))
                for name in Verdict.ALL]
        rows.append(("precision", _percent(self.precision)))
        rows.append(("recall", _percent(self.recall)))
        return _tabulate(("", "#Mentions"), rows)



def evaluate_links(decisions, gold):
    verdicts = []
    for mention in sorted(decisions):
        if mention not in gold:
            raise MissingGold(mention)
        decision = decisions[mention]
        expected = gold[mention]
        if decision.is_linked:
            verdict = Verdict.TRUE_POSITIVE if decision.kb_id == expected \
                      else Verdict.FALSE_POSITIVE
        else:
            verdict = Verdict.FALSE_NEGATIVE if expected is not None \
                      else Verdict.TRUE_NEGATIVE
        verdicts.append((mention, verdict, decision.kb_id, expected))
    return EvalReport(verdicts)



def sample_decisions(decisions, size, seed=0):
    """
    A reproducible random sample of the linked decisions, for manual
    checking.
    """
    linked = [decisions[each] for each in sorted(decisions)
              if decisions[each].is_linked]
    chosen = Random(seed).sample(linked, min(size, len(linked)))
    return sorted(chosen, key=lambda decision: decision.mention_raw)



class Statistics(object):


    def __init__(self, rows, extras):
        self._rows = rows
        self._extras = extras


    @property
    def rows(self):
        """
        (name, overall, linked) triplets; 'linked' is None where it
        does not apply.
        """
        return list(self._rows)


    def row(self, name):
        for each in self._rows:
            if each[0] == name:
                return each
        raise KeyError(name)


    def __getitem__(self, key):
        return self._extras[key]


    def as_dictionary(self):
        data = OrderedDict()
        for name, overall, linked in self._rows:
            data[name] = OrderedDict([("overall", overall), ("linked", linked)])
        for key, value in self._extras.items():
            data[key] = value
        return data


    def as_text(self):
        rows = [(name, "{:,}".format(overall),
                 "" if linked is None else "{:,}".format(linked))
                for name, overall, linked in self._rows]
        text = _tabulate(("", "#Overall", "#Linked to KG"), rows)
        text += "\n%s distinct knowledge-base drugs are linked\n" % \
                "{:,}".format(self._extras["distinct_kb_drugs"])
        text += "%s of the patient-drug triples have a linked drug\n" % \
                _percent(self._extras["linked_drug_triple_share"])
        text += "%.1f ICD-9 codes per patient on average\n" % \
                self._extras["mean_codes_per_patient"]
        unlinked = self._extras["top_unlinked_drugs"]
        if unlinked:
            text += "\nMost prescribed unlinked drugs:\n"
            text += _tabulate(("Drug", "#Patients"),
                              [(each["mention"], str(each["patients"]))
                               for each in unlinked])
        return text


class Rows:

    PATIENTS = "patients"
    DRUGS = "drugs"
    DISEASES = "diseases"
    DEMOGRAPHICS = "demographics"
    PATIENTS_DRUGS = "patients-drugs"
    PATIENTS_DISEASES = "patients-diseases"



def dataset_statistics(graph, decisions, top_unlinked=10):
    vocabulary = graph.vocabulary
    patients = graph.subjects_of_type(vocabulary.patient)
    drugs = graph.subjects_of_type(vocabulary.drug)
    diseases = graph.subjects_of_type(vocabulary.disease)
    linked_drugs = set(each for each in drugs if graph.objects(each, OWL.sameAs))
    linked_diseases = set(each for each in diseases
                          if graph.objects(each, OWL.sameAs))

    prescribed = list(graph.triples((None, vocabulary.prescribed, None)))
    diagnosed = list(graph.triples((None, vocabulary.diagnosed, None)))
    demographics = sum(1 for subject, predicate, _ in graph.triples()
                       if subject in patients
                       and predicate not in vocabulary.structural)

    rows = [
        (Rows.PATIENTS, len(patients), None),
        (Rows.DRUGS, len(drugs), len(linked_drugs)),
        (Rows.DISEASES, len(diseases), len(linked_diseases)),
        (Rows.DEMOGRAPHICS, demographics, None),
        (Rows.PATIENTS_DRUGS, len(prescribed),
         sum(1 for _, _, drug in prescribed if drug in linked_drugs)),
        (Rows.PATIENTS_DISEASES, len(diagnosed),
         sum(1 for _, _, disease in diagnosed if disease in linked_diseases)),
    ]

    extras = OrderedDict()
    extras["mentions"] = len(decisions)
    extras["linked_mentions"] = sum(1 for each in decisions.values()
                                    if each.is_linked)
    extras["distinct_kb_drugs"] = len(set(target for each in linked_drugs
                                          for target in graph.objects(each, OWL.sameAs)))
    extras["linked_drug_triple_share"] = \
        float(rows[4][2]) / len(prescribed) if prescribed else None
    extras.update(_codes_per_patient(patients, diagnosed))
    extras["top_unlinked_drugs"] = _top_unlinked(graph, decisions,
                                                 prescribed, top_unlinked)
    return Statistics(rows, extras)



def _codes_per_patient(patients, diagnosed):
    codes = Counter(patient for patient, _, _ in diagnosed)
    histogram = Counter(codes[each] for each in patients)
    mean = float(sum(codes[each] for each in patients)) / len(patients) \
           if patients else 0.
    return OrderedDict([
        ("mean_codes_per_patient", mean),
        ("codes_per_patient", OrderedDict((str(count), histogram[count])
                                          for count in sorted(histogram)))])



def _top_unlinked(graph, decisions, prescribed, limit):
    takers = Counter(drug for _, _, drug in prescribed)
    ranking = []
    for mention, decision in decisions.items():
        if decision.is_linked:
            continue
        count = takers[mint_drug_iri(mention, graph.namespace)]
        if count:
            ranking.append((-count, mention))
    return [OrderedDict([("mention", mention), ("patients", -count)])
            for count, mention in sorted(ranking)[:limit]]



def _percent(ratio):
    if ratio is None:
        return "n/a"
    return "%.1f%%" % (100. * ratio)



def _tabulate(header, rows):
    table = [tuple(header)] + [tuple(each) for each in rows]
    widths = [max(len(row[column]) for row in table)
              for column in range(len(header))]
    lines = []
    for index, row in enumerate(table):
        cells = [row[0].ljust(widths[0])] + \
                [cell.rjust(width) for cell, width in zip(row[1:], widths[1:])]
        lines.append(" | ".join(cells).rstrip())
        if index == 0:
            lines.append("-+-".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"
