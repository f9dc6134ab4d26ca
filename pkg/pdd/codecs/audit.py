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
from pdd.entities.validation import InvalidInput, Malformed
from pdd.linker import LinkDecision, RuleAudit, DiseaseDecision
from pdd.normalize import InvalidCode

from json import loads, dumps



class Audit(Codec):
    """
    JSON-lines files of link decisions, one object per drug mention (or
    per ICD-9 code), keys sorted.
    """

    @staticmethod
    def save_decisions(decisions, stream):
        for each in decisions:
            stream.write(dumps(Audit._as_dictionary(each), sort_keys=True) + "\n")


    @staticmethod
    def _as_dictionary(decision):
        data = {Keys.MENTION: decision.mention_raw,
                Keys.OUTCOME: decision.outcome}
        if decision.is_linked:
            data[Keys.KB_ID] = decision.kb_id
            data[Keys.SCORE] = decision.score
            data[Keys.ALIGNMENT] = [
                {Keys.WORD: word, Keys.SOURCE: source, Keys.MODE: mode}
                for word, source, mode in decision.alignment]
        else:
            data[Keys.REASON] = decision.reason
        data[Keys.AUDIT] = [{Keys.KB_ID: each.kb_id,
                             Keys.RULE1: each.rule1,
                             Keys.RULE2: each.rule2,
                             Keys.SCORE: each.score}
                            for each in decision.rule_audit]
        return data


    def load_decisions_from(self, stream, path="<stream>"):
        self._start()
        decisions = []
        for line_number, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                decisions.append(self._as_decision(loads(line)))
            except (KeyError, TypeError, ValueError) as error:
                raise InvalidInput(path, [Malformed("line %d" % line_number,
                                                    str(error))])
        return decisions


    @staticmethod
    def _as_decision(data):
        audit = [RuleAudit(each[Keys.KB_ID], each[Keys.RULE1],
                           each[Keys.RULE2], each[Keys.SCORE])
                 for each in data[Keys.AUDIT]]
        if data[Keys.OUTCOME] == LinkDecision.LINKED:
            alignment = [(each[Keys.WORD], each[Keys.SOURCE], each[Keys.MODE])
                         for each in data.get(Keys.ALIGNMENT, [])]
            return LinkDecision.linked(data[Keys.MENTION], data[Keys.KB_ID],
                                       data[Keys.SCORE], audit, alignment)
        if data[Keys.OUTCOME] == LinkDecision.UNLINKED:
            return LinkDecision.unlinked(data[Keys.MENTION], data[Keys.REASON],
                                         audit)
        raise ValueError("unknown outcome '%s'" % data[Keys.OUTCOME])


    @staticmethod
    def save_disease_decisions(decisions, stream):
        for each in decisions:
            data = {Keys.CODE: each.code,
                    Keys.SPELLINGS: list(each.spellings),
                    Keys.OUTCOME: DiseaseDecision.LINKED if each.is_linked
                                  else DiseaseDecision.UNLINKED}
            stream.write(dumps(data, sort_keys=True) + "\n")


    def load_disease_decisions_from(self, stream, path="<stream>"):
        self._start()
        decisions = []
        for line_number, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                data = loads(line)
                linked = data[Keys.OUTCOME] == DiseaseDecision.LINKED
                decisions.append(DiseaseDecision(data[Keys.CODE], linked,
                                                 data.get(Keys.SPELLINGS)))
            except (KeyError, TypeError, ValueError, InvalidCode) as error:
                raise InvalidInput(path, [Malformed("line %d" % line_number,
                                                    str(error))])
        return decisions



class Keys:

    MENTION = "mention"
    OUTCOME = "outcome"
    KB_ID = "kb_id"
    SCORE = "score"
    REASON = "reason"
    AUDIT = "audit"
    RULE1 = "rule1"
    RULE2 = "rule2"
    ALIGNMENT = "alignment"
    WORD = "word"
    SOURCE = "source"
    MODE = "mode"

    CODE = "code"
    SPELLINGS = "spellings"
