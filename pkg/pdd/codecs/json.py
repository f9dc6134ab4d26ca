#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from __future__ import absolute_import

from pdd.codecs.commons import Codec
from pdd.entities.records import DrugKbEntry, Dosage, Icd9Ontology
from pdd.entities.validation import InvalidInput, DuplicateIdentifier, \
    EmptyName, Malformed
from pdd.normalize import tokenize_name, normalize_icd9, InvalidCode

from collections import OrderedDict

from json import load as load_json, dump as dump_json



class InvalidTable(InvalidInput):


    def __init__(self, path, problems):
        super(InvalidTable, self).__init__(
            path, [Malformed(path, each) for each in problems])



class JSON(Codec):
    """
    Reads and writes the JSON artifacts: drug knowledge base, ICD-9
    ontology, translation tables, link decisions, gold links and
    reports. Output is deterministic: keys are sorted and so are
    collections without a natural order.
    """

    def load_drug_kb_from(self, stream, path="<stream>"):
        self._start()
        data = self._parse(stream, path, list)
        entries = []
        errors = []
        identifiers = set()
        for index, item in enumerate(data, 1):
            try:
                entry = self._drug_entry(item, index)
            except (KeyError, TypeError, ValueError, InvalidCode) as error:
                errors.append(Malformed("entry #%d" % index, str(error)))
                continue
            if entry is None:
                errors.append(EmptyName(item.get(Keys.ID, "#%d" % index)))
                continue
            if entry.kb_id in identifiers:
                errors.append(DuplicateIdentifier(entry.kb_id))
                continue
            identifiers.add(entry.kb_id)
            entries.append(entry)
        if errors:
            raise InvalidInput(path, errors)
        return entries


    def _drug_entry(self, item, index):
        kb_id = str(item[Keys.ID])
        name = (item.get(Keys.NAME) or "").strip()
        if not name or not len(tokenize_name(name)):
            return None
        indications = [normalize_icd9(str(each))
                       for each in item.get(Keys.INDICATIONS) or []]
        dosages = [Dosage(float(each[Keys.VALUE]), str(each[Keys.UNIT]))
                   for each in item.get(Keys.DOSAGES) or []]
        return DrugKbEntry(kb_id, name,
                           self._distinct_aliases(name, item.get(Keys.ALIASES) or []),
                           indications, dosages)


    @staticmethod
    def _distinct_aliases(name, aliases):
        """
        Keep the first spelling of each alias, comparing aliases by
        their tokens, and never the canonical name itself.
        """
        seen = {tokenize_name(name).tokens}
        distinct = []
        for each in aliases:
            alias = str(each).strip()
            key = tokenize_name(alias).tokens
            if not key or key in seen:
                continue
            seen.add(key)
            distinct.append(alias)
        return distinct


    @staticmethod
    def save_drug_kb(entries, stream):
        data = []
        for each in entries:
            data.append(OrderedDict([
                (Keys.ID, each.kb_id),
                (Keys.NAME, each.canonical_name),
                (Keys.ALIASES, sorted(each.aliases)),
                (Keys.INDICATIONS, sorted(each.indications)),
                (Keys.DOSAGES, [OrderedDict([(Keys.VALUE, d.value),
                                             (Keys.UNIT, d.unit)])
                                for d in sorted(each.standard_dosages,
                                                key=lambda d: (d.unit, d.value))])
            ]))
        dump_json(data, stream, indent=2)
        stream.write("\n")


    def load_ontology_from(self, stream, path="<stream>"):
        self._start()
        data = self._parse(stream, path, list)
        labels = OrderedDict()
        errors = []
        for index, item in enumerate(data, 1):
            try:
                code = normalize_icd9(str(item[Keys.CODE]))
            except (KeyError, TypeError, InvalidCode) as error:
                errors.append(Malformed("code #%d" % index, str(error)))
                continue
            labels[code] = str(item.get(Keys.LABEL) or "")
        if errors:
            raise InvalidInput(path, errors)
        return Icd9Ontology(labels)


    @staticmethod
    def save_ontology(entries, stream):
        """
        'entries' are (code, label) pairs, codes written as given.
        """
        data = [OrderedDict([(Keys.CODE, code), (Keys.LABEL, label)])
                for code, label in entries]
        dump_json(data, stream, indent=2)
        stream.write("\n")


    @staticmethod
    def save_table(table, stream):
        data = OrderedDict()
        data[Keys.EPSILON] = table.epsilon
        data[Keys.ENTRIES] = [OrderedDict([(Keys.SOURCE, source),
                                           (Keys.TARGET, target),
                                           (Keys.PROBABILITY, probability)])
                              for source, target, probability in table.entries()]
        dump_json(data, stream, indent=1)
        stream.write("\n")


    def load_table_from(self, stream, path="<stream>"):
        """
        The epsilon and the rows {source: {target: probability}} of a
        translation table file, not yet checked for normalization.
        """
        self._start()
        data = self._parse(stream, path, dict)
        rows = OrderedDict()
        try:
            epsilon = float(data[Keys.EPSILON])
            for each in data[Keys.ENTRIES]:
                row = rows.setdefault(each[Keys.SOURCE], {})
                target = each[Keys.TARGET]
                if target in row:
                    raise InvalidTable(path, ["duplicate entry (%s, %s)"
                                              % (each[Keys.SOURCE], target)])
                row[target] = float(each[Keys.PROBABILITY])
        except (KeyError, TypeError, ValueError) as error:
            raise InvalidTable(path, [str(error)])
        return epsilon, rows


    def load_gold_from(self, stream, path="<stream>"):
        self._start()
        data = self._parse(stream, path, dict)
        return OrderedDict((str(mention), None if kb_id is None else str(kb_id))
                           for mention, kb_id in data.items())


    @staticmethod
    def save_gold(gold, stream):
        dump_json(gold, stream, indent=2, sort_keys=True)
        stream.write("\n")


    @staticmethod
    def save_report(report, stream):
        dump_json(report, stream, indent=2, sort_keys=True)
        stream.write("\n")


    @staticmethod
    def _parse(stream, path, expected_type):
        try:
            data = load_json(stream, object_pairs_hook=OrderedDict)
        except ValueError as error:
            raise InvalidInput(path, [Malformed(path, str(error))])
        if not isinstance(data, expected_type):
            raise InvalidInput(path, [Malformed(path, "expected a JSON %s"
                                                % expected_type.__name__)])
        return data



class Keys:

    ID = "id"
    NAME = "name"
    ALIASES = "aliases"
    INDICATIONS = "indications"
    DOSAGES = "dosages"
    VALUE = "value"
    UNIT = "unit"

    CODE = "code"
    LABEL = "label"

    EPSILON = "epsilon"
    ENTRIES = "entries"
    SOURCE = "source"
    TARGET = "target"
    PROBABILITY = "prob"

