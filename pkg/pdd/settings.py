#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.enm import EmConfig
from pdd.entities.validation import InvalidConfiguration, \
    InvalidConfigurationValue, MissingInput
from pdd.graph import GraphSettings, InvalidIri, DEFAULT_NAMESPACE, \
    DEFAULT_DRUG_KB_IRI_PREFIX, DEFAULT_ICD9_IRI_PREFIX
from pdd.linker import LinkerSettings

from os.path import dirname, isabs, isfile, join as join_paths

from yaml import safe_load as load_yaml, YAMLError



class Kind:

    PATH = "path"
    INTEGER = "integer"
    DECIMAL = "decimal"
    BOOLEAN = "boolean"
    TEXT = "text"



class Setting(object):
    """
    One configuration key: its type, default value, and the range its
    values must fall in.
    """

    def __init__(self, key, kind, default=None, check=None, hint=None):
        self.key = key
        self.kind = kind
        self.default = default
        self.check = check
        self.hint = hint


    def convert(self, value):
        if value is None:
            return None
        if self.kind == Kind.PATH or self.kind == Kind.TEXT:
            valid = isinstance(value, str) and value != ""
        elif self.kind == Kind.INTEGER:
            valid = isinstance(value, int) and not isinstance(value, bool)
        elif self.kind == Kind.DECIMAL:
            valid = isinstance(value, (int, float)) and not isinstance(value, bool)
            value = float(value) if valid else value
        else:
            valid = isinstance(value, bool)
        if not valid or (self.check and not self.check(value)):
            raise InvalidConfigurationValue(self.key, value,
                                             self.hint or "Expected a %s." % self.kind)
        return value



SETTINGS = [
    Setting("patients", Kind.PATH),
    Setting("prescriptions", Kind.PATH),
    Setting("diagnoses", Kind.PATH),
    Setting("drug_kb", Kind.PATH),
    Setting("ontology", Kind.PATH),
    Setting("gold", Kind.PATH),
    Setting("table", Kind.PATH),
    Setting("output", Kind.PATH, "out"),
    Setting("max_iterations", Kind.INTEGER, 50, lambda v: v >= 1,
            "Expected an integer of at least 1."),
    Setting("log_likelihood_tolerance", Kind.DECIMAL, 1e-4, lambda v: v > 0,
            "Expected a positive decimal."),
    Setting("epsilon", Kind.DECIMAL, 1.0, lambda v: 0 < v <= 1,
            "Expected a decimal in (0, 1]."),
    Setting("k", Kind.INTEGER, 50, lambda v: v >= 1,
            "Expected an integer of at least 1."),
    Setting("score_floor", Kind.DECIMAL, 1e-12, lambda v: v >= 0,
            "Expected a non-negative decimal."),
    Setting("dosage_tolerance", Kind.DECIMAL, 0.05, lambda v: 0 <= v < 1,
            "Expected a decimal in [0, 1)."),
    Setting("require_lexical_support", Kind.BOOLEAN, True),
    Setting("namespace", Kind.TEXT, DEFAULT_NAMESPACE),
    Setting("drug_kb_iri_prefix", Kind.TEXT, DEFAULT_DRUG_KB_IRI_PREFIX),
    Setting("icd9_iri_prefix", Kind.TEXT, DEFAULT_ICD9_IRI_PREFIX),
    Setting("sample_size", Kind.INTEGER, 0, lambda v: v >= 0,
            "Expected a non-negative integer."),
    Setting("top_unlinked", Kind.INTEGER, 10, lambda v: v >= 0,
            "Expected a non-negative integer."),
]



class PipelineConfig(object):


    def __init__(self, **values):
        for each in SETTINGS:
            value = values.get(each.key)
            setattr(self, each.key, each.default if value is None else value)


    def require(self, *keys):
        for each_key in keys:
            path = getattr(self, each_key)
            if path is None:
                raise InvalidConfigurationValue(
                    each_key, None, "Set '%s' in the configuration file." % each_key)
            if not isfile(path):
                raise MissingInput(path)


    @property
    def table_path(self):
        return self.table or join_paths(self.output, "table.json")


    def em_config(self):
        return EmConfig(self.max_iterations, self.log_likelihood_tolerance,
                        self.epsilon)


    def linker_settings(self):
        return LinkerSettings(self.k, self.score_floor, self.dosage_tolerance,
                              self.require_lexical_support)


    def graph_settings(self):
        try:
            return GraphSettings(self.namespace, self.drug_kb_iri_prefix,
                                 self.icd9_iri_prefix)
        except InvalidIri as error:
            raise InvalidConfigurationValue("namespace", error.value,
                                            "IRI prefixes must be absolute IRIs.")



class ConfigParser(object):
    """
    Reads the JSON configuration file (any document PyYAML's safe loader
    accepts), then applies the command-line overrides. Relative paths
    in the file are relative to the file's own folder.
    """

    BY_KEY = dict((each.key, each) for each in SETTINGS)


    def parse(self, path=None, overrides=None):
        values = {}
        if path is not None:
            for key, value in self._read(path).items():
                setting = self._setting(key)
                value = setting.convert(value)
                if setting.kind == Kind.PATH and value and not isabs(value):
                    value = join_paths(dirname(path), value)
                values[key] = value
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = self._setting(key).convert(value)
        return PipelineConfig(**values)


    def _setting(self, key):
        if key not in self.BY_KEY:
            raise InvalidConfigurationValue(
                key, "", "Unknown key; valid keys are: %s."
                % ", ".join(each.key for each in SETTINGS))
        return self.BY_KEY[key]


    @staticmethod
    def _read(path):
        if not isfile(path):
            raise MissingInput(path)
        try:
            with open(path, "r", encoding="utf-8") as stream:
                data = load_yaml(stream)
        except YAMLError as error:
            raise InvalidConfiguration("Cannot parse '%s': %s" % (path, error))
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise InvalidConfiguration("'%s' must hold a JSON object" % path)
        return data
