#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd.directories import OutputDirectory, CorpusDirectory
from pdd.enm import training_pairs, train_em, load_table
from pdd.entities.validation import InvalidConfiguration, InvalidData, \
    InvalidInput, MissingInput
from pdd.evaluate import evaluate_links, sample_decisions, dataset_statistics
from pdd.graph import build_graph
from pdd.ingest import load_patients, load_prescriptions, load_diagnoses, \
    load_drug_kb, load_ontology, load_gold, load_drug_decisions, \
    load_disease_decisions
from pdd.linker import PatientContext, link_drugs, link_diseases
from pdd.settings import ConfigParser
from pdd.synthesis import generate_synthetic_corpus
from pdd.ui import UI

from logging import getLogger



LOGGER = getLogger(__name__)



class Pdd(object):
    """
    One method per sub-command. Each returns the exit status: 0 on
    success, 1 for configuration problems, 2 for invalid data and 3 for
    anything else.
    """

    SUCCESS = 0
    INTERNAL_ERROR = 3


    def __init__(self, ui=None, parser=None):
        self._ui = ui or UI()
        self._parser = parser or ConfigParser()


    def cmd_train(self, command):
        return self._run(self._train, command)


    def cmd_link(self, command):
        return self._run(self._link, command)


    def cmd_build_graph(self, command):
        return self._run(self._build_graph, command)


    def cmd_eval(self, command):
        return self._run(self._evaluate, command)


    def cmd_synth(self, command):
        return self._run(self._synthesize, command)


    def _run(self, action, command):
        self._ui.welcome()
        try:
            action(command)
            return self.SUCCESS

        except MissingInput as error:
            self._ui.missing_input(error)
            return error.EXIT_STATUS

        except InvalidConfiguration as error:
            self._ui.invalid_configuration(error)
            return error.EXIT_STATUS

        except InvalidInput as error:
            self._ui.invalid_input(error)
            return error.EXIT_STATUS

        except InvalidData as error:
            self._ui.invalid_data(error)
            return error.EXIT_STATUS

        except Exception as error:
            LOGGER.debug("Unexpected error", exc_info=True)
            self._ui.unexpected_error(error)
            return self.INTERNAL_ERROR

        finally:
            self._ui.goodbye()


    def _configure(self, command):
        return self._parser.parse(command.configuration_file, command.overrides)


    def _train(self, command):
        config = self._configure(command)
        config.require("drug_kb")
        kb = load_drug_kb(config.drug_kb)
        self._ui.file_loaded("drug(s)", config.drug_kb, len(kb))
        table, trace = train_em(training_pairs(kb), config.em_config())
        output = OutputDirectory(config.output)
        path = output.save_table(table, config.table_path)
        output.save_trace(trace)
        self._ui.table_trained(path, trace, table)


    def _load_records(self, config):
        config.require("patients", "prescriptions", "diagnoses")
        patients = load_patients(config.patients)
        self._ui.records_loaded("patient(s)", patients)
        prescriptions = load_prescriptions(config.prescriptions, patients)
        self._ui.records_loaded("prescription(s)", prescriptions)
        diagnoses = load_diagnoses(config.diagnoses, patients)
        self._ui.records_loaded("diagnosis(es)", diagnoses)
        return patients, prescriptions, diagnoses


    def _link(self, command):
        config = self._configure(command)
        config.require("drug_kb", "ontology")
        _, prescriptions, diagnoses = self._load_records(config)
        kb = load_drug_kb(config.drug_kb)
        self._ui.file_loaded("drug(s)", config.drug_kb, len(kb))
        ontology = load_ontology(config.ontology)
        self._ui.file_loaded("ICD-9 code(s)", config.ontology, len(ontology))
        table = load_table(config.table_path)

        context = PatientContext.from_records(prescriptions, diagnoses)
        drug_decisions = link_drugs(prescriptions, kb, table, context,
                                    config.linker_settings())
        disease_decisions = link_diseases(diagnoses, ontology)

        output = OutputDirectory(config.output)
        path = output.save_drug_decisions(drug_decisions.values())
        self._ui.drugs_linked(path, drug_decisions)
        path = output.save_disease_decisions(disease_decisions.values())
        self._ui.diseases_linked(path, disease_decisions)


    def _build_graph(self, command):
        config = self._configure(command)
        settings = config.graph_settings()
        patients, prescriptions, diagnoses = self._load_records(config)
        output = OutputDirectory(config.output)
        drug_decisions = load_drug_decisions(output.drug_decisions)
        disease_decisions = load_disease_decisions(output.disease_decisions)

        graph = build_graph(patients, prescriptions, diagnoses,
                            drug_decisions, disease_decisions, settings)
        path, count = output.save_graph(graph)
        self._ui.graph_written(path, count)

        statistics = dataset_statistics(graph, drug_decisions,
                                        config.top_unlinked)
        path = output.save_statistics(statistics)
        self._ui.statistics(path, statistics)


    def _evaluate(self, command):
        config = self._configure(command)
        config.require("gold")
        gold = load_gold(config.gold)
        output = OutputDirectory(config.output)
        decisions = load_drug_decisions(output.drug_decisions)

        report = evaluate_links(decisions, gold)
        path = output.save_evaluation(report)
        self._ui.evaluation(path, report)

        if config.sample_size:
            sample = sample_decisions(decisions, config.sample_size,
                                      command.seed)
            path = output.save_audit_sample(sample)
            self._ui.audit_sample(path, sample)


    def _synthesize(self, command):
        corpus = generate_synthetic_corpus(command.seed,
                                           command.patients,
                                           command.drugs,
                                           command.profile)
        directory = CorpusDirectory(command.output)
        path = directory.save_corpus(corpus)
        self._ui.corpus_written(path, corpus)
