#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from argparse import ArgumentParser

from pdd import About
from pdd.entities.validation import InvalidConfiguration
from pdd.synthesis import NoiseProfile



class InvalidCommandLine(InvalidConfiguration):
    pass



class Parser(ArgumentParser):
    """
    Raise usage errors instead of exiting, so that they are reported
    like other configuration problems.
    """

    def error(self, message):
        raise InvalidCommandLine("%s: %s" % (self.prog, message))



class Command(object):

    @staticmethod
    def extract_from(command_line):
        parser = Parser(prog=About.PROGRAM,
                        description=About.DESCRIPTION)

        subparsers = parser.add_subparsers(dest="command",
                                           parser_class=Parser)
        subparsers.required = True

        train = subparsers.add_parser(
            "train",
            help="Train the entity name model on the drug knowledge base")
        Command._add_common_options(train)
        train.add_argument(
            "--drug-kb",
            dest="drug_kb",
            help="the JSON drug knowledge base")
        train.add_argument(
            "--max-iterations",
            type=int,
            dest="max_iterations",
            help="the maximum number of EM iterations")
        train.add_argument(
            "--tolerance",
            type=float,
            dest="log_likelihood_tolerance",
            help="stop when the log-likelihood improves by less than this")
        train.add_argument(
            "--epsilon",
            type=float,
            dest="epsilon",
            help="the mention-length constant of the name model")

        link = subparsers.add_parser(
            "link",
            help="Link drug mentions and ICD-9 codes")
        Command._add_common_options(link)
        link.add_argument(
            "-k",
            "--candidates",
            type=int,
            dest="k",
            help="how many top-scored candidates the rules examine")
        link.add_argument(
            "--score-floor",
            type=float,
            dest="score_floor",
            help="leave mentions scoring below this unlinked")
        link.add_argument(
            "--dosage-tolerance",
            type=float,
            dest="dosage_tolerance",
            help="relative tolerance when comparing dosages")
        link.add_argument(
            "--no-lexical-support",
            action="store_const",
            const=False,
            dest="require_lexical_support",
            help="accept candidates that share no word with the mention")

        build_graph = subparsers.add_parser(
            "build-graph",
            help="Build the PDD graph and its statistics")
        Command._add_common_options(build_graph)
        build_graph.add_argument(
            "--namespace",
            dest="namespace",
            help="the IRI prefix of patients, drugs and diseases")
        build_graph.add_argument(
            "--top-unlinked",
            type=int,
            dest="top_unlinked",
            help="how many unlinked drugs the statistics list")

        evaluate = subparsers.add_parser(
            "eval",
            help="Compare drug links against gold links")
        Command._add_common_options(evaluate)
        evaluate.add_argument(
            "-g",
            "--gold",
            dest="gold",
            help="the JSON file of gold links")
        evaluate.add_argument(
            "--sample-size",
            type=int,
            dest="sample_size",
            help="how many links to sample for manual review")
        evaluate.add_argument(
            "-s",
            "--seed",
            type=int,
            dest="seed",
            help="the seed of the review sample")

        synthesize = subparsers.add_parser(
            "synth",
            help="Generate a synthetic corpus with gold links")
        synthesize.add_argument(
            "-o",
            "--out",
            dest="output",
            help="the directory where to write the corpus")
        synthesize.add_argument(
            "-s",
            "--seed",
            type=int,
            dest="seed",
            help="the seed of the random generator")
        synthesize.add_argument(
            "--patients",
            type=int,
            dest="patients",
            help="how many patients to generate")
        synthesize.add_argument(
            "--drugs",
            type=int,
            dest="drugs",
            help="how many drugs the knowledge base lists")
        synthesize.add_argument(
            "--profile",
            choices=NoiseProfile.ALL,
            dest="profile",
            help="how drug mentions are written")

        values = parser.parse_args(command_line)
        return Command.from_namespace(values)


    @staticmethod
    def _add_common_options(parser):
        parser.add_argument(
            "-c",
            "--config",
            dest="configuration_file",
            help="the JSON configuration file")
        parser.add_argument(
            "-o",
            "--out",
            dest="output",
            help="the directory where to write the results")


    OVERRIDES = {
        "train": ["output", "drug_kb", "max_iterations",
                  "log_likelihood_tolerance", "epsilon"],
        "link": ["output", "k", "score_floor", "dosage_tolerance",
                 "require_lexical_support"],
        "build-graph": ["output", "namespace", "top_unlinked"],
        "eval": ["output", "gold", "sample_size"]
    }


    @staticmethod
    def from_namespace(namespace):
        if namespace.command == "synth":
            return Synthesize(namespace.output,
                              namespace.seed,
                              namespace.patients,
                              namespace.drugs,
                              namespace.profile)

        overrides = dict((key, getattr(namespace, key))
                         for key in Command.OVERRIDES.get(namespace.command, []))

        if namespace.command == "train":
            return Train(namespace.configuration_file, overrides)

        elif namespace.command == "link":
            return Link(namespace.configuration_file, overrides)

        elif namespace.command == "build-graph":
            return BuildGraph(namespace.configuration_file, overrides)

        elif namespace.command == "eval":
            return Evaluate(namespace.configuration_file, overrides,
                            namespace.seed)

        else:
            message = "The command '%s' is not yet implemented." % namespace.command
            raise NotImplementedError(message)


    def send_to(self, pdd):
        message = "The method '{}.Command#send_to' should have been implemented!"
        raise NotImplementedError(message.format(__name__))



class PipelineCommand(Command):
    """
    A stage that reads the configuration file, whose values the
    command-line flags override.
    """

    def __init__(self, configuration_file=None, overrides=None):
        super(PipelineCommand, self).__init__()
        self._configuration_file = configuration_file
        self._overrides = dict((key, value)
                               for key, value in (overrides or {}).items()
                               if value is not None)


    @property
    def configuration_file(self):
        return self._configuration_file


    @property
    def overrides(self):
        return dict(self._overrides)



class Train(PipelineCommand):
    """
    Encapsulate calls to 'pdd train ...'
    """

    def send_to(self, pdd):
        return pdd.cmd_train(self)



class Link(PipelineCommand):
    """
    Encapsulate calls to 'pdd link ...'
    """

    def send_to(self, pdd):
        return pdd.cmd_link(self)



class BuildGraph(PipelineCommand):
    """
    Encapsulate calls to 'pdd build-graph ...'
    """

    def send_to(self, pdd):
        return pdd.cmd_build_graph(self)



class Evaluate(PipelineCommand):
    """
    Encapsulate calls to 'pdd eval ...'
    """

    DEFAULT_SEED = 0

    def __init__(self, configuration_file=None, overrides=None, seed=None):
        super(Evaluate, self).__init__(configuration_file, overrides)
        self._seed = seed if seed is not None else self.DEFAULT_SEED


    @property
    def seed(self):
        return self._seed


    def send_to(self, pdd):
        return pdd.cmd_eval(self)



class Synthesize(Command):
    """
    Encapsulate calls to 'pdd synth ...'
    """

    DEFAULT_OUTPUT = "synthetic"
    DEFAULT_SEED = 1
    DEFAULT_PATIENTS = 500
    DEFAULT_DRUGS = 100
    DEFAULT_PROFILE = NoiseProfile.MIMIC_LIKE

    def __init__(self, output=None, seed=None, patients=None, drugs=None,
                 profile=None):
        super(Synthesize, self).__init__()
        self._output = output or self.DEFAULT_OUTPUT
        self._seed = seed if seed is not None else self.DEFAULT_SEED
        self._patients = patients if patients is not None \
                         else self.DEFAULT_PATIENTS
        self._drugs = drugs if drugs is not None else self.DEFAULT_DRUGS
        self._profile = profile or self.DEFAULT_PROFILE


    @property
    def output(self):
        return self._output


    @property
    def seed(self):
        return self._seed


    @property
    def patients(self):
        return self._patients


    @property
    def drugs(self):
        return self._drugs


    @property
    def profile(self):
        return self._profile


    def send_to(self, pdd):
        return pdd.cmd_synth(self)
