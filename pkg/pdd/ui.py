#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from pdd import About



class UI(object):
    """
    Print pipeline events on the terminal or on any other given output
    """

    def __init__(self, output=None):
        from sys import stdout
        self._output = output or stdout


    def welcome(self):
        self._print("{program} v{version} ({ipr})",
                    program=About.PROGRAM,
                    version=About.VERSION,
                    ipr=About.LICENSE)
        self._print(About.COPYRIGHT)
        self._print("")


    def goodbye(self):
        self._print("\nThat's all folks!")


    def records_loaded(self, what, result):
        self._print("Loaded {count} {what} from '{path}'.",
                    count=len(result), what=what, path=result.path)
        if result.merged:
            self._print(" - {count} row(s) merged into earlier patients.",
                        count=result.merged)
        if result.rejects:
            self._print(" - {count} row(s) rejected:", count=len(result.rejects))
            for each in result.rejects[:self.MAX_REJECTS]:
                self._print("    {reject}", reject=str(each))
            if len(result.rejects) > self.MAX_REJECTS:
                self._print("    ... and {count} more.",
                            count=len(result.rejects) - self.MAX_REJECTS)

    MAX_REJECTS = 10


    def file_loaded(self, what, path, count):
        self._print("Loaded {count} {what} from '{path}'.",
                    count=count, what=what, path=path)


    def table_trained(self, path, trace, table):
        self._print("Trained {count} lexical probabilities in {iterations} "
                    "EM iteration(s), final log-likelihood {value:.4f}.",
                    count=len(table), iterations=len(trace), value=trace[-1])
        self._print(" - Table in '{path}'.", path=path)


    def drugs_linked(self, path, decisions):
        linked = sum(1 for each in decisions.values() if each.is_linked)
        self._print("Linked {linked} of {total} drug mention(s).",
                    linked=linked, total=len(decisions))
        self._print(" - Decisions in '{path}'.", path=path)


    def diseases_linked(self, path, decisions):
        linked = sum(1 for each in decisions.values() if each.is_linked)
        self._print("Matched {linked} of {total} ICD-9 code(s).",
                    linked=linked, total=len(decisions))
        self._print(" - Decisions in '{path}'.", path=path)


    def graph_written(self, path, count):
        self._print("Wrote {count} triple(s) in '{path}'.",
                    count=count, path=path)


    def statistics(self, path, statistics):
        self._print("\n" + statistics.as_text())
        self._print(" - Statistics in '{path}'.", path=path)


    def evaluation(self, path, report):
        self._print("\n" + report.as_text())
        self._print(" - Evaluation in '{path}'.", path=path)


    def audit_sample(self, path, decisions):
        self._print(" - {count} link(s) sampled for manual review in '{path}'.",
                    count=len(decisions), path=path)


    def corpus_written(self, path, corpus):
        self._print("Generated {patients} patient(s), {prescriptions} "
                    "prescription(s) and {drugs} knowledge-base drug(s).",
                    patients=len(corpus.patients),
                    prescriptions=len(corpus.prescriptions),
                    drugs=len(corpus.drug_kb))
        self._print(" - Run it with 'pdd train --config {path}'.", path=path)


    def invalid_command_line(self, error):
        self._print("\nError:")
        self._print(" - {message}", message=str(error))
        self._print("   Try '{program} --help'.", program=About.PROGRAM)


    def missing_input(self, error):
        self._print("\nError:")
        self._print(" - Unable to find '{path}'.", path=error.path)
        self._print("   Check the paths in the configuration file.")


    def invalid_configuration(self, error):
        self._print("\nError:")
        self._print(" - {message}", message=str(error))
        hint = getattr(error, "hint", None)
        if hint:
            self._print("   {hint}", hint=hint)


    def invalid_input(self, error):
        self._print("\nError:")
        self._print(" - There are errors in '{path}'.", path=error.path)
        self._print("   Please fix the following issue before to proceed:")
        for index, each_error in enumerate(error.errors, 1):
            self._print("     {index}. {error}",
                        index=index,
                        error=str(each_error))
            self._print("        {hint}", hint=each_error.hint)


    def invalid_data(self, error):
        self._print("\nError:")
        self._print(" - {message}", message=str(error))


    def unexpected_error(self, error):
        self._print("Unexpected error:")
        self._print(" - " + str(error))
        self._print("   Please report this to the maintainers, with the command"
                    " you ran and PDD_LOG=DEBUG output.")


    def _print(self, pattern, **values):
        if values:
            self._output.write(pattern.format(**values) + "\n")
        else:
            self._output.write(pattern + "\n")
