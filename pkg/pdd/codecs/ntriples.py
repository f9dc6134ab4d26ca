#
# PDD
#
# Copyright (C) 2026 The PDD Graph developers
# All rights reserved.
#
# This software may be modified and distributed under the terms
# of the MIT license.  See the LICENSE file for details.
#



from rdflib import Graph

from io import StringIO



class NTriples(object):
    """
    Canonical N-Triples: one triple per line, terms written by rdflib,
    lines sorted so that equal graphs give equal files.
    """

    @staticmethod
    def line(triple):
        return "%s %s %s .\n" % tuple(each.n3() for each in triple)


    def save_graph(self, triples, stream):
        lines = sorted(self.line(each) for each in triples)
        stream.writelines(lines)
        return len(lines)


    @staticmethod
    def load_graph_from(stream):
        graph = Graph()
        graph.parse(data=stream.read(), format="nt")
        return graph


    def as_text(self, triples):
        buffer = StringIO()
        self.save_graph(triples, buffer)
        return buffer.getvalue()
