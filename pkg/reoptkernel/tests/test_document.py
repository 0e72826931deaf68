import json
import unittest

from reoptkernel import oracles
from reoptkernel.document import InstanceDocument, ParseError, dumps, emit_dimacs, emit_instance, \
    from_json_object, parse_dimacs, parse_instance, to_json_object
from reoptkernel.graph_core import Decided, EdgeAdd, Graph, Reduced, VertexAdd, path_graph

CASE3 = {"problem": "vertex_cover", "n": 5, "edges": [[0, 2], [0, 3], [1, 4]], "k": 2,
         "witness": [0, 1], "modification": {"type": "edge_add", "u": 3, "v": 4}}

class JsonDocumentTester(unittest.TestCase):
    def test_minimal(self):
        doc = parse_instance('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        self.assertEqual(doc.problem.name, 'vertex_cover')
        self.assertEqual(doc.graph, path_graph(3))
        self.assertIsNone(doc.k)
        self.assertIsNone(doc.witness)
        self.assertIsNone(doc.modification)

    def test_reoptimization_fields(self):
        doc = from_json_object(CASE3)
        self.assertEqual(doc.k, 2)
        self.assertEqual(doc.witness, [0, 1])
        self.assertEqual(doc.modification, EdgeAdd(3, 4))
        inst = doc.reopt_instance()
        self.assertEqual(inst.k_prime, 2)
        self.assertTrue(inst.modified.has_edge(3, 4))

    def test_k_prime(self):
        data = dict(CASE3, k_prime=1)
        self.assertEqual(from_json_object(data).reopt_instance().k_prime, 1)
        data = dict(CASE3, k_prime=3)
        self.assertRaises(ParseError, from_json_object(data).reopt_instance)

    def test_missing_modification(self):
        doc = parse_instance('{"n": 2, "edges": [[0, 1]], "k": 1}')
        with self.assertRaises(ParseError) as cm:
            doc.reopt_instance()
        self.assertIn("field 'modification'", str(cm.exception))

    def test_reopt_instance_needs_graph(self):
        doc = parse_instance('{"problem": "set_cover", "set_cover": {"universe": 2, "family": [[1, 2]]}, "k": 1,'
                             ' "modification": {"type": "edge_add", "u": 0, "v": 1}}')
        with self.assertRaises(ParseError) as cm:
            doc.reopt_instance()
        self.assertIn("field 'n'", str(cm.exception))

    def test_treewidth_witness(self):
        doc = parse_instance('{"problem": "treewidth", "n": 3, "edges": [[0, 1], [1, 2]], "k": 1,'
                             ' "tree_decomposition": {"bags": [[0, 1], [1, 2]], "tree": [[0, 1]]},'
                             ' "modification": {"type": "edge_add", "u": 0, "v": 2}}')
        inst = doc.reopt_instance()
        self.assertTrue(inst.has_witness)
        self.assertTrue(oracles.validate_witness(inst))
        self.assertFalse(parse_instance('{"problem": "treewidth", "n": 2, "k": 1,'
                                        ' "modification": {"type": "edge_add", "u": 0, "v": 1}}')
                         .reopt_instance().has_witness)

    def test_field_errors(self):
        cases = [
            ('{"n": -1}', "field 'n'"),
            ('{"n": 2, "edges": [[0, 2]]}', "field 'edges'"),
            ('{"n": 2, "edges": [[0, 1], [1, 0]]}', "field 'edges'"),
            ('{"n": 2, "k": "two"}', "field 'k'"),
            ('{"n": 2, "witness": [5]}', "field 'witness'"),
            ('{"n": 2, "edges": [[0, 1]], "modification": {"type": "edge_add", "u": 0, "v": 1}}',
             "field 'modification'"),
            ('{"n": 2, "modification": {"type": "teleport"}}', "field 'modification'"),
            ('{"n": 2, "problem": "coloring"}', "field 'problem'"),
            ('{"n": 2, "version": 7}', "field 'version'"),
            ('{"n": 2, "result": {"kind": "decided"}}', "field 'result'"),
            ('{"n": 2, "labels": ["a", "a"]}', "field 'labels': duplicate label 'a'"),
            ('{"n": 2, "labels": ["a", 3]}', "field 'labels'"),
            ('{"n": 1, "result": {"kind": "reduced", "n": 2, "labels": ["x", "x"], "k": 0, "size_bound": 2}}',
             "duplicate label"),
        ]
        for text, expected in cases:
            with self.assertRaises(ParseError) as cm:
                parse_instance(text)
            self.assertIn(expected, str(cm.exception), text)

    def test_invalid_json(self):
        self.assertRaises(ParseError, parse_instance, '{"n": 2,')
        self.assertRaises(ParseError, from_json_object, [1, 2])

    def test_other_problems(self):
        doc = parse_instance('{"problem": "leaf_out_tree", "n": 3, "arcs": [[0, 1], [0, 2]], "k": 2}')
        self.assertEqual(doc.instance.sorted_arcs(), [(0, 1), (0, 2)])
        doc = parse_instance('{"problem": "set_cover", "set_cover": {"universe": 2, "family": [[1], [2, 1]]},'
                             ' "k": 1, "witness": [1]}')
        self.assertEqual(doc.instance.universe_size, 2)
        self.assertEqual(doc.witness, [1])
        doc = parse_instance('{"problem": "ivst", "n": 3, "edges": [[0, 1], [1, 2]], "witness": [[2, 1], [0, 1]]}')
        self.assertEqual(doc.witness, [(0, 1), (2, 1)])

    def test_emit_then_parse(self):
        doc = from_json_object(dict(CASE3, result={"kind": "reduced", "n": 3, "edges": [[0, 2], [1, 2]],
                                                   "k": 1, "size_bound": 4, "branch": "case3"}))
        text = emit_instance(doc)
        self.assertEqual(json.loads(text)['result']['branch'], 'case3')
        again = parse_instance(text)
        self.assertEqual(again, doc)
        self.assertEqual(again.result, Reduced(Graph(3, [(0, 2), (1, 2)]), 1, 4))
        self.assertEqual(emit_instance(again), text)

    def test_vertex_addition(self):
        doc = parse_instance('{"problem": "clique", "n": 2, "edges": [[0, 1]], "labels": ["a", "b"], "k": 2, "k_prime": 3,'
                             ' "modification": {"type": "vertex_add", "neighbors": [0, 1], "label": "z"}}')
        self.assertEqual(doc.modification, VertexAdd([0, 1]))
        self.assertEqual(doc.reopt_instance().modified.label(2), 'z')
        self.assertEqual(to_json_object(doc)['modification'],
                         {'type': 'vertex_add', 'neighbors': [0, 1], 'label': 'z'})

    def test_copy(self):
        doc = from_json_object(CASE3)
        changed = doc.copy(k=1, result=Decided(False))
        self.assertEqual(changed.k, 1)
        self.assertEqual(doc.k, 2)
        self.assertNotEqual(changed, doc)
        self.assertEqual(InstanceDocument('clique').problem.name, 'clique')

    def test_dumps(self):
        self.assertEqual(dumps({'b': 1, 'a': [1]}), '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n')

class DimacsTester(unittest.TestCase):
    def test_parse(self):
        g = parse_dimacs("c a path\np edge 3 2\ne 1 2\ne 2 3\n")
        self.assertEqual(g, path_graph(3))
        doc = parse_instance("p edge 2 1\ne 1 2\n")
        self.assertEqual(doc.problem.name, 'vertex_cover')
        self.assertEqual(doc.graph.sorted_edges(), [(0, 1)])

    def test_errors(self):
        cases = [
            ("e 1 2\n", "line 1:"),
            ("p edge 2 1\ne 1 3\n", "line 2:"),
            ("c\np edge 2 1\nx 1 2\n", "line 3:"),
            ("p edge two 1\n", "line 1:"),
            ("c nothing\n", "missing"),
        ]
        for text, expected in cases:
            with self.assertRaises(ParseError) as cm:
                parse_dimacs(text)
            self.assertIn(expected, str(cm.exception), text)

    def test_edge_count_mismatch(self):
        cases = [
            ("p edge 3 3\ne 1 2\ne 2 3\n", "line 1: header announces 3 edges, found 2"),
            ("c\np edge 3 1\ne 1 2\ne 2 3\n", "line 2: header announces 1 edges, found 2"),
            ("p edge 2 1\n", "line 1: header announces 1 edges, found 0"),
        ]
        for text, expected in cases:
            with self.assertRaises(ParseError) as cm:
                parse_dimacs(text)
            self.assertIn(expected, str(cm.exception), text)
        self.assertEqual(parse_dimacs("p edge 3 0\n"), Graph(3))

    def test_emit(self):
        text = emit_dimacs(path_graph(3), comment="problem k=1")
        self.assertEqual(text, "c problem k=1\np edge 3 2\ne 1 2\ne 2 3\n")
        self.assertEqual(parse_dimacs(text), path_graph(3))

if __name__ == '__main__':
    unittest.main()
