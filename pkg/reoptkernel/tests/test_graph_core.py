import unittest
from reoptkernel.graph_core import Decided, EdgeAdd, EdgeDel, Graph, GraphError, InvalidGraph, \
    ModificationInvalid, ReoptInstance, Reduced, VertexAdd, VertexDel, VertexOutOfRange, \
    apply_modification, complete_graph, component_of, components, disjoint_union, path_graph
from reoptkernel import oracles

class GraphTester(unittest.TestCase):
    def setUp(self):
        self.path = path_graph(3)
        self.triangle = complete_graph(3)

    def test_construction(self):
        self.assertEqual(self.path.vertex_count, 3)
        self.assertEqual(self.path.sorted_edges(), [(0, 1), (1, 2)])
        self.assertEqual(Graph(2, [(1, 0)]).sorted_edges(), [(0, 1)])
        self.assertRaises(InvalidGraph, Graph, 2, [(1, 1)])
        self.assertRaises(InvalidGraph, Graph, 2, [(0, 1), (1, 0)])
        self.assertRaises(VertexOutOfRange, Graph, 2, [(0, 2)])
        self.assertRaises(InvalidGraph, Graph, 2, [], ['a'])

    def test_queries(self):
        self.assertEqual(self.path.neighbors(1), frozenset([0, 2]))
        self.assertEqual(self.path.degree(0), 1)
        self.assertTrue(self.path.is_vertex_cover([1]))
        self.assertFalse(self.path.is_vertex_cover([0]))
        self.assertTrue(self.path.is_independent([0, 2]))
        self.assertEqual(Graph(3, [(0, 1)]).isolated_vertices(), [2])
        self.assertRaises(VertexOutOfRange, self.path.neighbors, 3)

    def test_labels(self):
        g = Graph(2, [(0, 1)], ['a', 'b'])
        self.assertEqual(g.label(1), 'b')
        self.assertEqual(g.find('a'), 0)
        self.assertRaises(KeyError, g.find, 'c')
        self.assertEqual(self.path.label(2), '2')

    def test_induced_subgraph(self):
        sub, index_map = complete_graph(4).induced_subgraph([3, 1, 2])
        self.assertEqual(index_map, [1, 2, 3])
        self.assertEqual(sub, complete_graph(3))

    def test_equality(self):
        self.assertEqual(path_graph(3), Graph(3, [(1, 2), (0, 1)]))
        self.assertNotEqual(path_graph(3), self.triangle)
        self.assertEqual(len(set([path_graph(3), Graph(3, [(0, 1), (1, 2)])])), 1)

class ModificationTester(unittest.TestCase):
    def test_edge_add(self):
        self.assertEqual(apply_modification(path_graph(3), EdgeAdd(0, 2)), complete_graph(3))

    def test_edge_add_present(self):
        self.assertRaises(ModificationInvalid, apply_modification, path_graph(3), EdgeAdd(0, 1))

    def test_edge_del(self):
        self.assertEqual(apply_modification(complete_graph(3), EdgeDel(2, 0)), path_graph(3))
        self.assertRaises(ModificationInvalid, apply_modification, path_graph(3), EdgeDel(0, 2))

    def test_vertex_del(self):
        self.assertEqual(apply_modification(complete_graph(3), VertexDel(0)), Graph(2, [(0, 1)]))
        g = apply_modification(Graph(3, [(1, 2)], ['a', 'b', 'c']), VertexDel(0))
        self.assertEqual(g.labels, ('b', 'c'))
        self.assertEqual(g.sorted_edges(), [(0, 1)])

    def test_vertex_add(self):
        g = apply_modification(Graph(2, [], ['a', 'b']), VertexAdd([0, 1], label='z'))
        self.assertEqual(g.vertex_count, 3)
        self.assertEqual(g.neighbors(2), frozenset([0, 1]))
        self.assertEqual(g.labels, ('a', 'b', 'z'))
        self.assertRaises(ModificationInvalid, apply_modification, Graph(2), VertexAdd([2]))

    def test_input_untouched(self):
        g = path_graph(3)
        apply_modification(g, EdgeAdd(0, 2))
        self.assertEqual(g.edge_count(), 2)

class ComponentTester(unittest.TestCase):
    def test_components(self):
        g = Graph(5, [(3, 4), (0, 2)])
        self.assertEqual(components(g), [[0, 2], [1], [3, 4]])

    def test_component_of(self):
        g = Graph(5, [(3, 4), (0, 2)])
        sub, index_map = component_of(g, (3, 4))
        self.assertEqual(index_map, [3, 4])
        self.assertEqual(sub, Graph(2, [(0, 1)]))
        self.assertRaises(GraphError, component_of, g, (0, 1))

    def test_disjoint_union(self):
        g = disjoint_union(path_graph(2), complete_graph(3))
        self.assertEqual(g.vertex_count, 5)
        self.assertEqual(g.sorted_edges(), [(0, 1), (2, 3), (2, 4), (3, 4)])
        self.assertIsNone(g.labels)

class ReoptInstanceTester(unittest.TestCase):
    def test_parameter_direction(self):
        g = path_graph(3)
        inst = ReoptInstance(g, 2, [1], EdgeAdd(0, 2), 1, oracles.VERTEX_COVER)
        self.assertTrue(inst.has_witness)
        self.assertEqual(inst.modified, complete_graph(3))
        self.assertRaises(GraphError, ReoptInstance, g, 1, None, EdgeAdd(0, 2), 2, oracles.VERTEX_COVER)
        self.assertRaises(GraphError, ReoptInstance, g, 2, None, EdgeAdd(0, 2), 1, oracles.CLIQUE)

    def test_bad_modification(self):
        self.assertRaises(ModificationInvalid, ReoptInstance, path_graph(3), 1, None,
                          EdgeAdd(0, 1), 1, oracles.VERTEX_COVER)

class KernelResultTester(unittest.TestCase):
    def test_decided(self):
        self.assertEqual(Decided(True, 'a'), Decided(True, 'b'))
        self.assertEqual(Decided(False).materialize('yes', 'no'), 'no')

    def test_reduced_bound(self):
        self.assertRaises(GraphError, Reduced, complete_graph(4), 1, 3)
        self.assertRaises(GraphError, Reduced, complete_graph(2), -1, 3)
        r = Reduced(complete_graph(3), 1, 3, 'case3')
        self.assertFalse(r.is_decided)
        self.assertEqual(r.branch, 'case3')

if __name__ == '__main__':
    unittest.main()
