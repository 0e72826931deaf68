import random
import unittest

import networkx as nx

from reoptkernel.crown import CrownDecomposition, PreconditionViolated, crown_or_matching, is_crown, \
    validate_crown
from reoptkernel.graph_core import Graph, complete_graph, from_networkx
from reoptkernel.matching import Matching

def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

class ValidateCrownTester(unittest.TestCase):
    def test_star(self):
        cd = CrownDecomposition([1, 2, 3], [0], [], Matching([(0, 1)]))
        self.assertEqual(validate_crown(star(3), cd), [])
        self.assertTrue(is_crown(star(3), cd))

    def test_not_independent(self):
        cd = CrownDecomposition([0, 1], [2], [], Matching([(1, 2)]))
        self.assertIn("C not independent", validate_crown(complete_graph(3), cd))

    def test_edge_to_rest(self):
        # a-b-c-d
        p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
        cd = CrownDecomposition([0, 3], [1], [2], Matching([(0, 1)]))
        violations = validate_crown(p4, cd)
        self.assertEqual(violations, ["edge between C and R (2, 3)"])

    def test_every_clause(self):
        g = Graph(3, [(0, 1)])
        cd = CrownDecomposition([], [0], [1], Matching())
        violations = validate_crown(g, cd)
        self.assertIn("C is empty", violations)
        self.assertIn("C, H, R do not partition V", violations)
        self.assertTrue(any(v.startswith("head not saturated") for v in violations))

class CrownLemmaTester(unittest.TestCase):
    def test_star(self):
        cd = crown_or_matching(star(4), 1)
        self.assertIsInstance(cd, CrownDecomposition)
        self.assertEqual(cd.crown, frozenset([1, 2, 3, 4]))
        self.assertEqual(cd.head, frozenset([0]))
        self.assertEqual(cd.rest, frozenset())

    def test_two_edges(self):
        m = crown_or_matching(Graph(4, [(0, 1), (2, 3)]), 1)
        self.assertIsInstance(m, Matching)
        self.assertEqual(len(m), 2)

    def test_c4(self):
        m = crown_or_matching(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 1)
        self.assertIsInstance(m, Matching)
        self.assertEqual(len(m), 2)

    def test_preconditions(self):
        self.assertRaises(PreconditionViolated, crown_or_matching, Graph(5, [(0, 1)]), 1)
        self.assertRaises(PreconditionViolated, crown_or_matching, star(2), 1)

    def test_random_graphs(self):
        rnd = random.Random(11)
        checked = 0
        while checked < 500:
            n = rnd.randint(4, 14)
            h = nx.gnp_random_graph(n, rnd.choice([0.15, 0.25, 0.4]), seed=rnd.randint(0, 10 ** 6))
            h.remove_nodes_from([v for v in list(h.nodes()) if h.degree(v) == 0])
            g = from_networkx(h)
            if g.vertex_count < 4:
                continue
            k = rnd.randint(1, (g.vertex_count - 1) // 3)
            found = crown_or_matching(g, k)
            if isinstance(found, Matching):
                self.assertEqual(len(found), k + 1)
                self.assertTrue(found.is_valid_for(g))
            else:
                self.assertEqual(validate_crown(g, found), [])
            checked += 1

if __name__ == '__main__':
    unittest.main()
