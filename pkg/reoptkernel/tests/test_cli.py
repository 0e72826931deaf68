import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

from reoptkernel.__main__ import run_command
from reoptkernel.filters.base_filters import EXIT_FAILURE, EXIT_OK, EXIT_SIZE_GUARD, EXIT_USAGE, EXIT_VALIDATION
from reoptkernel.document import parse_instance
from reoptkernel.graph_core import Graph

CASE3 = {"problem": "vertex_cover", "n": 5, "edges": [[0, 2], [0, 3], [1, 4]], "k": 2,
         "witness": [0, 1], "modification": {"type": "edge_add", "u": 3, "v": 4}}

STAR = {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]], "k": 1}

class CliTester(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def write(self, name, data):
        path = os.path.join(self.tmpdir, name)
        with open(path, 'w') as f:
            json.dump(data, f)
        return path

    def run_chain(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run_command(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_reopt_kernel(self):
        path = self.write('case3.json', CASE3)
        code, out, err = self.run_chain('--load_instance', path, '--kernelize_vc', 'reopt2k',
                                        '--verify_kernel_equivalence', '-', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)
        self.assertEqual(report['kernel']['n'], 3)
        self.assertEqual(report['kernel']['k'], 1)
        self.assertEqual(report['kernel']['branch'], 'case3')
        self.assertEqual(report['kernel']['mode'], 'reopt2k')
        self.assertTrue(report['verify_kernel_equivalence']['equivalent'])

    def test_classic_kernel(self):
        path = self.write('star.json', STAR)
        code, out, err = self.run_chain('--load_instance', path, '--kernelize_vc', 'classic3k',
                                        '--verify_kernel_equivalence', '-', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['kernel']['mode'], 'classic3k')

    def test_crown(self):
        path = self.write('star.json', STAR)
        code, out, err = self.run_chain('--load_instance', path, '--find_crown', '--verify_crown',
                                        '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)
        self.assertEqual(report['crown_lemma']['outcome'], 'crown')
        self.assertTrue(report['verify_crown']['valid'])

    def test_verify_crown_without_crown(self):
        path = self.write('star.json', STAR)
        code, out, err = self.run_chain('--load_instance', path, '--verify_crown')
        self.assertEqual(code, EXIT_USAGE)

    def test_usage_errors(self):
        code, out, err = self.run_chain()
        self.assertEqual(code, EXIT_USAGE)
        code, out, err = self.run_chain('--print_report')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('first argument', err)
        code, out, err = self.run_chain('--random_graph', '-3', '0.5', '1')
        self.assertEqual(code, EXIT_USAGE)
        code, out, err = self.run_chain('--random_graph', '5', '0.5', '1', '--kernelize_vc', 'linear')
        self.assertEqual(code, EXIT_USAGE)
        code, out, err = self.run_chain('--random_graph', '5', '0.5', '1', '--random_graph', '5', '0.5', '1')
        self.assertEqual(code, EXIT_USAGE)

    def test_missing_file(self):
        code, out, err = self.run_chain('--load_instance', os.path.join(self.tmpdir, 'nothing.json'))
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn("'load_instance'", err)

    def test_parse_error(self):
        path = os.path.join(self.tmpdir, 'broken.json')
        with open(path, 'w') as f:
            f.write('{"n": 2, "edges": [[0, 5]]}')
        code, out, err = self.run_chain('--load_instance', path)
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn("field 'edges'", err)

    def test_size_guard(self):
        code, out, err = self.run_chain('--random_graph', '25', '0.5', '1', '--solve')
        self.assertEqual(code, EXIT_SIZE_GUARD)

    def test_solve(self):
        path = self.write('case3.json', CASE3)
        code, out, err = self.run_chain('--load_instance', path, '--solve', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)['solve']
        self.assertEqual(report['value'], 2)
        self.assertTrue(report['member'])
        self.assertEqual(report['modified']['value'], 2)

    def test_verify_solution(self):
        path = self.write('bad.json', {"n": 2, "edges": [[0, 1]], "k": 1, "witness": []})
        code, out, err = self.run_chain('--load_instance', path, '--verify_solution')
        self.assertEqual(code, EXIT_VALIDATION)
        path = self.write('costly.json', {"n": 2, "edges": [[0, 1]], "k": 1, "witness": [0, 1]})
        code, out, err = self.run_chain('--load_instance', path, '--verify_solution')
        self.assertEqual(code, EXIT_VALIDATION)
        path = self.write('good.json', {"n": 2, "edges": [[0, 1]], "k": 1, "witness": [1]})
        code, out, err = self.run_chain('--load_instance', path, '--verify_solution')
        self.assertEqual(code, EXIT_OK, err)

    def test_solve_then_verify(self):
        code, out, err = self.run_chain('--random_graph', '8', '0.4', '3', '--solve', '--verify_solution')
        self.assertEqual(code, EXIT_OK, err)

    def test_set_parameter(self):
        path = self.write('star.json', STAR)
        code, out, err = self.run_chain('--load_instance', path, '--set_parameter', '0',
                                        '--kernelize_vc', 'classic3k', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['kernel']['kind'], 'decided')
        self.assertFalse(json.loads(out)['kernel']['answer'])

    def test_save_and_reload(self):
        source = self.write('case3.json', CASE3)
        target = os.path.join(self.tmpdir, 'kernel.json')
        code, out, err = self.run_chain('--load_instance', source, '--kernelize_vc', 'reopt2k',
                                        '--save_instance', target)
        self.assertEqual(code, EXIT_OK, err)
        with open(target) as f:
            doc = parse_instance(f.read())
        self.assertEqual(doc.result.graph, Graph(3, [(0, 2), (1, 2)]))

        code, out, err = self.run_chain('--load_instance', source, '--verify_kernel_equivalence', target)
        self.assertEqual(code, EXIT_OK, err)

        code, out, err = self.run_chain('--load_instance', source, '--save_instance', target)
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('already exists', err)

    def test_save_dimacs(self):
        target = os.path.join(self.tmpdir, 'star.col')
        code, out, err = self.run_chain('--load_instance', self.write('star.json', STAR), '--save_dimacs', target)
        self.assertEqual(code, EXIT_OK, err)
        code, out, err = self.run_chain('--load_instance', target, '--print_instance')
        self.assertEqual(code, EXIT_OK, err)
        doc = json.loads(out)
        self.assertEqual(doc['n'], 4)
        self.assertEqual(doc['edges'], [[0, 1], [0, 2], [0, 3]])

    def test_gadget(self):
        code, out, err = self.run_chain('--gadget_extremal', 'ivst', '3', '--print_instance')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['n'], 5)

    def test_ivst_reopt_kernel(self):
        path = self.write('ivst.json', {"problem": "ivst", "n": 4, "edges": [[0, 1], [2, 3]], "k": 1,
                                        "modification": {"type": "edge_add", "u": 1, "v": 2}})
        code, out, err = self.run_chain('--load_instance', path, '--reopt_kernelize', 'ivst', 'or', 'c',
                                        '--verify_kernel_equivalence', '-', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        kernel = json.loads(out)['kernel']
        self.assertEqual(kernel['kind'], 'decided')
        self.assertTrue(kernel['answer'])

    def test_reopt_kernelize_checks_witness(self):
        ivst = {"problem": "ivst", "n": 4, "edges": [[0, 1], [1, 2]], "k": 1,
                "modification": {"type": "edge_add", "u": 2, "v": 3}}
        path = self.write('leaf.json', dict(ivst, witness=[[0, 1]]))
        for mode in ['ivst', 'generic']:
            code, out, err = self.run_chain('--load_instance', path, '--reopt_kernelize', mode, 'or', 'c')
            self.assertEqual(code, EXIT_VALIDATION, mode)
            self.assertIn('witness', err)
        path = self.write('path.json', dict(ivst, witness=[[0, 1], [1, 2]]))
        code, out, err = self.run_chain('--load_instance', path, '--reopt_kernelize', 'ivst', 'or', 'c',
                                        '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        kernel = json.loads(out)['kernel']
        self.assertEqual((kernel['answer'], kernel['branch']), (True, 'witness-yes'))

    def test_reopt_kernelize_needs_graph(self):
        path = self.write('sc.json', {"problem": "set_cover", "k": 1,
                                      "set_cover": {"universe": 2, "family": [[1, 2]]},
                                      "modification": {"type": "edge_add", "u": 0, "v": 1}})
        code, out, err = self.run_chain('--load_instance', path, '--reopt_kernelize', 'generic', 'or', 'c')
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('no graph', err)
        self.assertNotIn('Traceback', err)

    def test_materialize_reduced_kernel(self):
        path = self.write('case3.json', CASE3)
        code, out, err = self.run_chain('--load_instance', path, '--kernelize_vc', 'reopt2k',
                                        '--materialize_kernel', '--solve', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)
        self.assertEqual(report['materialize_kernel'], {'n': 3, 'k': 1, 'branch': 'case3'})
        self.assertEqual((report['solve']['value'], report['solve']['member']), (1, True))
        self.assertNotIn('modified', report['solve'])

    def test_materialize_decided_kernel(self):
        path = self.write('ivst.json', {"problem": "ivst", "n": 4, "edges": [[0, 1], [2, 3]], "k": 1,
                                        "modification": {"type": "edge_add", "u": 1, "v": 2}})
        code, out, err = self.run_chain('--load_instance', path, '--reopt_kernelize', 'ivst', 'or', 'c',
                                        '--materialize_kernel', '--solve', '--print_instance')
        self.assertEqual(code, EXIT_OK, err)
        doc = json.loads(out)
        self.assertEqual((doc['n'], doc['edges'], doc['k']), (3, [[0, 1], [1, 2]], 1))
        self.assertNotIn('modification', doc)

        path = self.write('star.json', STAR)
        code, out, err = self.run_chain('--load_instance', path, '--set_parameter', '0',
                                        '--kernelize_vc', 'classic3k', '--materialize_kernel', '--solve',
                                        '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)['solve']
        self.assertEqual((report['value'], report['k'], report['member']), (1, 0, False))

    def test_materialize_without_kernel(self):
        code, out, err = self.run_chain('--load_instance', self.write('star.json', STAR), '--materialize_kernel')
        self.assertEqual(code, EXIT_USAGE)

    def save_kernel(self, name, data, *kernel):
        target = os.path.join(self.batch, name)
        code, out, err = self.run_chain('--load_instance', self.write(name, data), *(kernel + ('--save_instance', target)))
        self.assertEqual(code, EXIT_OK, err)

    def test_verify_kernel_directory(self):
        self.batch = os.path.join(self.tmpdir, 'kernels')
        os.mkdir(self.batch)
        self.save_kernel('case3.json', CASE3, '--kernelize_vc', 'reopt2k')
        self.save_kernel('star.json', STAR, '--kernelize_vc', 'classic3k')
        self.save_kernel('ivst.json', {"problem": "ivst", "n": 4, "edges": [[0, 1], [2, 3]], "k": 1,
                                       "modification": {"type": "edge_add", "u": 1, "v": 2}},
                         '--reopt_kernelize', 'ivst', 'or', 'c')
        for seed in range(5):
            target = os.path.join(self.batch, 'random%d.json' % seed)
            code, out, err = self.run_chain('--random_graph', '9', '0.3', str(seed), '--set_parameter', '3',
                                            '--kernelize_vc', 'classic3k', '--save_instance', target)
            self.assertEqual(code, EXIT_OK, err)
        with open(os.path.join(self.batch, 'notes.txt'), 'w') as f:
            f.write('not a document')

        source = self.write('case3.json', CASE3)
        code, out, err = self.run_chain('--load_instance', source, '--verify_kernel_equivalence', self.batch,
                                        '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)['verify_kernel_equivalence']
        self.assertEqual(report['count'], 8)
        self.assertTrue(report['equivalent'])
        self.assertTrue(all(d['equivalent'] for d in report['documents']))
        self.assertEqual(report['documents'][0]['file'], 'case3.json')

        with open(os.path.join(self.batch, 'wrong.json'), 'w') as f:
            json.dump(dict(CASE3, result={"kind": "decided", "answer": False}), f)
        code, out, err = self.run_chain('--load_instance', source, '--verify_kernel_equivalence', self.batch)
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertIn('wrong.json', err)

    def test_verify_empty_directory(self):
        empty = os.path.join(self.tmpdir, 'empty')
        os.mkdir(empty)
        code, out, err = self.run_chain('--load_instance', self.write('star.json', STAR),
                                        '--verify_kernel_equivalence', empty)
        self.assertEqual(code, EXIT_FAILURE)

    def test_negative_instance_has_no_kernel(self):
        path = self.write('path.json', {"n": 3, "edges": [[0, 1], [1, 2]], "k": 2})
        code, out, err = self.run_chain('--load_instance', path, '--gadget_negative', 'longest_path', 'edge_del',
                                        '--reopt_kernelize', 'generic', 'or', 'c')
        self.assertEqual(code, EXIT_FAILURE)
        code, out, err = self.run_chain('--load_instance', path, '--gadget_negative', 'longest_path', 'edge_del',
                                        '--verify_solution', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['gadget']['n'], 6)

    def test_clique_gadget(self):
        path = self.write('edge.json', {"n": 2, "edges": [[0, 1]], "k": 2})
        code, out, err = self.run_chain('--load_instance', path, '--gadget_clique_reopt', 'edge_add',
                                        '--solve', '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)['solve']
        self.assertEqual((report['value'], report['k']), (3, 3))
        self.assertEqual((report['modified']['value'], report['modified']['k']), (4, 4))
        self.assertTrue(report['modified']['member'])

    def test_setcover_gadget(self):
        path = self.write('sc.json', {"problem": "set_cover", "k": 1,
                                      "set_cover": {"universe": 2, "family": [[1], [2], [1, 2]]}})
        code, out, err = self.run_chain('--load_instance', path, '--gadget_setcover_cvc', '--verify_solution',
                                        '--print_report')
        self.assertEqual(code, EXIT_OK, err)
        report = json.loads(out)
        self.assertEqual(report['gadget']['n'], 27)
        self.assertEqual(report['gadget']['violations'], [])
        self.assertTrue(report['gadget']['s2_valid'])
        self.assertEqual(report['verify_solution']['cost'], 14)

if __name__ == '__main__':
    unittest.main()
