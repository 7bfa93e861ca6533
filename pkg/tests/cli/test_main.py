import pytest
import json
import os

from flexbook.cli.main import _main, build_parser, write_output
from flexbook.fixtures import bundled_problem_path, bundled_problem_paths

class TestMain:

    def test_text_output(self, capsys):
        assert _main(['homology', bundled_problem_path('rp2')]) == 0
        out = capsys.readouterr().out
        assert out.startswith('[chain_homology] rp2.json')
        assert 'H_0 = Z, H_1 = Z/2, H_2 = 0' in out

    def test_json_is_deterministic(self, capsys):
        path = bundled_problem_path('annulus_twist')
        assert _main(['openbook', path, '--json']) == 0
        first = capsys.readouterr().out
        assert _main(['openbook', path, '--json']) == 0
        second = capsys.readouterr().out
        assert first == second
        document = json.loads(first)
        assert document['status'] == 'ok'
        assert document['result']['homology']['groups'][1] == {'free_rank': 0, 'torsion': ['3']}

    def test_tag_option(self, capsys):
        assert _main(['openbook', bundled_problem_path('annulus_twist'), '--tag', 'n=7']) == 0
        assert 'H_1(M) = Z/7' in capsys.readouterr().out
        assert _main(['openbook', bundled_problem_path('annulus_twist'), '--tag', 'n']) == 2

    def test_errors_go_to_stderr(self, tmp_path, capsys):
        path = tmp_path / 'broken.json'
        path.write_text('{')
        assert _main(['homology', str(path)]) == 2
        captured = capsys.readouterr()
        assert captured.out == ''
        assert '[error 2] broken.json' in captured.err

        assert _main(['homology', str(path), '--json']) == 2
        document = json.loads(capsys.readouterr().out)
        assert document['status'] == 'error' and document['exit_code'] == 2

    def test_directory_json(self, tmp_path, capsys):
        assert _main(['loop', os.path.dirname(bundled_problem_path('loop_swap')), '--json']) == 2
        document = json.loads(capsys.readouterr().out)
        loops = [r for r in document['reports'] if r['status'] == 'ok']
        assert {r['source'] for r in loops} == {'loop_identity.json', 'loop_rotation.json', 'loop_swap.json', 'loop_transvection.json'}

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / 'report.json'
        assert _main(['obstruct', bundled_problem_path('rp7_obstruction'), '--json', '--output', str(target)]) == 0
        assert capsys.readouterr().out == ''
        assert json.loads(target.read_text())['result']['verdict']['witness'] == ['2']
        assert os.listdir(tmp_path) == ['report.json']

    def test_write_output_replaces(self, tmp_path):
        target = tmp_path / 'out.txt'
        target.write_text('old')
        write_output(str(target), 'new\n')
        assert target.read_text() == 'new\n'

    def test_selftest(self, capsys):
        assert _main(['selftest']) == 0
        n = len(bundled_problem_paths())
        assert f'{n}/{n} bundled problems reproduced' in capsys.readouterr().out
        assert _main(['selftest', '--json']) == 0
        assert json.loads(capsys.readouterr().out)['passed']

    def test_parser(self):
        args = build_parser().parse_args(['obstruct', 'x.json', '--force', '--tag', 'p=3', '--tag', 'q=1'])
        assert args.force and args.tag == ['p=3', 'q=1']
        with pytest.raises(SystemExit):
            build_parser().parse_args(['surgery', 'x.json'])

    def test_variation_matrix_monodromy(self, tmp_path, capsys):
        page = {'complex': {'ranks': [2, 3, 1], 'boundaries': [[[0, 0, -1], [0, 0, 1]], [[1], [-1], [0]]]},
                'sub_indices': [[0, 1], [0, 1], []], 'q': 1}
        path = tmp_path / 'lens.json'
        path.write_text(json.dumps({'schema_version': '1.0', 'kind': 'open_book',
                                    'payload': {'page': page,
                                                'monodromy': {'variation_matrix': {'rows': 1, 'cols': 1, 'entries': [['5']]}}}}))
        assert _main(['openbook', str(path)]) == 0
        out = capsys.readouterr().out
        assert 'H_1(M) = Z/5' in out

        assert _main(['openbook', str(path), '--json']) == 0
        document = json.loads(capsys.readouterr().out)
        groups = document['result']['homology']['groups']
        assert groups == [{'free_rank': 1, 'torsion': []}, {'free_rank': 0, 'torsion': ['5']},
                          {'free_rank': 0, 'torsion': []}, {'free_rank': 1, 'torsion': []}]

    def test_malformed_configuration_is_input_error(self, tmp_path, capsys):
        cyclic = tmp_path / 'cyclic.json'
        cyclic.write_text(json.dumps({'schema_version': '1.0', 'kind': 'loop', 'tags': {'a': '{b}', 'b': '{a}'},
                                      'payload': {'g': '{a}', 'q_parity': 1, 'matrix': [[1, 0], [0, 1]]}}))
        assert _main(['loop', str(cyclic)]) == 2

        formatted = tmp_path / 'formatted.json'
        formatted.write_text(json.dumps({'schema_version': '1.0', 'kind': 'loop', 'tags': {'g': 1},
                                         'payload': {'g': 1, 'q_parity': 1, 'label': 'g={g:zz}', 'matrix': [[1, 0], [0, 1]]}}))
        assert _main(['loop', str(formatted)]) == 2

        latin = tmp_path / 'latin.json'
        latin.write_bytes(b'{"schema_version": "1.0", "kind": "loop", "payload": {"label": "\xe9"}}')
        assert _main(['loop', str(latin)]) == 2
        assert '[error 2] latin.json' in capsys.readouterr().err
