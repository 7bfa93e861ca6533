import pytest
import json
import shutil

from flexbook.cli import (Problem, ProblemMeta, run_problem, run_command, cmd_homology, cmd_openbook, cmd_obstruct, cmd_loop,
                          cmd_selftest, compare_expected, collect_paths, validate_report, ErrorReport)
from flexbook.cli import problems
from flexbook.fixtures import bundled_problem_path, bundled_problem_paths
from flexbook.errors import InputError, InternalInvariantError

def write_problem(path, kind, payload, **extra):
    document = {'schema_version': '1.0', 'kind': kind, 'payload': payload}
    document.update(extra)
    path.write_text(json.dumps(document))
    return str(path)

ANNULUS = {
    'complex': {'ranks': [2, 3, 1], 'boundaries': [[[0, 0, -1], [0, 0, 1]], [[1], [-1], [0]]]},
    'sub_indices': [[0, 1], [0, 1], []],
    'q': 1,
}

def twist(n):
    return {'chain_map': [[[1, 0], [0, 1]], [[1, 0, n], [0, 1, 0], [0, 0, 1]], [[1]]]}

class TestProblems:

    def test_registry(self):
        assert set(Problem.subclasses) == {'chain_homology', 'double', 'open_book', 'obstruction', 'loop'}
        assert isinstance(Problem, ProblemMeta)
        with pytest.raises(InputError) as err:
            Problem.get_subclass('surgery')
        assert err.value.location == 'kind'

    def test_from_options(self):
        options = {'schema_version': '1.0', 'kind': 'open_book', 'payload': {'page': ANNULUS, 'monodromy': twist(2)}}
        problem = Problem.from_options(options)
        assert problem.kind == 'open_book'
        report = problem.run()
        assert report.data['homology']['groups'][1] == {'free_rank': 0, 'torsion': ['2']}

        with pytest.raises(InputError) as err:
            Problem.from_options({'kind': 'loop', 'payload': {}})
        assert err.value.location == 'schema_version'
        with pytest.raises(InputError) as err:
            Problem.from_options({'schema_version': '2.0', 'kind': 'loop', 'payload': {}})
        assert err.value.location == 'schema_version'
        with pytest.raises(InputError) as err:
            Problem.from_options({'schema_version': '1.0', 'kind': 'loop', 'payload': []})
        assert err.value.location == 'payload'

    def test_payload_locations(self):
        options = {'schema_version': '1.0', 'kind': 'open_book', 'payload': {'page': ANNULUS}}
        with pytest.raises(InputError) as err:
            Problem.from_options(options)
        assert err.value.location == 'payload.monodromy'

        # moving the boundary circle is not a monodromy of the page
        moving = {'chain_map': [[[1, 0], [0, 1]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1]]]}
        options['payload']['monodromy'] = moving
        with pytest.raises(InputError) as err:
            Problem.from_options(options)
        assert err.value.location == 'payload.monodromy.chain_map'

        loop = {'schema_version': '1.0', 'kind': 'loop', 'payload': {'g': 1, 'q_parity': 3, 'matrix': [[1, 0], [0, 1]]}}
        with pytest.raises(InputError) as err:
            Problem.from_options(loop)
        assert err.value.location == 'payload.q_parity'

    def test_open_book_from_variation(self):
        options = {'schema_version': '1.0', 'kind': 'open_book', 'payload': {'page': ANNULUS, 'variation': [[4]]}}
        report = Problem.from_options(options).run()
        assert report.data['homology']['method_tags'] == ['formula', 'formula', 'duality', 'duality']
        assert 'blocks' not in report.data

        options['payload'] = {'page': ANNULUS, 'monodromy': {'variation_matrix': [[4]]}}
        nested = Problem.from_options(options).run()
        assert nested.data['homology'] == report.data['homology']

        options['payload']['monodromy'] = {'variation_matrix': {'rows': 1, 'cols': 1, 'entries': 4}}
        with pytest.raises(InputError) as err:
            Problem.from_options(options)
        assert err.value.location == 'payload.monodromy.variation_matrix.entries'

        options['payload']['monodromy'] = dict(twist(4), variation_matrix = [[4]])
        with pytest.raises(InputError) as err:
            Problem.from_options(options)
        assert err.value.location == 'payload.monodromy'

    def test_obstruction_descriptors(self):
        payload = {'hypotheses': {'dim': 7, 'c1_vanishes_on_spheres': True},
                   'manifold': {'type': 'homology', 'groups': [{'free_rank': 1}] + [{}] * 2 + [{'torsion': ['4']}] + [{}] * 3 + [{'free_rank': 1}]}}
        report = Problem.from_options({'schema_version': '1.0', 'kind': 'obstruction', 'payload': payload}).run()
        assert report.data['verdict']['witness'] == ['4']

        payload['manifold'] = {'type': 'homology', 'groups': [{}]}
        with pytest.raises(InputError) as err:
            Problem.from_options({'schema_version': '1.0', 'kind': 'obstruction', 'payload': payload})
        assert err.value.location == 'payload.manifold.groups'

        payload['manifold'] = {'type': 'connected_sum', 'summands': [{'type': 'homology', 'middle': {}}]}
        with pytest.raises(InputError) as err:
            Problem.from_options({'schema_version': '1.0', 'kind': 'obstruction', 'payload': payload})
        assert err.value.location == 'payload.manifold.summands[0].groups'

        payload['manifold'] = {'type': 'open_book', 'page': ANNULUS, 'monodromy': twist(1)}
        with pytest.raises(InputError) as err:
            Problem.from_options({'schema_version': '1.0', 'kind': 'obstruction', 'payload': payload})
        assert err.value.location == 'payload.manifold.page.q'

    def test_dimension_gate(self):
        problem = Problem.load(bundled_problem_path('annulus_obstruction'))
        report = problem.run()
        assert report.data['verdict']['status'] == 'INAPPLICABLE'
        assert report.data['middle_homology'] is None
        assert 'pipeline' not in report.data

        forced = Problem.load(bundled_problem_path('annulus_obstruction')).run(force = True)
        assert forced.data['verdict']['status'] == 'INAPPLICABLE'
        assert forced.data['middle_homology'] == {'free_rank': 0, 'torsion': ['3']}
        assert 'pipeline' in forced.data

class TestCommands:

    def test_homology(self):
        reports, code = cmd_homology(bundled_problem_path('rp2'))
        assert code == 0
        assert reports[0].data['homology'][1] == {'free_rank': 0, 'torsion': ['2']}
        assert reports[0].data['euler_characteristic'] == 1
        assert 'H_1 = Z/2' in reports[0].text()

    def test_tags_override(self):
        reports, code = cmd_openbook(bundled_problem_path('annulus_twist'), tags = {'n': 6})
        assert code == 0
        assert reports[0].data['homology']['groups'][1] == {'free_rank': 0, 'torsion': ['6']}

    def test_oracle_check(self):
        reports, _ = cmd_openbook(bundled_problem_path('annulus_twist'), oracle_check = True)
        assert reports[0].data['homology']['agreement'] == {'0': True, '1': True}
        reports, _ = cmd_openbook(bundled_problem_path('annulus_twist'))
        assert 'agreement' not in reports[0].data['homology']

    def test_obstruct_and_loop(self):
        reports, code = cmd_obstruct(bundled_problem_path('rp7_obstruction'))
        assert code == 0
        assert reports[0].data['verdict']['status'] == 'OBSTRUCTED'
        reports, code = cmd_loop(bundled_problem_path('loop_transvection'))
        assert reports[0].data['verdict']['order'] == 'INFINITE'

    def test_wrong_command(self):
        reports, code = cmd_openbook(bundled_problem_path('rp2'))
        assert code == 2
        assert isinstance(reports[0], ErrorReport)
        assert reports[0].to_json()['error']['location'] == 'kind'

    def test_malformed_files(self, tmp_path):
        broken = tmp_path / 'broken.json'
        broken.write_text('{"schema_version": "1.0", ')
        report, code = run_problem(str(broken))
        assert code == 2
        assert report.to_json()['error']['type'] == 'InputError'

        no_version = tmp_path / 'no_version.json'
        no_version.write_text(json.dumps({'kind': 'loop', 'payload': {}}))
        report, code = run_problem(str(no_version))
        assert code == 2
        assert report.to_json()['error']['location'] == 'schema_version'

        boundary = write_problem(tmp_path / 'not_a_complex.json', 'chain_homology',
                                 {'complex': {'ranks': [1, 1, 1], 'boundaries': [[[1]], [[1]]]}})
        report, code = run_problem(boundary)
        assert code == 2
        assert report.to_json()['error']['location'] == 'payload.complex.boundaries'

    def test_internal_errors(self, tmp_path, monkeypatch):
        def broken(*args, **kwargs):
            raise InternalInvariantError('formula and twisted-double homology disagree', witness = {1: ('Z', 'Z/2')})
        monkeypatch.setattr(problems, 'open_book_homology', broken)
        reports, code = cmd_openbook(bundled_problem_path('annulus_twist'))
        assert code == 3
        encoded = reports[0].to_json()
        assert encoded['exit_code'] == 3
        assert 'witness' in encoded['error']

        def crash(*args, **kwargs):
            raise ZeroDivisionError('division by zero')
        monkeypatch.setattr(problems, 'open_book_homology', crash)
        _, code = cmd_openbook(bundled_problem_path('annulus_twist'))
        assert code == 3

    def test_directory(self, tmp_path):
        shutil.copy(bundled_problem_path('rp2'), tmp_path / 'a.json')
        shutil.copy(bundled_problem_path('disk_pair'), tmp_path / 'b.json')
        (tmp_path / 'c.json').write_text('not json')
        (tmp_path / 'notes.txt').write_text('ignored')
        assert [p.rsplit('/', 1)[-1] for p in collect_paths(str(tmp_path))] == ['a.json', 'b.json', 'c.json']

        reports, code = run_command('homology', str(tmp_path))
        assert code == 2
        assert [r.source for r in reports] == ['a.json', 'b.json', 'c.json']
        assert isinstance(reports[2], ErrorReport)

    def test_missing_paths(self, tmp_path):
        reports, code = cmd_homology(str(tmp_path))
        assert code == 2
        reports, code = cmd_homology(str(tmp_path / 'nothing.json'))
        assert code == 2

class TestSelftest:

    def test_bundled_problems(self):
        results, code = cmd_selftest()
        assert code == 0, [r for r in results if not r['passed']]
        assert len(results) == len(bundled_problem_paths())

    def test_mismatch(self, tmp_path):
        path = write_problem(tmp_path / 'wrong.json', 'chain_homology',
                             {'complex': {'ranks': [1, 1], 'boundaries': [[[0]]]}},
                             expected = {'homology': ['Z', 'Z/2']})
        results, code = cmd_selftest([path])
        assert code == 3
        assert not results[0]['passed']
        assert 'homology' in results[0]['mismatches'][0]

    def test_compare_expected(self):
        reports, _ = cmd_obstruct(bundled_problem_path('lens_obstruction'))
        assert compare_expected({'status': 'OBSTRUCTED', 'witness': [5], 'middle': 'Z/5'}, reports[0]) == []
        assert compare_expected({'order': '2'}, reports[0]) == ['order: not reported']

class TestValidateReport:

    def test_rejects_undecodable_reports(self):
        report = {'kind': 'chain_homology', 'status': 'ok', 'result': {'homology': [{'free_rank': -1}]}}
        with pytest.raises(InternalInvariantError):
            validate_report(report)
        with pytest.raises(InternalInvariantError):
            validate_report({'kind': 'loop', 'status': 'ok', 'result': {'verdict': {'status': 'MAYBE'}}})
        validate_report({'status': 'error'})
