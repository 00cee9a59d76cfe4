import pytest

from accyclic.__main__ import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    main,
)
from accyclic.config_file import DATA_DIR
from accyclic.shell import remote

GROUPS = DATA_DIR / 'groups'

PSL3_RULE = '''
[[rule]]
id = "psl3-nonweil"
family = "PSL"
dim = "gmst2.A"
alpha = "generic"
cap = "mu"
cite = "nonW"
key = ["q"]
expect = [5, 7, 13]
fixed = { n = 3 }
grid = [{ axis = "q", kind = "prime_powers", lo = 5, hi = 200 }]
window = [{ axis = "q", kind = "prime_powers", lo = 201, hi = 260 }]
'''


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


def test_no_subcommand(capsys):
    code, _, err = _run(capsys)
    assert code == EXIT_USAGE
    assert 'usage' in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(['eta'])
    assert info.value.code == 2


def test_eta(capsys, tmp_path):
    assert _run(capsys, 'eta', '--path', str(tmp_path), '2', '2', '3')[:2] == (EXIT_OK, ['8'])
    assert _run(capsys, 'eta', '--path', str(tmp_path), '--oracle', '2', '2', '3')[:2] == (EXIT_OK, ['8'])


def test_eta_oracle_covers_gl_only(capsys, tmp_path):
    code, out, err = _run(capsys, 'eta', '--path', str(tmp_path), '--oracle', '--family', 'sl', '2', '2', '3')
    assert code == EXIT_USAGE
    assert out == []
    assert 'accyclic: error:' in err


def test_cap(capsys, tmp_path):
    assert _run(capsys, 'cap', '--path', str(tmp_path), '2B2', '8')[:2] == (EXIT_OK, ['2B2(8): cap=39 cite=exc:table2'])
    assert _run(capsys, 'cap', '--path', str(tmp_path), 'PSL', '3', '2')[:2] == (EXIT_OK, ['PSL(3 2): cap=7 cite=nonW:mu'])
    assert _run(capsys, 'cap', '--path', str(tmp_path), '--format', 'tsv', 'G2', '3')[:2] == (
        EXIT_OK, ['G2\t3\t26\texc:table2'])
    assert _run(capsys, 'cap', '--path', str(tmp_path), '2B2', '8', '2')[0] == EXIT_USAGE
    assert _run(capsys, 'cap', '--path', str(tmp_path), '2B2', '4')[0] == EXIT_USAGE


def test_test_matrix(capsys, tmp_path):
    ident = tmp_path / 'ident.gfmat'
    ident.write_text('gfmat 2 1 2 2\n1 0\n0 1\n')
    split = tmp_path / 'split.gfmat'
    split.write_text('gfmat 3 1 4 4\n1 0 0 0\n0 1 0 0\n0 0 2 0\n0 0 0 2\n')
    code, out, _ = _run(capsys, 'test-matrix', '--path', str(tmp_path), str(ident), str(split))
    assert code == EXIT_OK
    assert out[0].startswith(f'{ident}: almost_cyclic=true mode=strict')
    assert 'scalar=true' in out[0]
    assert out[1].startswith(f'{split}: almost_cyclic=false mode=strict')


def test_test_matrix_reads_several_meataxe_matrices(capsys, tmp_path):
    gens = tmp_path / 'gens.txt'
    gens.write_text('1 2 2 2\n11\n01\n1 2 2 2\n10\n11\n')
    code, out, _ = _run(capsys, 'test-matrix', '--path', str(tmp_path), '--format', 'tsv', str(gens))
    assert code == EXIT_OK
    assert [line.split('\t')[:3] for line in out] == [
        [f'{gens}#0', 'true', 'strict'],
        [f'{gens}#1', 'true', 'strict'],
    ]


def test_test_matrix_takes_the_mode_from_the_config(capsys, tmp_path):
    (tmp_path / '.accyclic.toml').write_text('mode = "appendix"\n')
    ident = tmp_path / 'ident.gfmat'
    ident.write_text('gfmat 2 1 1 1\n1\n')
    code, out, _ = _run(capsys, 'test-matrix', '--path', str(tmp_path), str(ident))
    assert code == EXIT_OK
    assert 'mode=appendix' in out[0]
    code, out, _ = _run(capsys, 'test-matrix', '--path', str(tmp_path), '--mode', 'oracle', str(ident))
    assert 'mode=oracle' in out[0]


def test_test_matrix_bad_file(capsys, tmp_path):
    bad = tmp_path / 'bad.gfmat'
    bad.write_text('gfmat 2 1 1 1\n7\n')
    code, _, err = _run(capsys, 'test-matrix', '--path', str(tmp_path), str(bad))
    assert code == EXIT_USAGE
    assert 'line 2' in err


def test_test_matrix_negative_shape(capsys, tmp_path):
    bad = tmp_path / 'neg.gfmat'
    bad.write_text('gfmat 2 1 -2 -2\n1 0 0 1\n')
    code, out, err = _run(capsys, 'test-matrix', '--path', str(tmp_path), str(bad))
    assert code == EXIT_USAGE
    assert out == []
    assert err.startswith('accyclic: error:')
    assert 'must not be negative' in err


def test_scan(capsys, tmp_path):
    code, out, _ = _run(capsys, 'scan', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl3-2.group'),
                        '--expect', 'almost-cyclic')
    assert code == EXIT_OK
    assert out[0] == 'group=GL3(2) mode=strict complete=true surveyed=104 seed=-'
    assert [line.split(' ')[0] for line in out[1:]] == ['order=3', 'order=7', 'order=7']


def test_scan_tsv(capsys, tmp_path):
    code, out, _ = _run(capsys, 'scan', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl3-2.group'),
                        '--format', 'tsv')
    assert code == EXIT_OK
    assert [line.split('\t')[0] for line in out] == ['3', '7', '7']
    assert out[0].split('\t')[2:5] == ['56', 'almost-cyclic', 'almost-cyclic']


def test_scan_expectation_failure(capsys, tmp_path):
    code, out, _ = _run(capsys, 'scan', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl4-2.group'),
                        '--orders', '2', '--expect', 'almost-cyclic')
    assert code == EXIT_CHECK_FAILED
    assert 'strict=INCONSISTENT' in out[1]


def test_scan_without_expectation_exits_0(capsys, tmp_path):
    code, _, _ = _run(capsys, 'scan', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl4-2.group'),
                      '--orders', '2')
    assert code == EXIT_OK


def test_scan_sampling_is_reproducible(capsys, tmp_path):
    argv = ['scan', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl3-2.group'), '--sample',
            '--samples', '300', '--seed', '5']
    code, first, _ = _run(capsys, *argv)
    assert code == EXIT_OK
    assert first[0].startswith('group=GL3(2) mode=strict complete=false')
    assert first[0].endswith('seed=5')
    assert _run(capsys, *argv)[1] == first


def test_screen(capsys, tmp_path):
    code, out, _ = _run(capsys, 'screen', '--path', str(tmp_path), '--rule', 'psl3-nonweil')
    assert code == EXIT_OK
    assert out == ['psl3-nonweil: status=ok survivors={5, 7, 13} expected={5, 7, 13} passed=true']


def test_screen_grid_override(capsys, tmp_path):
    code, out, _ = _run(capsys, 'screen', '--path', str(tmp_path), '--rule', 'psl3-nonweil', '--grid', 'q=5..7',
                        '--format', 'tsv')
    assert code == EXIT_OK
    assert out == ['psl3-nonweil\tok\t{5, 7}\t{5, 7, 13}']


def test_screen_usage_errors(capsys, tmp_path):
    assert _run(capsys, 'screen', '--path', str(tmp_path), '--grid', 'q=5..7')[0] == EXIT_USAGE
    assert _run(capsys, 'screen', '--path', str(tmp_path), '--rule', 'psl9-nonweil')[0] == EXIT_USAGE
    assert _run(capsys, 'screen', '--path', str(tmp_path), '--rule', 'psl3-nonweil', '--grid', 'r=1..2')[0] == EXIT_USAGE


def test_screen_reports_a_failing_rule(capsys, tmp_path):
    registry = tmp_path / 'registry.toml'
    registry.write_text(PSL3_RULE.replace('expect = [5, 7, 13]', 'expect = [5, 7]'))
    code, out, _ = _run(capsys, 'screen', '--path', str(tmp_path), '--registry', str(registry))
    assert code == EXIT_CHECK_FAILED
    assert out[0].endswith('passed=false')


def _small_fixtures(tmp_path, histogram):
    registry = tmp_path / 'registry.toml'
    registry.write_text(PSL3_RULE)
    fixtures = tmp_path / 'fixtures.toml'
    fixtures.write_text(
        '[[scan]]\n'
        'id = "gl2-2"\n'
        f'group = "{GROUPS / "gl2-2.group"}"\n'
        'order = 6\n'
        f'histogram = {histogram}\n'
    )
    return ['--registry', str(registry), '--fixtures', str(fixtures)]


def test_fixtures_verify(capsys, tmp_path):
    paths = _small_fixtures(tmp_path, '{ 1 = 1, 2 = 3, 3 = 2 }')
    code, out, _ = _run(capsys, 'fixtures', '--path', str(tmp_path), 'verify', *paths)
    assert code == EXIT_OK
    assert out[0] == 'PASS rule:psl3-nonweil: survivors {5, 7, 13}'
    assert out[-1].startswith('fixtures: ')
    assert all(line.startswith('PASS ') for line in out[:-1])


def test_fixtures_verify_names_the_failure(capsys, tmp_path):
    paths = _small_fixtures(tmp_path, '{ 1 = 1, 2 = 2, 3 = 3 }')
    code, out, _ = _run(capsys, 'fixtures', '--path', str(tmp_path), 'verify', *paths)
    assert code == EXIT_CHECK_FAILED
    failures = [line for line in out if line.startswith('FAIL')]
    assert len(failures) == 1
    assert failures[0].startswith('FAIL scan:gl2-2:histogram: orders [2, 3] differ')


def test_fixtures_list(capsys, tmp_path):
    code, out, _ = _run(capsys, 'fixtures', '--path', str(tmp_path), 'list')
    assert code == EXIT_OK
    assert 'rule:psl3-nonweil\tPSL\tnonW' in out
    assert 'scan:sp6-2\tsp6-2.group\tfull' in out


def test_enumerate(capsys, tmp_path):
    code, out, _ = _run(capsys, 'enumerate', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl2-2.group'))
    assert code == EXIT_OK
    assert out == ['group=GL2(2) order=6', '  1: 1', '  2: 3', '  3: 2']


def test_enumerate_order_mismatch(capsys, tmp_path):
    wrong = tmp_path / 'wrong.group'
    wrong.write_text((GROUPS / 'gl2-2.group').read_text().replace('GL2(2) 6', 'GL2(2) 7'))
    code, out, _ = _run(capsys, 'enumerate', '--path', str(tmp_path), '--gens', str(wrong), '--format', 'tsv')
    assert code == EXIT_CHECK_FAILED
    assert out == ['1\t1', '2\t3', '3\t2']


def test_enumerate_cap(capsys, tmp_path):
    code, _, _ = _run(capsys, 'enumerate', '--path', str(tmp_path), '--gens', str(GROUPS / 'gl3-2.group'),
                      '--cap', '100')
    assert code == EXIT_USAGE


def test_fetch_into_the_cache(capsys, tmp_path, monkeypatch):
    (tmp_path / '.accyclic.toml').write_text('')

    def fake_download(url, path):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(url)

    monkeypatch.setattr(remote, 'download', fake_download)
    code, out, _ = _run(capsys, 'fetch', '--path', str(tmp_path), 'https://example.org/m11.txt', 'm11.txt')
    assert code == EXIT_OK
    dest = tmp_path.resolve() / '.accyclic' / 'cache' / 'm11.txt'
    assert out == [str(dest)]
    assert dest.read_text() == 'https://example.org/m11.txt'
