import json
from math import factorial

import pytest

import config
import main


def run_json(capsys, *argv):
    status = main.main(list(argv) + ['--json'])
    captured = capsys.readouterr()
    return status, json.loads(captured.out) if captured.out else None, captured.err


def test_info_json(capsys) -> None:
    status, doc, _ = run_json(capsys, 'info', '--gens', '3,10,11')
    assert status == config.EXIT_OK
    assert doc['command'] == 'info'
    assert doc['input'] == {'gens': [3, 10, 11]}
    assert set(doc) == {'command', 'input', 'results'}
    results = doc['results']
    assert results['frobenius'] == 8
    assert results['gaps'] == [1, 2, 4, 5, 7, 8]
    assert results['pf'] == [7, 8]
    assert results['special_gaps'] == [7, 8]
    assert results['genus'] == 6
    assert results['irreducible'] is False


def test_info_on_full_semigroup(capsys) -> None:
    status, doc, _ = run_json(capsys, 'info', '--gaps', '')
    assert status == config.EXIT_OK
    assert doc['results']['frobenius'] == -1
    assert doc['results']['generators'] == [1]
    assert doc['results']['pf'] is None
    assert doc['results']['irreducible'] is True


def test_info_table_output(capsys) -> None:
    assert main.main(['info', '--halfline', '6']) == config.EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('info\n')
    assert 'input.halfline: 6' in out
    assert 'bpf' in out and '4 5 6' in out


@pytest.mark.parametrize('argv, fragment', [
    (['info', '--gens', '4,6'], 'gcd'),
    (['info', '--gaps', '2'], 'complement'),
    (['decompose', '--skn', '5,26'], 'k does not divide n - 1'),
    (['witness', '--k', '5'], 'exceeds capacity'),
])
def test_invalid_input_exit_code(capsys, argv, fragment) -> None:
    assert main.main(argv) == config.EXIT_INVALID_INPUT
    captured = capsys.readouterr()
    assert captured.out == ''
    assert fragment in captured.err


def test_missing_descriptor_is_usage_error(capsys) -> None:
    with pytest.raises(SystemExit) as excinfo:
        main.main(['info'])
    assert excinfo.value.code == 2


def test_decompose_exact(capsys) -> None:
    status, doc, _ = run_json(capsys, 'decompose', '--gens', '3,10,11')
    assert status == config.EXIT_OK
    results = doc['results']
    assert results['size'] == 2
    assert results['exact_minimum'] is True
    assert results['verified'] is True
    assert results['method'] == 'exact-cover'
    assert sorted(c['frobenius'] for c in results['components']) == [7, 8]
    assert doc['input'] == {'gens': [3, 10, 11], 'mode': 'exact', 'cap': config.DEFAULT_CAP}


def test_decompose_bounds(capsys) -> None:
    status, doc, _ = run_json(capsys, 'decompose', '--halfline', '6', '--mode', 'bounds')
    assert status == config.EXIT_OK
    results = doc['results']
    assert (results['m'], results['h']) == (3, 3)
    assert results['bpf'] == [4, 5, 6]
    assert results['semigroup']['frobenius'] == 6


def test_decompose_cap_exceeded(capsys) -> None:
    assert main.main(['decompose', '--halfline', '6', '--cap', '2']) == config.EXIT_CAP_EXCEEDED
    captured = capsys.readouterr()
    assert captured.out == ''
    assert '--mode bounds' in captured.err


def test_decompose_construct_csv(capsys) -> None:
    status = main.main(['decompose', '--skn', '3,8', '--mode', 'construct', '--csv'])
    assert status == config.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'field,value'
    assert 'command,decompose' in lines
    assert 'input.skn,3 8' in lines
    assert 'results.method,constructive' in lines


def test_witness_prints_exact_integers(capsys) -> None:
    status, doc, _ = run_json(capsys, 'witness', '--k', '4')
    assert status == config.EXIT_OK
    assert doc['results']['a_sequence'] == [1, 2, 4, 28]
    assert doc['results']['n'] == factorial(28) + 28
    assert doc['results']['materializable'] is False


def test_output_is_deterministic(capsys) -> None:
    outputs = []
    for _ in range(2):
        main.main(['decompose', '--halfline', '6', '--json'])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_timing_flag(capsys) -> None:
    status, doc, _ = run_json(capsys, 'info', '--gens', '2,3', '--timing')
    assert status == config.EXIT_OK
    assert isinstance(doc['elapsed_ms'], int)


def test_quiet_suppresses_report(capsys) -> None:
    assert main.main(['info', '--gens', '2,3', '--quiet']) == config.EXIT_OK
    assert capsys.readouterr().out == ''


def test_repro_passes(capsys, claims_dir) -> None:
    status, doc, _ = run_json(capsys, 'repro', '--claims-dir', str(claims_dir))
    assert status == config.EXIT_OK
    results = doc['results']
    assert (results['passed'], results['failed'], results['skipped']) == (2, 0, 0)
    assert [row['claim'] for row in results['rows']] == ['prime-square-p3', 'two-generator-10']
    assert results['rows'][0]['observed'] == 'size=2'


def test_repro_only(capsys, claims_dir) -> None:
    status, doc, _ = run_json(capsys, 'repro', '--claims-dir', str(claims_dir), '--only', 'two-generator-10')
    assert status == config.EXIT_OK
    assert [row['claim'] for row in doc['results']['rows']] == ['two-generator-10']


def test_repro_failure_exit_code(capsys, tmp_path) -> None:
    (tmp_path / 'bad.yml').write_text(
        "claims:\n"
        "  - id: wrong\n"
        "    title: wrong size\n"
        "    kind: halfline_exact\n"
        "    params: {n: 6}\n"
        "    expect: {size: 2}\n"
    )
    status, doc, _ = run_json(capsys, 'repro', '--claims-dir', str(tmp_path))
    assert status == config.EXIT_REPRO_FAILURE
    assert doc['results']['rows'][0]['status'] == 'FAIL'
    assert doc['results']['rows'][0]['observed'] == 'size=3'


def test_repro_optional_claim_skips_over_cap(capsys, tmp_path) -> None:
    (tmp_path / 'capped.yml').write_text(
        "claims:\n"
        "  - id: capped\n"
        "    title: tiny cap\n"
        "    kind: halfline_exact\n"
        "    params: {n: 6, cap: 2}\n"
        "    expect: {size: 3}\n"
        "    optional: true\n"
    )
    status, doc, _ = run_json(capsys, 'repro', '--claims-dir', str(tmp_path))
    assert status == config.EXIT_OK
    assert doc['results']['skipped'] == 1


def test_repro_with_no_claims_fails(capsys, tmp_path) -> None:
    status, doc, _ = run_json(capsys, 'repro', '--claims-dir', str(tmp_path))
    assert status == config.EXIT_REPRO_FAILURE
    assert doc['results']['rows'] == []


def test_repro_csv_rows(capsys, claims_dir) -> None:
    assert main.main(['repro', '--claims-dir', str(claims_dir), '--csv']) == config.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'claim,title,status,observed'
    assert lines[1].startswith('prime-square-p3,p=3 exact = 2,PASS,')


@pytest.mark.slow
def test_shipped_reproduction_table(capsys) -> None:
    status, doc, _ = run_json(capsys, 'repro')
    assert status == config.EXIT_OK
    assert doc['results']['failed'] == 0
