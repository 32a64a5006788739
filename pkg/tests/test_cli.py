"""Command line surface"""
import sys

import pytest
from click.testing import CliRunner

from sadic import __version__
from sadic.controllers.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_version(runner):
    result = invoke(runner, '--version')
    assert result.exit_code == 0
    assert __version__ in result.output


def test_gen(runner):
    result = invoke(runner, 'gen', '--system', 'example1', '--level', '1', '--letter', 'b')
    assert result.exit_code == 0
    assert result.output == "oooo\noooo\noooo\nbooo\n"


def test_gen_defaults_to_last_letter(runner):
    result = invoke(runner, 'gen', '--system', 'example1')
    assert result.output == "oo\nbo\n"


def test_check_compat(runner):
    ok = invoke(runner, 'check-compat', '--system', 'example3', '--pattern-text', 'obbb/bboo',
                '--subs', 'a a b a / c c d c')
    assert ok.exit_code == 0
    assert ok.output.strip() == 'compatible'
    bad = invoke(runner, 'check-compat', '--system', 'example3', '--pattern-text', 'obbb/bboo',
                 '--subs', 'a a b a / c c d a')
    assert bad.exit_code == 1
    assert bad.output.strip() == 'incompatible'


def test_check_compat_single_name(runner):
    result = invoke(runner, 'check-compat', '--system', 'example1', '--pattern-text', 'obb/boo', '--subs', 's')
    assert result.exit_code == 0


def test_lang(runner):
    result = invoke(runner, 'lang', '--system', 'example1', '--level', '2', '--window', '2x2')
    assert result.exit_code == 0
    assert result.output == "oo\nbo\n\noo\noo\n"


def test_separate(runner):
    result = invoke(runner, 'separate', '--system', 'example1', '--level', '1', '--window', '2x2')
    assert result.exit_code == 0
    assert "ob\noo" in result.output.split('\n\n')


def test_parse(runner):
    result = invoke(runner, 'parse', '--system', 'example1', '--pattern-text', 'oooooo/oobobo/oooooo/booooo')
    assert result.exit_code == 0
    assert result.output == "s offset=0,0\nobb\nboo\n"


def test_parse_without_results(runner):
    result = invoke(runner, 'parse', '--system', 'example1', '--pattern-text', 'ooo/ooo')
    assert result.exit_code == 1
    assert 'error:' in result.output


def test_recover(runner):
    result = invoke(runner, 'recover', '--system', 'example3', '--samples-from-seq', 'd,c,a', '--depth', '3')
    assert result.exit_code == 0
    assert result.output.strip() == 'd c a'


def test_history(runner):
    result = invoke(runner, 'history', '--system', 'example1', '--level', '1')
    assert result.output.strip() == 's s s s'


def test_check_sync(runner):
    result = invoke(runner, 'check-sync', '--system', 'example1', '--pattern-text', 'o:s:s b:s:s')
    assert result.exit_code == 0
    assert result.output.strip() == 'synchronized'


def test_decorate_projection(runner):
    result = invoke(runner, 'decorate', '--system', 'example3', '--project', 'base', '--letter', 'b')
    assert result.exit_code == 0
    assert result.output.strip() == "ooo\nooo\nbbb"


def test_check_propa(runner):
    result = invoke(runner, 'check-propa', '--system', 'example3')
    assert result.exit_code == 0
    assert result.output.strip() == 'holds-uniform-support'
    bounded = invoke(runner, 'check-propa', '--system', 'example1', '--bounded', '--level', '1')
    assert bounded.output.strip() == 'no-counterexample-up-to-bounds'


def test_render_to_file(runner, tmp_path):
    out = tmp_path / 'level2.ppm'
    result = invoke(runner, 'render', '--system', 'example1', '--level', '2', '--out', str(out))
    assert result.exit_code == 0
    assert out.read_bytes().startswith(b"P6\n8 8\n255\n")


def test_missing_system_file(runner):
    result = invoke(runner, 'gen', '--system', 'no/such/system.json')
    assert result.exit_code == 2


def test_bad_window(runner):
    result = invoke(runner, 'lang', '--system', 'example1', '--window', 'wide')
    assert result.exit_code == 2


def test_budget_exceeded(runner):
    result = invoke(runner, 'spatterns', '--system', 'example3', '--level', '3', '--budget', '10')
    assert result.exit_code == 1
    assert 'budget' in result.output


def test_missing_pattern_file(runner):
    result = invoke(runner, 'parse', '--system', 'example1', '--pattern', 'fixtures/missing.txt')
    assert result.exit_code == 2
    assert 'ragged' not in result.output


def test_pattern_from_file(runner, tmp_path):
    path = tmp_path / 'image.txt'
    path.write_text("oooooo\noobobo\noooooo\nbooooo\n")
    result = invoke(runner, 'parse', '--system', 'example1', '--pattern', str(path))
    assert result.exit_code == 0
    assert result.output == "s offset=0,0\nobb\nboo\n"


def test_pattern_needs_exactly_one_source(runner, tmp_path):
    path = tmp_path / 'p.txt'
    path.write_text("obb\nboo\n")
    both = invoke(runner, 'check-compat', '--system', 'example1', '--pattern', str(path),
                  '--pattern-text', 'obb/boo', '--subs', 's')
    assert both.exit_code == 2
    neither = invoke(runner, 'check-compat', '--system', 'example1', '--subs', 's')
    assert neither.exit_code == 2


def test_subs_grid_from_file(runner, tmp_path):
    grid = tmp_path / 'grid.txt'
    grid.write_text("a a b a\nc c d c\n")
    result = invoke(runner, 'check-compat', '--system', 'example3', '--pattern-text', 'obbb/bboo',
                    '--subs-file', str(grid))
    assert result.exit_code == 0
    missing = invoke(runner, 'check-compat', '--system', 'example3', '--pattern-text', 'obbb/bboo',
                     '--subs-file', str(tmp_path / 'none.txt'))
    assert missing.exit_code == 2


def test_render_inline_pattern(runner):
    result = invoke(runner, 'render', '--system', 'example1', '--pattern-text', 'ob/bo', '--format', 'ascii')
    assert result.exit_code == 0
    assert result.output == "ob\nbo\n"


def test_lang_set_mode(runner):
    result = invoke(runner, 'lang', '--system', 'example1', '--level', '2', '--window', '2x2', '--mode', 'set')
    assert result.exit_code == 0
    assert result.output == "oo\nbo\n\noo\noo\n"


def test_malformed_environment_integer(runner, monkeypatch):
    monkeypatch.setenv('SADIC_PARSE_BUDGET', 'plenty')
    monkeypatch.delitem(sys.modules, 'config', raising=False)
    result = invoke(runner, 'gen', '--system', 'example1')
    assert result.exit_code == 2
    assert 'SADIC_PARSE_BUDGET' in result.output
