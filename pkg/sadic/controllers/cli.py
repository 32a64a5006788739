"""
Command Line Controller
click command group dispatching to the services; patterns print as glyph rows, top row first
"""
import functools
import logging
import os

import click

from sadic import __version__, create_app
from sadic.errors import ConfigurationError, IncompatibilityError, SadicError
from sadic.models import (
    DecoratedAlphabet, DecoratedLetter, LanguageMode, LanguageQuery, SequenceSpec, parse_names
)
from sadic.services import documents
from sadic.services.decoration import history_word, lift_set, project, sync_check
from sadic.services.derivation import (
    PARSE_MODES, desubstitute, recover_sequence, unique_derivation_check
)
from sadic.services.grid import (
    apply_nonuniform, apply_uniform, check_compat_nonuniform, check_compat_uniform, iterate
)
from sadic.services.language import LanguageEnumerator
from sadic.services.property_a import bounded_property_a, sufficient_property_a
from sadic.services.renderer import RENDER_FORMATS, render

logger = logging.getLogger(__name__)


# ========== Helpers ==========

def domain_errors(func):
    """Map domain errors to exit code 1 and file errors to exit code 2"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SadicError as exc:
            click.echo(f"error: {exc}", err=True)
            raise click.exceptions.Exit(1)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            raise click.exceptions.Exit(2)
    return wrapper


def parse_window(ctx, param, value):
    if value is None:
        return None
    try:
        width, height = (int(part) for part in value.lower().split('x'))
    except ValueError:
        raise click.BadParameter(f"expected WxH, got {value!r}")
    if width < 1 or height < 1:
        raise click.BadParameter("window sides must be positive")
    return width, height


def load(ctx, system):
    return documents.load_system(system, non_degenerate=ctx.obj.non_degenerate)


def letter_of(alphabet, glyph):
    return alphabet.letter(glyph) if glyph is not None else len(alphabet) - 1


def budget_of(ctx, budget):
    return budget if budget is not None else ctx.obj.enumeration_budget


def echo_patterns(patterns):
    click.echo('\n\n'.join(p.to_text() for p in patterns))


def pattern_options(help_text):
    """--pattern (file) and --pattern-text (inline glyph rows)"""
    def decorator(func):
        func = click.option('--pattern-text', default=None,
                            help='Inline rows, top row first, split by "/"')(func)
        return click.option('--pattern', 'pattern_file', default=None,
                            type=click.Path(exists=True, dir_okay=False), help=help_text)(func)
    return decorator


def pattern_of(pattern_file, pattern_text, alphabet, required=True):
    if pattern_file is not None and pattern_text is not None:
        raise click.UsageError("give either --pattern or --pattern-text, not both")
    if pattern_file is not None:
        return documents.load_pattern(pattern_file, alphabet)
    if pattern_text is not None:
        return documents.parse_pattern(pattern_text, alphabet)
    if required:
        raise click.UsageError("one of --pattern or --pattern-text is required")
    return None


def emit(data: bytes, fmt: str, out):
    if fmt == 'ascii':
        data += b'\n'
    if out:
        with open(out, 'wb') as f:
            f.write(data)
    else:
        stream = click.get_binary_stream('stdout')
        stream.write(data)
        stream.flush()


system_option = click.option('--system', required=True, help='System document path or shipped system name')
level_option = click.option('--level', type=click.IntRange(min=0), default=0, show_default=True)
window_option = click.option('--window', required=True, callback=parse_window, help='Window shape WxH')
budget_option = click.option('--budget', type=click.IntRange(min=1), default=None,
                             help='Enumeration budget (defaults to the configuration)')


# ========== Group ==========

@click.group()
@click.option('--config', 'config_name', default=lambda: os.environ.get('SADIC_ENV', 'default'),
              type=click.Choice(['default', 'development', 'production', 'testing']),
              help='Configuration class')
@click.option('--jobs', type=int, default=None, help='joblib worker count')
@click.version_option(version=__version__)
@click.pass_context
def cli(ctx, config_name, jobs):
    """Multidimensional S-adic substitutions"""
    try:
        ctx.obj = create_app(config_name, n_jobs=jobs)
    except ConfigurationError as exc:
        raise click.UsageError(str(exc), ctx=ctx)


@cli.command()
@system_option
@level_option
@click.option('--letter', default=None, help='Seed glyph (default: last letter)')
@click.option('--format', 'fmt', type=click.Choice(RENDER_FORMATS), default='ascii', show_default=True)
@click.option('--out', default=None, help='Output file')
@click.pass_context
@domain_errors
def gen(ctx, system, level, letter, fmt, out):
    """Iterate the system's sequence on one letter"""
    subs, seq = load(ctx, system)
    grown = iterate(subs, seq, level, letter_of(subs.alphabet, letter))
    emit(render(grown, fmt, max_value=ctx.obj.ppm_max_value), fmt, out)


@cli.command()
@system_option
@level_option
@window_option
@click.option('--mode', type=click.Choice(['seq', 'set']), default='seq', show_default=True)
@budget_option
@click.pass_context
@domain_errors
def lang(ctx, system, level, window, mode, budget):
    """Windows of the local language"""
    subs, seq = load(ctx, system)
    query = LanguageQuery(LanguageMode.LOCAL_SEQ if mode == 'seq' else LanguageMode.LOCAL_SET, level, *window)
    echo_patterns(LanguageEnumerator(budget_of(ctx, budget), ctx.obj.n_jobs).answer(query, subs, seq))


@cli.command('global-lang')
@system_option
@level_option
@window_option
@click.option('--mode', type=click.Choice(['seq', 'set']), default='seq', show_default=True)
@budget_option
@click.pass_context
@domain_errors
def global_lang(ctx, system, level, window, mode, budget):
    """Windows of the global language"""
    subs, seq = load(ctx, system)
    query = LanguageQuery(LanguageMode.GLOBAL_SEQ if mode == 'seq' else LanguageMode.GLOBAL_SET, level, *window)
    echo_patterns(LanguageEnumerator(budget_of(ctx, budget), ctx.obj.n_jobs).answer(query, subs, seq))


@cli.command()
@system_option
@level_option
@window_option
@budget_option
@click.pass_context
@domain_errors
def separate(ctx, system, level, window, budget):
    """Global-language windows missing from the local language"""
    subs, seq = load(ctx, system)
    enumerator = LanguageEnumerator(budget_of(ctx, budget), ctx.obj.n_jobs)
    echo_patterns(enumerator.separation_witnesses(subs, seq, level, *window))


@cli.command()
@system_option
@level_option
@budget_option
@click.pass_context
@domain_errors
def spatterns(ctx, system, level, budget):
    """S-patterns of exactly the given level"""
    subs, _ = load(ctx, system)
    echo_patterns(LanguageEnumerator(budget_of(ctx, budget), ctx.obj.n_jobs).s_patterns(subs, level))


# ========== Decoration ==========

def _seed(subs, letter, v_dec, h_dec):
    default = subs.names[0]
    return DecoratedLetter(letter_of(subs.alphabet, letter), v_dec or default, h_dec or default)


@cli.command()
@system_option
@level_option
@click.option('--letter', default=None)
@click.option('--v', 'v_dec', default=None, help='Seed V-decoration (default: first substitution)')
@click.option('--h', 'h_dec', default=None, help='Seed H-decoration (default: first substitution)')
@click.option('--project', 'which', type=click.Choice(['base', 'V', 'H']), default=None)
@click.pass_context
@domain_errors
def decorate(ctx, system, level, letter, v_dec, h_dec, which):
    """Iterate the lifted sequence on a decorated letter"""
    subs, seq = load(ctx, system)
    lifted = lift_set(subs)
    seed = lifted.alphabet.encode(_seed(subs, letter, v_dec, h_dec))
    grown = iterate(lifted.lifted_set, lifted.lift_sequence(seq), level, seed)
    click.echo((project(grown, which) if which else grown).to_text())


@cli.command()
@system_option
@level_option
@click.option('--letter', default=None)
@click.option('--v', 'v_dec', default=None, help='Seed V-decoration (default: first substitution)')
@click.pass_context
@domain_errors
def history(ctx, system, level, letter, v_dec):
    """Substitution names recorded along the bottom row"""
    subs, seq = load(ctx, system)
    click.echo(' '.join(history_word(subs, seq, level, _seed(subs, letter, v_dec, None))))


@cli.command('check-sync')
@system_option
@pattern_options('Decorated pattern file (a:v:h tokens)')
@click.pass_context
@domain_errors
def check_sync(ctx, system, pattern_file, pattern_text):
    """Whether V-names agree down columns and H-names along rows"""
    subs, _ = load(ctx, system)
    p = pattern_of(pattern_file, pattern_text, DecoratedAlphabet(subs.alphabet, subs.names))
    if sync_check(p):
        click.echo('synchronized')
    else:
        click.echo('not synchronized')
        ctx.exit(1)


# ========== Grid checks ==========

@cli.command('check-compat')
@system_option
@pattern_options('Pattern file')
@click.option('--subs', 'grid', default=None, help='Substitution name, or a grid of names (rows split by "/")')
@click.option('--subs-file', 'grid_file', default=None, type=click.Path(exists=True, dir_okay=False),
              help='File holding the grid of names, top row first')
@click.pass_context
@domain_errors
def check_compat(ctx, system, pattern_file, pattern_text, grid, grid_file):
    """Compatibility of a substitution (pattern) with a pattern; prints the image when compatible"""
    subs, _ = load(ctx, system)
    p = pattern_of(pattern_file, pattern_text, subs.alphabet)
    if (grid is None) == (grid_file is None):
        raise click.UsageError("give exactly one of --subs or --subs-file")
    if grid_file is not None:
        grid = documents.read_text(grid_file)
    names = parse_names(grid.replace('/', ' '))
    if len(names) == 1:
        ok = check_compat_uniform(subs.get(names[0]), p)
        image = apply_uniform(subs.get(names[0]), p) if ok else None
    else:
        sp = documents.parse_substitution_pattern(grid, subs)
        ok = check_compat_nonuniform(sp, p)
        image = apply_nonuniform(sp, p) if ok else None
    if not ok:
        click.echo('incompatible')
        ctx.exit(1)
    click.echo('compatible')
    logger.info("Image:\n%s", image.to_text())


# ========== Derivation ==========

@cli.command()
@system_option
@pattern_options('Pattern file')
@click.option('--mode', type=click.Choice(PARSE_MODES), default='anchored', show_default=True)
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.pass_context
@domain_errors
def parse(ctx, system, pattern_file, pattern_text, mode, budget):
    """Desubstitute a pattern by each substitution of the set"""
    subs, _ = load(ctx, system)
    p = pattern_of(pattern_file, pattern_text, subs.alphabet)
    results = desubstitute(p, subs, mode, budget=budget or ctx.obj.parse_budget, n_jobs=ctx.obj.n_jobs)
    if not results:
        raise IncompatibilityError("pattern admits no parse", witness=p)
    blocks = []
    for result in results:
        header = f"{result.substitution} offset={result.offset[0]},{result.offset[1]}" \
                 f"{' cropped' if result.cropped else ''}"
        blocks.append(f"{header}\n{result.preimage.to_text()}")
    click.echo('\n\n'.join(blocks))


@cli.command()
@system_option
@click.option('--samples-from-seq', 'samples', required=True, help='Names generating the samples, last repeated')
@click.option('--depth', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('--letter', default=None, help='Seed glyph of the samples (default: last letter)')
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.pass_context
@domain_errors
def recover(ctx, system, samples, depth, letter, budget):
    """Recover the first substitutions of a sequence from its iterates"""
    subs, _ = load(ctx, system)
    truth = SequenceSpec.from_prefix(parse_names(samples))
    truth.validate(subs)
    seed = letter_of(subs.alphabet, letter)
    outcome = recover_sequence(lambda n: iterate(subs, truth, n, seed), subs, depth,
                               min_level=ctx.obj.recovery_min_level, max_level=ctx.obj.recovery_max_level,
                               budget=budget or ctx.obj.parse_budget, n_jobs=ctx.obj.n_jobs)
    if isinstance(outcome, list):
        click.echo(' '.join(outcome))
    else:
        click.echo(f"ambiguous at stage {outcome.stage}: {' '.join(outcome.names)} "
                   f"(recovered: {' '.join(outcome.recovered) or '-'})")


@cli.command('check-unique')
@system_option
@click.option('--side', type=click.IntRange(min=1), required=True)
@click.option('--depth', type=click.IntRange(min=1), default=1, show_default=True)
@budget_option
@click.pass_context
@domain_errors
def check_unique(ctx, system, side, depth, budget):
    """Search global-language windows for one with two parses"""
    subs, _ = load(ctx, system)
    found = unique_derivation_check(subs, side, depth, budget=budget_of(ctx, budget),
                                    parse_budget=ctx.obj.parse_budget, n_jobs=ctx.obj.n_jobs)
    if found is None:
        click.echo('no-counterexample')
        return
    click.echo(f"counterexample ({len(found.parses)} parses)\n{found.window.to_text()}")


# ========== Property A ==========

@cli.command('check-propa')
@system_option
@click.option('--level', type=click.IntRange(min=1), default=2, show_default=True, help='Largest S-pattern level K')
@click.option('--depth', type=click.IntRange(min=1), default=1, show_default=True, help='Longest chain N')
@click.option('--bounded', is_flag=True, help='Run the exhaustive search even when a sufficient condition holds')
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.pass_context
@domain_errors
def check_propa(ctx, system, level, depth, bounded, budget):
    """Property A: sufficient conditions, then a bounded search"""
    subs, _ = load(ctx, system)
    verdict = sufficient_property_a(subs)
    if bounded or not verdict.holds:
        verdict = bounded_property_a(subs, level, depth, budget=budget or ctx.obj.property_a_budget,
                                     n_jobs=ctx.obj.n_jobs)
    click.echo(verdict.status.value)
    if verdict.witness is not None:
        witness = verdict.witness
        click.echo(f"pattern:\n{witness.pattern.to_text()}\nblock at {witness.placement[0]},{witness.placement[1]}")
        for sp in witness.chain:
            click.echo(' / '.join(sp.to_rows()))
        ctx.exit(1)


# ========== Rendering ==========

@cli.command('render')
@system_option
@pattern_options('Pattern file; without a pattern the level/letter iterate is drawn')
@level_option
@click.option('--letter', default=None)
@click.option('--format', 'fmt', type=click.Choice(RENDER_FORMATS), default='ppm', show_default=True)
@click.option('--out', default=None)
@click.pass_context
@domain_errors
def render_command(ctx, system, pattern_file, pattern_text, level, letter, fmt, out):
    """Draw a pattern as glyph rows or as a P6 image"""
    subs, seq = load(ctx, system)
    p = pattern_of(pattern_file, pattern_text, subs.alphabet, required=False)
    if p is None:
        p = iterate(subs, seq, level, letter_of(subs.alphabet, letter))
    emit(render(p, fmt, max_value=ctx.obj.ppm_max_value), fmt, out)


def main():
    cli(prog_name='sadic')
