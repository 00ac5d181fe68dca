#!/usr/bin/env python
"""Command line entry point: extract, compare, evaluate and stats."""
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import click

from factum import api
from factum.edits import read_edit_file, write_edits
from factum.report import FORMATS, JSON, render_report, render_stats
from factum.score import DEFAULT_BETA
from factum.textmodel import Field, read_dataset
from factum.types import Axis, DataFormatError, FactumError
from factum.utils import parse_beta

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

EXTERNAL = 'external'
BUILTIN = 'builtin'
TARGETS = {'ref': Field.Reference, 'hyp': Field.Hypothesis}


@dataclass(frozen=True)
class RunConfig:
    """Everything one command needs, as given on the command line."""
    command: str
    inputs: Tuple[str, ...]
    output: str = '-'
    conllu: Tuple[str, ...] = ()
    annotator: str = EXTERNAL
    target: Field = Field.Reference
    classify: bool = True
    axis: Axis = Axis.Form
    beta: Fraction = DEFAULT_BETA
    fmt: str = JSON
    jobs: Optional[int] = None
    system: Optional[str] = None

    def __post_init__(self):
        if self.beta <= 0:
            raise click.BadParameter('beta must be positive, got {}'.format(self.beta),
                                     param_hint="'--beta'")
        if self.jobs is not None and self.jobs < 1:
            raise click.BadParameter('must be at least 1', param_hint="'--jobs'")

    @property
    def needs_annotations(self) -> bool:
        return self.command != 'compare'

    def check_annotator(self):
        if not self.needs_annotations:
            return
        if self.annotator == BUILTIN and self.conllu:
            raise click.UsageError('--conllu cannot be combined with --annotator builtin')
        if self.annotator == EXTERNAL and not self.conllu:
            raise click.UsageError('annotations are required: give --conllu files, or '
                                   '--annotator builtin to use the heuristic annotator')


def build_index(config: RunConfig) -> api.AnnotationIndex:
    config.check_annotator()
    if config.annotator == BUILTIN:
        return api.AnnotationIndex.heuristic()
    return api.AnnotationIndex.from_conllu_files(config.conllu)


def read_items(config: RunConfig):
    items = read_dataset(config.inputs[0])
    return api.filter_system(items, config.system)


def write_output(config: RunConfig, text: str):
    with click.open_file(config.output, 'w', encoding='utf-8') as f:
        f.write(text)
    if config.output != '-':
        log.info('Wrote %s', config.output)


class RationalType(click.ParamType):
    name = 'rational'

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_beta(str(value))
        except ValueError as e:
            self.fail(str(e), param, ctx)


class FactumGroup(click.Group):
    """A group that exits 1 on usage errors and 2 on bad input data."""
    def main(self, args=None, prog_name=None, **extra):
        extra.pop('standalone_mode', None)
        try:
            rv = super().main(args=args, prog_name=prog_name, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except (FactumError, OSError) as e:
            click.echo('Error: {}'.format(e), err=True)
            sys.exit(EXIT_DATA)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


dataset_argument = click.argument('dataset', type=click.Path(exists=True, dir_okay=False))
output_option = click.option('-o', '--output', default='-', show_default=True,
                             type=click.Path(dir_okay=False, allow_dash=True),
                             help='Output file.')
conllu_option = click.option('--conllu', multiple=True,
                             type=click.Path(exists=True, dir_okay=False),
                             help='CoNLL-U annotation file; may be given several times.')
annotator_option = click.option('--annotator', type=click.Choice([EXTERNAL, BUILTIN]),
                                default=EXTERNAL, show_default=True,
                                help='Where token annotations come from.')
jobs_option = click.option('--jobs', type=click.IntRange(min=1), default=None,
                           help='Worker processes [default: number of CPUs].')
system_option = click.option('--system', default=None,
                             help="Only use items whose 'system' field is this name.")
axis_option = click.option('--axis', type=click.Choice([a.value for a in Axis]),
                           default=Axis.Form.value, show_default=True,
                           help='Which category codes to score by.')
beta_option = click.option('--beta', type=RationalType(), default='1/2', show_default=True,
                           help='Weight of recall in the F-score.')
format_option = click.option('--format', 'fmt', type=click.Choice(FORMATS), default=JSON,
                             show_default=True, help='Report format.')


@click.group(cls=FactumGroup)
@click.option("--debug/--no-debug", default=False)
def cli(debug):
    """Entrypoint to the program. --debug flag from command line is caught here."""
    log_level = logging.INFO
    if debug:
        log_level = logging.DEBUG
        log.info("Logging set to DEBUG")
    logging.basicConfig(format="%(asctime)s - %(levelname)s - %(message)s", level=log_level)


@cli.command()
@dataset_argument
@output_option
@conllu_option
@annotator_option
@click.option('--target', type=click.Choice(sorted(TARGETS)), default='ref', show_default=True,
              help='Which correction to extract edits towards.')
@click.option('--classify/--no-classify', default=True, show_default=True,
              help='Assign content codes; unclassified edits are written as NA.')
@jobs_option
@system_option
def extract(dataset, output, conllu, annotator, target, classify, jobs, system):
    """Write the edits from each original summary to its correction as an edit file."""
    config = RunConfig('extract', (dataset,), output, conllu, annotator, TARGETS[target],
                       classify, jobs=jobs, system=system)
    index = build_index(config)
    items = read_items(config)
    editsets = api.extract(items, index, config.target, config.classify, config.jobs)
    write_output(config, write_edits(editsets))


@cli.command()
@click.argument('hypothesis', type=click.Path(exists=True, dir_okay=False))
@click.argument('reference', type=click.Path(exists=True, dir_okay=False))
@output_option
@axis_option
@beta_option
@format_option
def compare(hypothesis, reference, output, axis, beta, fmt):
    """Score a hypothesis edit file against a reference edit file."""
    config = RunConfig('compare', (hypothesis, reference), output, axis=Axis(axis), beta=beta,
                       fmt=fmt)
    report = api.compare_edits(read_edit_file(hypothesis), read_edit_file(reference),
                               config.axis, config.beta)
    write_output(config, render_report(report, config.fmt))


@cli.command()
@dataset_argument
@output_option
@conllu_option
@annotator_option
@axis_option
@beta_option
@format_option
@jobs_option
@system_option
def evaluate(dataset, output, conllu, annotator, axis, beta, fmt, jobs, system):
    """Extract reference and hypothesis edits of a dataset and score them in one go."""
    config = RunConfig('evaluate', (dataset,), output, conllu, annotator, axis=Axis(axis),
                       beta=beta, fmt=fmt, jobs=jobs, system=system)
    index = build_index(config)
    items = read_items(config)
    report = api.evaluate(items, index, config.axis, config.beta, config.jobs)
    write_output(config, render_report(report, config.fmt))


@cli.command()
@dataset_argument
@output_option
@conllu_option
@annotator_option
@format_option
@jobs_option
@system_option
def stats(dataset, output, conllu, annotator, fmt, jobs, system):
    """Corpus statistics of a dataset per corpus and system."""
    config = RunConfig('stats', (dataset,), output, conllu, annotator, fmt=fmt, jobs=jobs,
                       system=system)
    index = build_index(config)
    items = read_items(config)
    if not items:
        raise DataFormatError('no items to compute statistics on', path=dataset)
    write_output(config, render_stats(api.statistics(items, index, config.jobs), config.fmt))


def main():
    cli()


if __name__ == '__main__':
    main()
