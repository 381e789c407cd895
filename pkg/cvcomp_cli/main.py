#
# Copyright (c) 2026, cv-complementarity authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
import logging
from contextlib import contextmanager

import click
import numpy as np
from click.core import ParameterSource

from cvcomp import envs
from cvcomp._version import __version__
from cvcomp.complementarity import SweepGrid, SweepQuantity, figure_grid, generate_sweep, iconcurrence_from_vm
from cvcomp.exceptions import InvalidGrid, InvalidParameter, InvalidSeed, InvalidShots, InvalidVarianceElement, \
    InvalidWorkerCount, UnknownQuantity
from cvcomp.gaussian_vm import apply_symplectic, local_antisqueeze, vm_beamsplitter_state, vm_tmss
from cvcomp.homodyne import DEFAULT_CHUNK_SIZE, estimate_complementarity, estimate_vm, sample
from cvcomp.internal.storage.sweep_writer import OutputFormat, build_metadata, render_sweep, write_sweep
from cvcomp.internal.verification.check_runner import CheckRunner
from cvcomp.internal.verification.check_suite_factory import CheckSuiteFactory
from cvcomp.utils import inclusive_range, max_abs_deviation, resolve_output_path

_logger = logging.getLogger(__name__)

COVERAGE_SIGMAS = 3.0
REDUCTION_TOLERANCE = 1e-10
GRID_OPTIONS = ('r_min', 'r_max', 'r_step', 'xi_step', 'xi_max', 't_list', 't_min', 't_max')


@contextmanager
def _translated_errors():
    try:
        yield
    except (InvalidGrid, InvalidParameter, InvalidShots, InvalidSeed, InvalidVarianceElement, InvalidWorkerCount,
            UnknownQuantity) as e:
        raise click.UsageError(str(e))
    except (IOError, OSError) as e:
        raise click.ClickException(str(e))


def _format_matrix(m):
    return np.array2string(np.asarray(m), precision=6, suppress_small=True, max_line_width=120)


def _parse_t_list(t_list):
    try:
        values = [int(value) for value in t_list.split(',') if value.strip()]
    except ValueError:
        raise InvalidGrid('t list "{}" is not a comma-separated list of integers'.format(t_list))
    if not values:
        raise InvalidGrid('t list is empty')
    return values


def _t_values(t_list, t_min, t_max):
    if t_list is not None:
        return _parse_t_list(t_list)
    if t_max < t_min:
        raise InvalidGrid('t range [{}, {}] is empty'.format(t_min, t_max))
    return list(range(t_min, t_max + 1))


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Log debug messages to stderr.')
@click.version_option(version=__version__, prog_name='cvcomp')
def main(verbose):
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')


@main.command()
@click.option('--figure', type=click.IntRange(1, 4), default=None,
              help='Preset grid and quantity: 1 predictability, 2 fidelity, 3 I-concurrence, 4 VM discrepancy. '
                   'Excludes the --r-*, --xi-* and --t-* options.')
@click.option('--quantity', type=click.Choice(['predictability', 'fidelity', 'iconcurrence', 'vm-discrepancy']),
              default=None, help='Quantity to evaluate when no --figure is given.')
@click.option('--r-min', type=float, default=0.0, show_default=True)
@click.option('--r-max', type=float, default=3.0, show_default=True)
@click.option('--r-step', type=float, default=0.05, show_default=True)
@click.option('--xi-step', type=float, default=None,
              help='Sample xi = tanh r uniformly from 0 to --xi-max instead of sampling r.')
@click.option('--xi-max', type=float, default=0.99, show_default=True)
@click.option('--t-list', default=None, help='Comma-separated cut-offs, e.g. 5,10,15,20. Overrides --t-min/--t-max.')
@click.option('--t-min', type=int, default=1, show_default=True)
@click.option('--t-max', type=int, default=50, show_default=True)
@click.option('--format', 'output_format', type=click.Choice(OutputFormat.all()), default=OutputFormat.CSV,
              show_default=True)
@click.option('--output', '-o', default=None,
              help='Data file to write; relative paths are resolved against ${}. Printed to stdout if omitted.'
              .format(envs.OUTPUT_DIR_ENV_NAME))
@click.option('--workers', type=int, default=None,
              help='Threads evaluating grid rows. Defaults to ${} or 1.'.format(envs.WORKERS_ENV_NAME))
@click.pass_context
def sweep(ctx, figure, quantity, r_min, r_max, r_step, xi_step, xi_max, t_list, t_min, t_max, output_format, output,
          workers):
    """Tabulate a closed-form quantity of the truncated TMSS over squeezing and cut-off."""
    with _translated_errors():
        if figure is not None:
            grid = figure_grid(figure)
            if quantity is not None and SweepQuantity.of(quantity) != grid.quantity:
                raise InvalidGrid('--quantity {} conflicts with --figure {}'.format(quantity, figure))
            overridden = [name for name in GRID_OPTIONS if ctx.get_parameter_source(name) != ParameterSource.DEFAULT]
            if overridden:
                raise InvalidGrid('{} conflicts with --figure {}'.format(
                    ', '.join('--' + name.replace('_', '-') for name in overridden), figure))
        elif quantity is None:
            raise InvalidGrid('either --figure or --quantity is required')
        else:
            t_values = _t_values(t_list, t_min, t_max)
            if xi_step is not None:
                grid = SweepGrid.from_xi_values(inclusive_range(0.0, xi_max, xi_step), t_values, quantity,
                                                axis={'xi_step': xi_step})
            else:
                grid = SweepGrid(inclusive_range(r_min, r_max, r_step), t_values, quantity,
                                 axis={'r_step': r_step})

        table = generate_sweep(grid, workers=workers)
        metadata = build_metadata(grid.to_metadata())
        if output is None:
            click.echo(render_sweep(table, metadata, output_format), nl=False)
        else:
            path = resolve_output_path(output)
            write_sweep(table, metadata, path, output_format)
            click.echo('Wrote {} rows to {}'.format(len(table), path), err=True)


@main.command()
@click.option('--r-min', type=float, default=0.0, show_default=True)
@click.option('--r-max', type=float, default=3.0, show_default=True)
@click.option('--r-step', type=float, default=0.1, show_default=True)
@click.option('--t-min', type=int, default=1, show_default=True)
@click.option('--t-max', type=int, default=50, show_default=True)
@click.option('--states', type=int, default=1000, show_default=True,
              help='Random pure states per dimension for the finite-dimensional identities.')
@click.option('--seed', type=int, default=2008, show_default=True)
@click.option('--inject-fault', is_flag=True,
              help='Corrupt V13 before checking the xi identity; the run must then fail.')
@click.pass_context
def verify(ctx, r_min, r_max, r_step, t_min, t_max, states, seed, inject_fault):
    """Check every closed-form identity against its independent route."""
    with _translated_errors():
        factory = CheckSuiteFactory(r_values=inclusive_range(r_min, r_max, r_step),
                                    t_values=_t_values(None, t_min, t_max),
                                    states=states,
                                    seed=seed,
                                    inject_fault=inject_fault)
        results = CheckRunner(factory.create_checks()).run()

    for result in results:
        click.echo('{status} {name:<30} max residual {residual:.3e} (tolerance {tolerance:.0e})'.format(
            status='PASS' if result.passed else 'FAIL',
            name=result.name,
            residual=result.max_residual,
            tolerance=result.tolerance))
    failed = [result.name for result in results if not result.passed]
    if failed:
        click.echo('{} of {} checks failed: {}'.format(len(failed), len(results), ', '.join(failed)), err=True)
        ctx.exit(1)


@main.command()
@click.option('--state', type=click.Choice(['tmss', 'beamsplitter']), default='tmss', show_default=True)
@click.option('--r', 'r', type=float, required=True, help='Squeezing parameter.')
@click.option('--reduce', 'reduce_first', is_flag=True,
              help='Apply the local anti-squeezing transform before sampling.')
@click.option('--shots', type=int, default=1000000, show_default=True)
@click.option('--seed', type=int, default=42, show_default=True)
@click.option('--chunk-size', type=click.IntRange(min=1), default=DEFAULT_CHUNK_SIZE, show_default=True)
@click.option('--workers', type=int, default=None,
              help='Threads drawing sample chunks. Defaults to ${} or 1.'.format(envs.WORKERS_ENV_NAME))
def estimate(state, r, reduce_first, shots, seed, chunk_size, workers):
    """Simulate homodyne data and estimate the VM and I-concurrence from it."""
    with _translated_errors():
        if r < 0:
            raise InvalidParameter('r', r, 'r >= 0')
        if shots < 1:
            raise InvalidShots(shots, 1)
        if reduce_first and state != 'beamsplitter':
            raise InvalidParameter('--state', state, "'beamsplitter' when --reduce is given")
        v = vm_tmss(r) if state == 'tmss' else vm_beamsplitter_state(r)
        if reduce_first:
            v = apply_symplectic(v, local_antisqueeze(r))
            click.echo('Reduced VM deviation from TMSS({}): {:.3e}'.format(
                r / 2.0, max_abs_deviation(v.m, vm_tmss(r / 2.0).m)))
        elif state == 'beamsplitter':
            _logger.warning('The beam-splitter VM is not in standard form; C_I^2 = 2(1 - 1/V11) does not apply '
                            'to it. Pass --reduce to estimate the equivalent TMSS.')

        batch = sample(v, shots, seed, chunk_size=chunk_size, workers=workers)
        vm_estimate = estimate_vm(batch)
        complementarity = estimate_complementarity(vm_estimate)
        truth = iconcurrence_from_vm(float(v.m[0, 0]))

    covered = abs(complementarity.c_i_sq - truth) <= COVERAGE_SIGMAS * complementarity.ci_halfwidth
    click.echo('True VM:\n{}'.format(_format_matrix(v.m)))
    click.echo('Estimated VM ({} shots, seed {}):\n{}'.format(
        batch.shots, batch.seed, _format_matrix(vm_estimate.v_hat)))
    click.echo('Standard errors:\n{}'.format(_format_matrix(vm_estimate.standard_errors)))
    click.echo('VM entries within {:g} sigma: {} of 16'.format(
        COVERAGE_SIGMAS, int(np.sum(vm_estimate.covers(v, COVERAGE_SIGMAS)))))
    click.echo('C_I^2 = {:.6f} +/- {:.6f} ({:g} sigma), true {:.6f}'.format(
        complementarity.c_i_sq, COVERAGE_SIGMAS * complementarity.ci_halfwidth, COVERAGE_SIGMAS, truth))
    click.echo('P^2 context (2 - C_I^2) = {:.6f}'.format(complementarity.p_context))
    click.echo('Truth within {:g} sigma: {}'.format(COVERAGE_SIGMAS, 'yes' if covered else 'no'))


@main.command('reduce-demo')
@click.option('--r', 'r', type=float, required=True, help='Squeezing parameter of the beam-splitter state.')
def reduce_demo(r):
    """Show that local anti-squeezing turns the beam-splitter state of r into TMSS(r/2)."""
    with _translated_errors():
        if r < 0:
            raise InvalidParameter('r', r, 'r >= 0')
        v = vm_beamsplitter_state(r)
        transform = local_antisqueeze(r)
        reduced = apply_symplectic(v, transform)
        deviation = max_abs_deviation(reduced.m, vm_tmss(r / 2.0).m)

    click.echo('Beam-splitter VM, r = {}:\n{}'.format(r, _format_matrix(v.m)))
    click.echo('Local anti-squeezing transform:\n{}'.format(_format_matrix(transform.s)))
    click.echo('Reduced VM:\n{}'.format(_format_matrix(reduced.m)))
    click.echo('Max deviation from TMSS(r/2): {:.3e}'.format(deviation))
