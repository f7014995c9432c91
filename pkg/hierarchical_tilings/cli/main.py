"""
Command Line Interface for hierarchical-tilings
Runs the substitution, separation, conjugacy and tiling pipelines and writes
canonical reports.

File: hierarchical_tilings/cli/main.py
"""

import functools
import os
import sys
from typing import Any, Dict, Optional

import click

from ..config import Config
from ..core.conjugacy import (
    conjugacy_offset,
    conjugate,
    discretized_samples,
    modulus_probe,
    non_sbc_witness,
)
from ..core.finite_type import (
    aperiodicity_certificate_1d,
    separation_certificate,
    verify_certificate,
)
from ..core.golden import GoldenNumber
from ..core.sliding_block import detect_code
from ..core.substitution import Substitution1D
from ..core.tiling_line import TileSpec, sample_tiling, tiling_metric
from ..core.tiling_plane import (
    X_SIDE,
    Y_SIDE,
    distinct_offsets,
    frame_check,
    frame_witness,
    neighborhood_census,
    rows_conjugate,
    rows_sample,
)
from ..exceptions import HierarchyError, HypothesisError, RuleFileError, ValidationError
from ..utils.logging import setup_logging
from ..utils.parser import (
    BUILTINS,
    BuiltinModel,
    build_system,
    load_patch,
    load_rules,
    load_tiling,
    parse_exact,
    parse_point,
    rules_from_plain,
    tiling_document,
)
from ..utils.performance import PerformanceMonitor
from ..utils.render import render_rects, render_substitution
from ..utils.serializer import (
    ReportSerializer,
    SerializationFormat,
    certificate_from_plain,
    certificate_plain,
    pattern_plain,
)
from ..utils.validation import Validator, validate_report_data

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class ExactType(click.ParamType):
    """An exact element of Q[tau]: "3/2", "1+2*tau", "tau-1", "1e-8"."""
    name = "exact"

    def convert(self, value, param, ctx):
        if isinstance(value, GoldenNumber):
            return value
        try:
            return parse_exact(value)
        except (ValueError, ZeroDivisionError, KeyError, TypeError):
            self.fail(f"{value!r} is not an exact number", param, ctx)


class PairType(click.ParamType):
    """Two exact numbers separated by a comma."""
    name = "pair"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return parse_point(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a pair x,y of exact numbers", param, ctx)


EXACT = ExactType()
PAIR = PairType()


def reports_errors(func):
    """Map module errors to exit codes: parse and usage errors 2, failures 1."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (RuleFileError, ValidationError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except HierarchyError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_FAILED)
        except OSError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def resolve_rules(source: str):
    """A rule file path, or the name of a built-in substitution."""
    if not os.path.exists(source) and source in BUILTINS:
        document = BuiltinModel(kind="builtin", name=source)
        return document, build_system(document)
    return load_rules(source)


def spec_of(pair) -> TileSpec:
    return TileSpec(pair[0], pair[1])


def emit(ctx, command: str, inputs: Dict[str, Any], result: Dict[str, Any],
         certificate: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    serializer: ReportSerializer = ctx.obj['serializer']
    report = serializer.build_report(command, inputs, result, certificate)
    data = serializer.serialize(report)
    output = ctx.obj.get('output')
    if output:
        with open(output, 'wb') as f:
            f.write(data)
    else:
        stream = click.get_binary_stream('stdout')
        stream.write(data)
        stream.flush()
    ctx.obj['monitor'].log_summary(command)
    return report


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--config', '-c', type=click.Path(exists=True, dir_okay=False), help='Configuration file path')
@click.option('--format', 'output_format', type=click.Choice(['json', 'msgpack']), default=None,
              help='Report format')
@click.option('--precision', type=click.IntRange(1, 60), default=None,
              help='Digits of the display decimals')
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None,
              help='Write the report to a file instead of stdout')
@click.pass_context
def cli(ctx, verbose, config, output_format, precision, output):
    """hierarchical-tilings: substitution subshifts and Fibonacci tilings."""
    try:
        settings = Config.from_file(config) if config else Config.from_environment()
    except (HierarchyError, ValueError) as e:
        click.echo(f"Error loading config: {e}", err=True)
        sys.exit(EXIT_USAGE)

    if verbose:
        settings.logging.level = "DEBUG"
    setup_logging(settings.logging)

    fmt = SerializationFormat(output_format or settings.output.format)
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose
    ctx.obj['config'] = settings
    ctx.obj['output'] = output
    ctx.obj['serializer'] = ReportSerializer(fmt, precision or settings.output.decimal_places)
    ctx.obj['monitor'] = PerformanceMonitor()


@cli.command()
@click.argument('rules')
@click.argument('letter')
@click.argument('level', type=int)
@click.option('--render', 'render_path', type=click.Path(dir_okay=False), default=None,
              help='Write an SVG of the patch with its supertile outlines')
@click.pass_context
@reports_errors
def substitute(ctx, rules, letter, level, render_path):
    """Iterate a substitution LEVEL times from LETTER."""
    settings: Config = ctx.obj['config']
    monitor: PerformanceMonitor = ctx.obj['monitor']
    document, system = resolve_rules(rules)
    Validator.validate_letter(system, letter)
    Validator.validate_level(level, settings.enumeration.saturation_level_cap)

    with monitor.stage("iterate"):
        if isinstance(system, Substitution1D):
            pattern = system.iterate(letter, level)
            hierarchy = [system.length(letter, j) for j in range(level + 1)]
        else:
            pattern = system.iterate2d(letter, level)
            hierarchy = system.hierarchy_counts(letter, level)

    result: Dict[str, Any] = {
        "pattern": pattern_plain(pattern),
        "cells": len(pattern.cells),
        "hierarchy": hierarchy,
    }
    if render_path:
        with monitor.stage("render"):
            summary = render_substitution(system, letter, level, render_path)
        result["svg"] = {
            "cells": summary.cells,
            "outlines": summary.outlines,
            "area_consistent": summary.cell_area == summary.patch_area,
        }

    inputs = {"rules": document.model_dump(), "letter": letter, "level": level, "render": render_path}
    emit(ctx, "substitute", inputs, result)


@cli.command('verify-separation')
@click.option('--radius', '-n', type=click.IntRange(min=0), default=1, help='Window radius n of X_n')
@click.option('--m-cap', type=click.IntRange(min=1), default=None, help='Largest refutation size searched')
@click.option('--rules', default='fibonacci_product', help='Rule file or built-in (default: fibonacci_product)')
@click.pass_context
@reports_errors
def verify_separation(ctx, radius, m_cap, rules):
    """Certify that X_n strictly contains the subshift."""
    settings: Config = ctx.obj['config']
    monitor: PerformanceMonitor = ctx.obj['monitor']
    document, system = resolve_rules(rules)
    inputs = {"rules": document.model_dump(), "radius": radius, "m_cap": m_cap}

    try:
        with monitor.stage("certificate"):
            certificate = separation_certificate(system, radius, m_cap, settings.enumeration)
    except HypothesisError as e:
        emit(ctx, "verify-separation", inputs, {"certified": False, "reason": str(e)})
        sys.exit(EXIT_FAILED)

    with monitor.stage("re-verify"):
        verified = certificate.certified and verify_certificate(certificate, system)

    result = {
        "certified": certificate.certified,
        "re_verified": verified,
        "config": certificate.config.text(),
        "m_cap": certificate.m_cap,
    }
    if not certificate.refutation.found:
        result["survivor"] = {
            "config": certificate.config.text(),
            "searched_up_to": certificate.m_cap,
            "unit": certificate.refutation.unit,
        }
    else:
        result["refutation"] = {
            "size": certificate.refutation.size,
            "unit": certificate.refutation.unit,
            "window": certificate.refutation.window.text(),
        }
    emit(ctx, "verify-separation", inputs, result, certificate_plain(certificate))
    if not verified:
        sys.exit(EXIT_FAILED)


@cli.command('check-certificate')
@click.argument('report_path', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@reports_errors
def check_certificate(ctx, report_path):
    """Re-validate the certificate embedded in a verify-separation report."""
    serializer: ReportSerializer = ctx.obj['serializer']
    with open(report_path, 'rb') as f:
        data = f.read()
    try:
        report = serializer.deserialize(data, SerializationFormat.JSON)
    except (ValueError, UnicodeDecodeError):
        report = serializer.deserialize(data, SerializationFormat.MSGPACK)

    ok, error = validate_report_data(report)
    if not ok:
        raise ValidationError(error)
    _, system = rules_from_plain(report["inputs"]["rules"])
    certificate = certificate_from_plain(report["certificate"])
    valid = verify_certificate(certificate, system)

    inputs = {"report_digest": serializer.digest(report)}
    emit(ctx, "check-certificate", inputs, {"valid": valid, "radius": certificate.radius})
    if not valid:
        sys.exit(EXIT_FAILED)


@cli.command('fib-conjugate')
@click.option('--source', type=PAIR, default='1,1', help='Lengths |A|,|B| of the source tiles')
@click.option('--target', type=PAIR, default='tau,tau-1', help='Lengths |A|,|B| of the target tiles')
@click.option('--tiling', 'tiling_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Tiling file to conjugate (its spec replaces --source)')
@click.option('--witness', 'witness_radius', type=EXACT, default=None,
              help='Build the non-sliding-block-code witness for radius R')
@click.option('--probe', is_flag=True, help='Search the radius needed for an epsilon-close image')
@click.option('--epsilon', type=EXACT, default=None, help='Approximation tolerance')
@click.option('--seed', type=int, default=None, help='Seed for sampled tilings')
@click.option('--horizon', type=EXACT, default='8', help='Half-width of the tile dump')
@click.pass_context
@reports_errors
def fib_conjugate(ctx, source, target, tiling_path, witness_radius, probe, epsilon, seed, horizon):
    """Conjugate Fibonacci tilings across tile lengths with equal invariants."""
    settings: Config = ctx.obj['config']
    monitor: PerformanceMonitor = ctx.obj['monitor']
    epsilon = epsilon if epsilon is not None else GoldenNumber(settings.tiling.epsilon)
    seed = seed if seed is not None else settings.output.default_seed
    target_spec = spec_of(target)
    inputs: Dict[str, Any] = {"target": list(target), "epsilon": epsilon, "seed": seed}

    if witness_radius is not None:
        source_spec = spec_of(source)
        inputs.update(source=list(source), witness=witness_radius)
        with monitor.stage("witness"):
            witness = non_sbc_witness(source_spec, target_spec, witness_radius, seed)
            samples = discretized_samples(witness, target_spec)
        detection = {str(r): detect_code(samples, r).consistent for r in range(5)}
        result = {
            "level": witness.level,
            "t": witness.t,
            "agree_on": [-witness.radius, witness.radius],
            "x": tiling_document(witness.x),
            "x_prime": tiling_document(witness.x_prime),
            "detect_code": detection,
        }
        emit(ctx, "fib-conjugate", inputs, result)
        return

    if probe:
        source_spec = spec_of(source)
        inputs.update(source=list(source), probe=True)
        with monitor.stage("probe"):
            found = modulus_probe(source_spec, target_spec, epsilon, settings=settings.tiling)
        result = {"radius": found.radius, "step": found.step, "translations": found.translations}
        emit(ctx, "fib-conjugate", inputs, result)
        if found.radius is None:
            sys.exit(EXIT_FAILED)
        return

    if tiling_path:
        _, x = load_tiling(tiling_path, settings.tiling.max_tower_depth)
        inputs["tiling"] = tiling_document(x)
    else:
        x = sample_tiling(spec_of(source), seed, settings.tiling.max_tower_depth)
        inputs["source"] = list(source)
    with monitor.stage("conjugate"):
        offset = conjugacy_offset(x, target_spec, epsilon)
        image = conjugate(x, target_spec, epsilon)
    result = {
        "offset": offset.value,
        "depth": offset.depth,
        "tail_bound": offset.tail_bound,
        "exact": offset.exact,
        "image": tiling_document(image),
        "tiles": [list(tile) for tile in image.tiles(-horizon, horizon)],
    }
    inputs["horizon"] = horizon
    emit(ctx, "fib-conjugate", inputs, result)


@cli.command()
@click.argument('tiling_a', type=click.Path(exists=True, dir_okay=False))
@click.argument('tiling_b', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@reports_errors
def metric(ctx, tiling_a, tiling_b):
    """Distance between two line tilings."""
    settings: Config = ctx.obj['config']
    document_a, x = load_tiling(tiling_a, settings.tiling.max_tower_depth)
    document_b, y = load_tiling(tiling_b, settings.tiling.max_tower_depth)
    with ctx.obj['monitor'].stage("metric"):
        found = tiling_metric(x, y, settings.tiling)
    inputs = {"a": tiling_document(x), "b": tiling_document(y)}
    emit(ctx, "metric", inputs, {"value": found.value, "certified": found.certified, "horizon": found.horizon})


@cli.command()
@click.option('--seed', type=int, default=None, help='Seed of the row sample')
@click.option('--rows', type=click.IntRange(min=2), default=20, help='Number of rows')
@click.option('--radius', '-R', type=EXACT, default='100', help='Half-width of the window')
@click.option('--resolution', type=EXACT, default=None, help='Shifts closer than this are merged')
@click.pass_context
@reports_errors
def offsets(ctx, seed, rows, radius, resolution):
    """Count distinct adjacent-row shifts of the conjugated rows system."""
    settings: Config = ctx.obj['config']
    seed = seed if seed is not None else settings.output.default_seed
    resolution = resolution if resolution is not None else GoldenNumber(settings.tiling.offset_resolution)
    with ctx.obj['monitor'].stage("offsets"):
        x = rows_sample(seed, rows, radius)
        y = rows_conjugate(x, Y_SIDE, settings.tiling.epsilon)
        count = distinct_offsets(y, radius, resolution)
    inputs = {"seed": seed, "rows": rows, "radius": radius, "resolution": resolution}
    emit(ctx, "offsets", inputs, {"distinct_offsets": count})


@cli.command()
@click.option('--side', type=click.Choice(['x', 'y']), default='x', help='Rows system to sample')
@click.option('--radius', '-R', type=EXACT, default='3/2', help='Neighborhood radius')
@click.option('--budget', type=click.IntRange(min=2), default=10000, help='Number of sampled tiles')
@click.option('--seed', type=int, default=None, help='Seed of the rows and of the sample points')
@click.option('--rows', type=click.IntRange(min=1), default=200, help='Number of rows')
@click.option('--width', type=EXACT, default='1000000', help='Half-width of the sampled box')
@click.pass_context
@reports_errors
def census(ctx, side, radius, budget, seed, rows, width):
    """Count neighborhood classes of a rows system up to translation."""
    settings: Config = ctx.obj['config']
    seed = seed if seed is not None else settings.output.default_seed
    x = rows_sample(seed, rows, width)
    spec = X_SIDE if side == 'x' else Y_SIDE
    system = x if side == 'x' else rows_conjugate(x, Y_SIDE, settings.tiling.epsilon)
    margin = radius + 2
    box = (-width, width, margin, GoldenNumber(rows) - margin)
    if box[3] <= box[2]:
        raise ValidationError(f"{rows} rows leave no room for radius {radius}")
    with ctx.obj['monitor'].stage("census"):
        found = neighborhood_census(system, radius, budget, box, seed)
    inputs = {"side": side, "radius": radius, "budget": budget, "seed": seed, "rows": rows, "width": width,
              "spec": [spec.length_a, spec.length_b]}
    result = {"classes": found.count, "saturated": found.saturated, "last_new": found.last_new,
              "samples": found.samples}
    emit(ctx, "census", inputs, result)


@cli.command()
@click.argument('patch', type=click.Path(exists=True, dir_okay=False), required=False)
@click.option('--s', 's_vector', type=PAIR, default=None, help='First translation x,y')
@click.option('--t', 't_vector', type=PAIR, default=None, help='Second translation x,y')
@click.option('--witness-level', type=click.IntRange(min=0), default=None,
              help='Use the product patch through a 2x2 block of level-k B supertiles')
@click.option('--spec', 'spec_pair', type=PAIR, default='1,tau', help='Tile lengths for --witness-level')
@click.option('--seed', type=int, default=None, help='Seed for --witness-level')
@click.option('--render', 'render_path', type=click.Path(dir_okay=False), default=None,
              help='Write an SVG of the patch around the origin')
@click.pass_context
@reports_errors
def frame(ctx, patch, s_vector, t_vector, witness_level, spec_pair, seed, render_path):
    """Check the periodic-frame conditions of a product tiling."""
    settings: Config = ctx.obj['config']
    seed = seed if seed is not None else settings.output.default_seed
    inputs: Dict[str, Any] = {}
    if witness_level is not None:
        tiling, s, t = frame_witness(spec_of(spec_pair), witness_level, seed)
        inputs.update(witness_level=witness_level, spec=list(spec_pair), seed=seed)
    elif patch:
        document, tiling = load_patch(patch, settings.tiling.max_tower_depth)
        inputs["patch"] = {"horizontal": tiling_document(tiling.horizontal),
                           "vertical": tiling_document(tiling.vertical)}
        s = t = None
    else:
        raise click.UsageError("give a PATCH file or --witness-level")
    s = s_vector or s
    t = t_vector or t
    if s is None or t is None:
        raise click.UsageError("--s and --t are required with a PATCH file")
    inputs.update(s=list(s), t=list(t), margin=settings.tiling.frame_margin)

    with ctx.obj['monitor'].stage("frame"):
        found = frame_check(tiling, s, t, settings.tiling.frame_margin)
    result: Dict[str, Any] = {
        "witness": found.is_witness,
        "conditions": [
            {"name": c.name, "holds": c.holds,
             "mismatch": None if c.mismatch is None else
             [c.mismatch.letter, c.mismatch.x, c.mismatch.y, c.mismatch.w, c.mismatch.h]}
            for c in found.conditions
        ],
    }
    if render_path:
        reach = max(abs(v) for v in (s[0], s[1], t[0], t[1])) + 2
        summary = render_rects(tiling.tiles_in(-reach, reach, -reach, reach), render_path)
        result["svg"] = {"tiles": summary.cells}
        inputs["render"] = render_path
    emit(ctx, "frame", inputs, result)
    if not found.is_witness:
        sys.exit(EXIT_FAILED)


@cli.command()
@click.argument('rules')
@click.option('--length', '-m', type=click.IntRange(min=1), default=None, help='Word length (1D)')
@click.option('--radius', '-n', type=click.IntRange(min=0), default=None, help='Window radius')
@click.pass_context
@reports_errors
def language(ctx, rules, length, radius):
    """List the words or windows a substitution admits."""
    document, system = resolve_rules(rules)
    if (length is None) == (radius is None):
        raise click.UsageError("give exactly one of --length and --radius")
    with ctx.obj['monitor'].stage("language"):
        if isinstance(system, Substitution1D):
            size = length if length is not None else 2 * radius + 1
            words = sorted(w.text() for w in system.language(size))
        else:
            if radius is None:
                raise click.UsageError("2D substitutions take --radius")
            words = sorted(w.text() for w in system.language2d(radius))
    inputs = {"rules": document.model_dump(), "length": length, "radius": radius}
    emit(ctx, "language", inputs, {"count": len(words), "words": words})


@cli.command()
@click.argument('rules')
@click.option('--period-cap', '-P', type=click.IntRange(min=1), default=6, help='Largest period tried')
@click.option('--m-cap', type=click.IntRange(min=1), default=40, help='Longest refuting window searched')
@click.pass_context
@reports_errors
def aperiodic(ctx, rules, period_cap, m_cap):
    """Refute every periodic configuration up to a period cap."""
    document, system = resolve_rules(rules)
    Validator.validate_dimension(system, 1)
    with ctx.obj['monitor'].stage("aperiodic"):
        found = aperiodicity_certificate_1d(system, period_cap, m_cap)
    outcomes = [
        {"word": o.word.text(), "period": o.period, "passes_radius_1": o.passes_radius_1,
         "refuted_at": o.refutation.size if o.refutation.found else None,
         "window": o.refutation.window.text() if o.refutation.found else None}
        for o in found.outcomes
    ]
    result = {
        "complete": found.complete,
        "candidates": len(outcomes),
        "outcomes": outcomes,
        "survivors": [o.word.text() for o in found.survivors],
    }
    inputs = {"rules": document.model_dump(), "period_cap": period_cap, "m_cap": m_cap}
    emit(ctx, "aperiodic", inputs, result)
    if not found.complete:
        sys.exit(EXIT_FAILED)


def main():
    """Main CLI entry point."""
    cli(obj={})


if __name__ == '__main__':
    main()
