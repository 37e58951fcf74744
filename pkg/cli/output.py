"""Rendering of command results to JSON/CSV text and writing them out."""
import logging
from pathlib import Path

import pandas as pd

from fps.serializers import dumps, format_rational, series_to_dict
from picard.iteration import CONTRACTION_SLACK

logger = logging.getLogger(__name__)


def frame_csv(frame):
    """CSV text; floats keep their shortest round-trip repr."""
    return frame.to_csv(index=False, lineterminator='\n')


def json_text(obj):
    return dumps(obj) + '\n'


def report_frame(report):
    return pd.DataFrame(report.rows(), columns=['n', 'a', 'c', 'egf', 'root_test', 'integral'])


def solve_document(kind, series, report):
    return {
        'kind': kind.tag.value,
        'order': series.order,
        'series': series_to_dict(series),
        'report': report.rows(),
    }


def iterates_frame(orbit):
    columns = {'x': orbit.iterates[0].nodes}
    for n, f in enumerate(orbit.iterates, start=1):
        columns[f'f_{n}'] = f.values
    return pd.DataFrame(columns)


def picard_summary(orbit):
    return {
        'gaps': list(orbit.gaps),
        'contraction': [
            {'n': n, 'lhs': lhs, 'rhs': rhs, 'ok': lhs <= rhs + CONTRACTION_SLACK}
            for n, (lhs, rhs) in enumerate(orbit.phi_checks, start=1)
        ],
        'interleaving_ok': orbit.interleaving_ok,
        'separation': list(orbit.separation),
        'violations': [v._asdict() for v in orbit.violations],
        'params': orbit.params(),
    }


def pade_frame(R):
    size = max(R.L, R.M) + 1
    pad = lambda coeffs: [format_rational(c) for c in coeffs] + [None] * (size - len(coeffs))
    return pd.DataFrame({'k': range(size), 'num': pad(R.numerator), 'den': pad(R.denominator)})


def emit(artifacts, out_dir, stdout):
    """Write every (name, text) artifact into ``out_dir``, or the first one to ``stdout``.

    Raises OSError when the directory or a file cannot be written.
    """
    if out_dir is None:
        name, text = artifacts[0]
        stdout.write(text, ending='')
        return []
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in artifacts:
        path = directory / name
        path.write_text(text, encoding='utf-8')
        logger.info("wrote %s", path)
        written.append(path)
    return written
