# +
from sl2hat.util.util import get_default_args, log
from sl2hat.derham.complex import MasterConfig
import numpy as np
import ast
import os


def strip(line):
    if '#' in line:
        return line[:line.index('#')].strip()
    else:
        return line.strip()


def read_args(path='ARGS'):
    """key = value lines; values are python literals"""
    args = {}
    if not os.path.isfile(path):
        return args
    for line in open(path).readlines():
        line = strip(line)
        if not line:
            continue
        if '=' not in line:
            raise RuntimeError(f'{path}: expected key = value, got {line}')
        key, value = line.split('=', 1)
        args[key.strip()] = ast.literal_eval(value.strip())
    return args


def update_args(kwargs, source=None):
    if source is None:
        source = ARGS
    for kw in kwargs:
        if kw in source and source[kw] is not None:
            kwargs[kw] = source[kw]


def campaign_args(func, **over):
    """defaults of func, then the ARGS file, then over"""
    kwargs = get_default_args(func)
    update_args(kwargs)
    update_args(kwargs, source=over)
    return kwargs


def configs(n, seed, draws=1, config=None):
    """MasterConfig from a JSON file, or draws from a single seeded generator"""
    if config is not None:
        return [MasterConfig.from_json(config)]
    rng = np.random.default_rng(seed)
    return [MasterConfig.random(n, rng) for _ in range(draws)]


def emit(report, output=None):
    """writes the report; returns the exit status"""
    report.write(output)
    failed = len(report.failures)
    log(f'{report.verb}: {len(report.checks)} checks, {failed} failed')
    return 0 if report.holds else 1


# ARGS
ARGS = read_args()


def test_read_args():
    import tempfile
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'ARGS')
        with open(path, 'w') as f:
            f.write('a_max = 3  # small\n\nside = "B"\ndegree = (2, 1)\n')
        args = read_args(path)
    assert args == {'a_max': 3, 'side': 'B', 'degree': (2, 1)}

    def campaign(a_max=5, side='A', seed=0):
        return a_max, side, seed

    kwargs = get_default_args(campaign)
    update_args(kwargs, source=args)
    update_args(kwargs, source={'seed': 4, 'side': None})
    assert kwargs == {'a_max': 3, 'side': 'B', 'seed': 4}


def test_configs():
    a = [cfg.to_dict() for cfg in configs(2, 7, draws=3)]
    b = [cfg.to_dict() for cfg in configs(2, 7, draws=3)]
    assert a == b and len(a) == 3


if __name__ == '__main__':
    test_read_args()
    test_configs()
