# +
from sl2hat.cl import configs
from sl2hat.derham.complex import Truncation
from sl2hat.derham.chain import ChainComplex, chain_square_keys
from sl2hat.io.report import Report
from sl2hat.util.parallel import distribute
from sl2hat.util.util import log


def chain_square(n=2, a_max=3, draws=3, seed=0, config=None):
    """
    d eta0 = eta1 (d + alpha) on every basis function with a <= a_max,
    and injectivity of eta1 on the window A = a_max, per parameter draw.
    """
    if n < 1 or a_max < 1:
        raise ValueError(f'need n >= 1 and a_max >= 1, got {n}, {a_max}')
    report = Report('chain-square', n=n, a_max=a_max, draws=draws, seed=seed,
                    config=config)
    for draw, cfg in enumerate(configs(n, seed, draws, config)):
        log(f'chain square, draw {draw}: {cfg}')
        X = ChainComplex(cfg)
        keys = chain_square_keys(cfg.n, a_max)
        for check in distribute(X.verify_chain_square, keys):
            check['draw'] = draw
            report.add(check)
        report.add({'check': 'eta1 injective', 'draw': draw,
                    'holds': X.eta1_injective(Truncation(a_max))})
        report.add({'check': 'logarithmic image', 'draw': draw,
                    'holds': X.logarithmic_image()})
    return report


def test_chain_square():
    report = chain_square(2, 2, draws=1, seed=4)
    assert report.holds
    assert len(report.checks) == len(chain_square_keys(2, 2)) + 2


if __name__ == '__main__':
    test_chain_square()
