# +
from sl2hat.cl import configs
from sl2hat.derham.complex import (MasterConfig, Truncation, cohomology_ranks,
                                   check_relation, detect_resonances,
                                   logarithmic_closure, differential_triplets)
from sl2hat.io.report import Report
from sl2hat.util.util import log


def derham_ranks(n=3, A=4, seed=7, draws=1, config=None, triplets=False):
    """h0 = 0 and h1 = n - 1 for the truncated differential"""
    if n < 1 or A < 1:
        raise ValueError(f'need n >= 1 and A >= 1, got n={n}, A={A}')
    report = Report('derham-ranks', n=n, A=A, seed=seed, draws=draws,
                    config=config)
    trunc = Truncation(A)
    for cfg in configs(n, seed, draws, config):
        log(f'ranks for {cfg}')
        ranks = cohomology_ranks(cfg, trunc)
        check = {'config': cfg.to_dict(), 'generic': cfg.is_generic()}
        check.update(ranks)
        if triplets:
            check['matrix'] = differential_triplets(cfg, trunc)
        check['holds'] = ranks['h0'] == 0 and ranks['h1'] == cfg.n - 1
        report.add(check)
    return report


def derham_relations(n=3, seed=7, A=3, config=None):
    """
    With z and m from the config (or drawn), the log relation at the
    given kappa, and the two resonance relations at kappa = sum m and
    kappa = sum m / 2, certified by explicit primitives.
    """
    report = Report('derham-relations', n=n, seed=seed, A=A, config=config)
    trunc = Truncation(A)
    (cfg,) = configs(n, seed, 1, config)
    total = sum(cfg.m, cfg.domain.zero)
    z = [cfg.domain.to_sympy(x) for x in cfg.z]
    m = [cfg.domain.to_sympy(x) for x in cfg.m]
    cases = [('log', cfg)]
    if total:
        cases += [('first', MasterConfig(z, m, cfg.domain.to_sympy(total))),
                  ('second', MasterConfig(z, m,
                                          cfg.domain.to_sympy(total/2)))]
    for which, c in cases:
        log(f'{which} relation for {c}')
        check = check_relation(c, which, trunc)
        check['config'] = c.to_dict()
        check['resonances'] = detect_resonances(c, A + 1)
        check['logarithmic closure'] = logarithmic_closure(c)
        check['holds'] = check['holds'] and check['resonant'] and \
            check['logarithmic closure']
        report.add(check)
    return report


def test_campaigns():
    report = derham_ranks(3, 4, seed=7)
    assert report.holds and report.checks[0]['h1'] == 2
    report = derham_ranks(2, 1, seed=1, draws=2, triplets=True)
    assert report.holds and all(c['matrix'] for c in report.checks)
    report = derham_relations(3, seed=7)
    assert report.holds and len(report.checks) == 3


if __name__ == '__main__':
    test_campaigns()
