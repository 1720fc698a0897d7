# +
from sl2hat.algebra.coeffs import rational, rf_eval, rf_text
from sl2hat.module.verma import Verma
from sl2hat.module.shapovalov import (Shapovalov, ResonanceLine,
                                      SecondResonanceLine, PoleOnLine,
                                      ContinuationFailure, factor_determinant,
                                      resonance_lines, lines_through,
                                      singular_vectors, is_singular, mff_l1,
                                      continue_XY, candidate_report)
from sl2hat.io.report import Report
from sl2hat.util.util import log
from sympy import QQ
import numpy as np


def _draw(rng, size=40, den=13):
    return QQ(int(rng.integers(-size, size)), int(rng.integers(1, den)))


def point_on(line, rng):
    """(m0, k0) on a resonance line"""
    kappa = _draw(rng)
    if line.kind == 'kappa-zero':
        return _draw(rng), QQ(-2)
    if line.kind == 'a-line':
        return line.l - 1 - (line.a - 1)*kappa, kappa - 2
    return line.a*kappa - line.l - 1, kappa - 2


def _degree(degree):
    if isinstance(degree, str):
        degree = tuple(int(p) for p in degree.split(','))
    if len(degree) != 2 or min(degree) < 0 or sum(degree) == 0:
        raise ValueError(f'invalid degree {degree}')
    return tuple(degree)


def shapovalov(degree=(1, 1), points=20, seed=0):
    """
    Gram determinant of the given degree: its factorization into resonance
    forms, its zeros on every line and its values at generic points.
    """
    gamma = _degree(degree)
    report = Report('shapovalov', degree=list(gamma), points=points,
                    seed=seed)
    S = Shapovalov(Verma.symbolic())
    log(f'gram determinant in degree {gamma}')
    d = S.det(gamma)
    factors, cofactor = factor_determinant(gamma, S)
    report.add({'check': 'factorization', 'det': rf_text(d),
                'factors': {line.text(): mult
                            for line, mult in factors.items()},
                'cofactor': rf_text(cofactor),
                'holds': cofactor.numer.is_ground})
    rng = np.random.default_rng(seed)
    for line in resonance_lines(gamma):
        values = [rf_eval(d, {'m': m0, 'k': k0})
                  for m0, k0 in (point_on(line, rng) for _ in range(points))]
        report.add({'check': 'vanishes on line', 'line': line.text(),
                    'holds': not any(values)})
    generic = 0
    while generic < points:
        m0, k0 = _draw(rng, 99, 17), _draw(rng, 99, 17)
        if lines_through((m0, k0), gamma):
            continue
        value = rf_eval(d, {'m': m0, 'k': k0})
        report.add({'check': 'nonzero off lines',
                    'point': [rf_text(m0), rf_text(k0)],
                    'holds': value != 0})
        generic += 1
    return report


def singular(which='Y', a=1, points=3, seed=0):
    """
    At random points of the l = 1 line of X_a or Y_a, off all other lines:
    the joint kernel of e1, e2 is one dimensional and, for a <= 2, spanned
    by the closed-form vector.
    """
    if which not in ('X', 'Y') or a < 1:
        raise ValueError(f'invalid which={which} or a={a}')
    line = ResonanceLine('a-line' if which == 'X' else 'b-line', 1, a)
    gamma = line.degree
    report = Report('singular', which=which, a=a, points=points, seed=seed)
    rng = np.random.default_rng(seed)
    found = 0
    while found < points:
        m0, k0 = point_on(line, rng)
        if lines_through((m0, k0), gamma) != [line]:
            continue
        found += 1
        kernel = singular_vectors(gamma, (m0, k0))
        check = {'line': line.text(), 'point': [rf_text(m0), rf_text(k0)],
                 'kernel dimension': len(kernel)}
        holds = len(kernel) == 1
        if holds:
            V0 = Verma(m0, k0)
            vec = kernel[0].vector
            check['vector'] = vec.to_dict()
            holds = is_singular(V0, vec)
            if a <= 2:
                mff = mff_l1(which, a, V0).normalized(V0.basis(gamma))
                check['proportional to MFF'] = mff == vec
                holds = holds and mff == vec
        check['holds'] = holds
        report.add(check)
    return report


def continue_xy(which='Y', a=2, k0='1'):
    """analytic continuation of X_a or Y_a to the point of its line at k0"""
    report = Report('continue-xy', which=which, a=a, k0=str(k0))
    k0 = rational(k0)
    try:
        c = continue_XY(which, a, k0)
    except (SecondResonanceLine, PoleOnLine, ContinuationFailure) as err:
        report.add({'which': which, 'a': a, 'error': type(err).__name__,
                    'message': str(err), 'holds': False})
        return report
    check = candidate_report(c)
    check.update({'which': which, 'a': a,
                  'holds': all(v for key, v in c.checks.items()
                               if key not in ('pole at k0', 'rescaled',
                                              'kernel dimension'))})
    report.add(check)
    return report


def test_campaigns():
    report = shapovalov((1, 1), points=3, seed=1)
    assert report.holds
    assert len(report.checks) == 1 + 3 + 3
    assert singular('Y', 2, points=2, seed=2).holds
    assert singular('X', 1, points=2, seed=2).holds
    report = continue_xy('Y', 2, '1')
    assert report.holds and report.checks[0]['checks']['proportional to MFF']
    report = continue_xy('X', 1, '-2')
    assert not report.holds
    assert report.checks[0]['error'] == 'SecondResonanceLine'


if __name__ == '__main__':
    test_campaigns()
