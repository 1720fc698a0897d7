# +
"""
Rational functions regular on U = C - {z_1, ..., z_n}, in the basis
    1/(t-z_i)^a (a >= 1)  and  t^a (a >= 0).
A function is a pair (poles, polys) of sparse maps {(i, a): c} and {a: c},
with i counted from 1. z is the sequence of points.
"""
from math import comb
from sympy import QQ, symbols, cancel, diff
from sympy.polys.rings import ring
from sympy.polys.ring_series import rs_series_inversion


def power(x, e):
    """x**e, with x**0 = 1 also for a zero field element x"""
    return x**e if e else 1


def shift_coeff(a, w, s):
    """coefficient of u^s in (u + w)^(-a)"""
    return comb(a + s - 1, s)*(-1)**s/w**(a + s)


def _add(table, key, c):
    if c:
        c = table.get(key, 0) + c
        if c:
            table[key] = c
        else:
            table.pop(key, None)


def combine(*functions, scalars=None):
    poles, polys = {}, {}
    for n, (p, q) in enumerate(functions):
        x = 1 if scalars is None else scalars[n]
        for key, c in p.items():
            _add(poles, key, x*c)
        for key, c in q.items():
            _add(polys, key, x*c)
    return poles, polys


def _poly_times_pole(z, b, i, a):
    """t^b / (t-z_i)^a"""
    zi = z[i-1]
    poles, polys = {}, {}
    for r in range(b + 1):
        # t^b = sum_r C(b, r) z_i^(b-r) (t-z_i)^r
        c = comb(b, r)*power(zi, b - r)
        if r < a:
            _add(poles, (i, a - r), c)
        else:
            q = r - a
            for p in range(q + 1):
                _add(polys, p, c*comb(q, p)*power(-zi, q - p))
    return poles, polys


def _pole_times_pole(z, i, a, j, b):
    if i == j:
        return {(i, a + b): 1}, {}
    poles = {}
    w = z[i-1] - z[j-1]
    for s in range(a):
        _add(poles, (i, a - s), shift_coeff(b, w, s))
    for s in range(b):
        _add(poles, (j, b - s), shift_coeff(a, -w, s))
    return poles, {}


def multiply(z, f, g):
    parts, scalars = [], []
    (fp, fq), (gp, gq) = f, g
    for (i, a), c in fp.items():
        for (j, b), d in gp.items():
            parts.append(_pole_times_pole(z, i, a, j, b))
            scalars.append(c*d)
        for b, d in gq.items():
            parts.append(_poly_times_pole(z, b, i, a))
            scalars.append(c*d)
    for a, c in fq.items():
        for (j, b), d in gp.items():
            parts.append(_poly_times_pole(z, a, j, b))
            scalars.append(c*d)
        for b, d in gq.items():
            parts.append(({}, {a + b: 1}))
            scalars.append(c*d)
    return combine(*parts, scalars=scalars)


def derivative(f):
    poles, polys = {}, {}
    for (i, a), c in f[0].items():
        _add(poles, (i, a + 1), -a*c)
    for a, c in f[1].items():
        if a:
            _add(polys, a - 1, a*c)
    return poles, polys


def expand_at(z, j, f, order):
    """
    Laurent coefficients {s: c} of f in u = t - z_j, for s <= order.
    """
    zj = z[j-1]
    out = {}
    for (i, a), c in f[0].items():
        if i == j:
            if -a <= order:
                _add(out, -a, c)
            continue
        w = zj - z[i-1]
        for s in range(order + 1):
            _add(out, s, c*shift_coeff(a, w, s))
    for a, c in f[1].items():
        for s in range(min(a, order) + 1):
            _add(out, s, c*comb(a, s)*power(zj, a - s))
    return out


def expand_at_infinity(z, f, order):
    """
    Laurent coefficients {s: c} of f in y = 1/t, for s <= order:
    t^a = y^(-a) and (t-z_i)^(-a) = sum_s C(a+s-1, s) z_i^s y^(a+s).
    """
    out = {}
    for (i, a), c in f[0].items():
        for s in range(order - a + 1):
            _add(out, a + s, c*comb(a + s - 1, s)*power(z[i-1], s))
    for a, c in f[1].items():
        if -a <= order:
            _add(out, -a, c)
    return out


def pole_order(f, j):
    """order of the pole of f at z_j, or at infinity for j = None"""
    if j is None:
        return max(f[1], default=0)
    return max((a for (i, a) in f[0] if i == j), default=0)


def to_sympy(z, f, t, convert=lambda c: c):
    expr = 0
    for (i, a), c in f[0].items():
        expr += convert(c)/(t - convert(z[i-1]))**a
    for a, c in f[1].items():
        expr += convert(c)*t**a
    return expr


# tests ------------------------------------------------------------------------
_z = (QQ(0), QQ(1), QQ(-3, 2))
_t = symbols('t')


def _to_sympy(c):
    return QQ.to_sympy(QQ.convert(c))


def _sym(f):
    return to_sympy(_z, f, _t, _to_sympy)


def _functions():
    out = [({(1, 1): QQ(1)}, {}), ({(2, 3): QQ(2)}, {}), ({}, {0: QQ(1)}),
           ({}, {2: QQ(-1, 3)}), ({(3, 2): QQ(1), (1, 1): QQ(5)}, {1: QQ(7)})]
    return out


def test_multiply():
    for f in _functions():
        for g in _functions():
            got = _sym(multiply(_z, f, g))
            assert cancel(got - _sym(f)*_sym(g)) == 0, (f, g)


def test_derivative():
    for f in _functions():
        assert cancel(_sym(derivative(f)) - diff(_sym(f), _t)) == 0


def test_expansions():
    u = symbols('u')
    for f in _functions():
        expr = _sym(f)
        for j in (1, 2, 3):
            coeffs = expand_at(_z, j, f, 4)
            series = expr.subs(_t, u + QQ.to_sympy(_z[j-1])).series(u, 0, 5)
            series = series.removeO()
            mine = sum(_to_sympy(c)*u**s for s, c in coeffs.items())
            assert cancel(series - mine) == 0, (f, j)
        coeffs = expand_at_infinity(_z, f, 4)
        series = expr.subs(_t, 1/u).series(u, 0, 5).removeO()
        mine = sum(_to_sympy(c)*u**s for s, c in coeffs.items())
        assert cancel(series - mine) == 0, f


def test_shift_coeff():
    assert shift_coeff(1, QQ(2), 0) == QQ(1, 2)
    assert shift_coeff(2, QQ(1), 1) == -2
    assert shift_coeff(3, QQ(-1), 2) == -6
    _, u = ring('u', QQ)
    for a in (1, 2, 4):
        for w in (QQ(2), QQ(-1, 3)):
            inverse = rs_series_inversion((u + w)**a, u, 6)
            assert all(shift_coeff(a, w, s) == inverse.get((s,), 0)
                       for s in range(6))
    assert power(QQ(0), 0) == 1 and power(QQ(0), 2) == 0


if __name__ == '__main__':
    test_multiply()
    test_derivative()
    test_expansions()
    test_shift_coeff()
