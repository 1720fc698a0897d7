# +
"""
Shapovalov form, Kac-Kazhdan resonance lines and singular vectors.

S(v, v) = 1 and S(g x, y) = S(x, theta(g) y), so for a basis key x = x1...xp v
    S(x, y) = coefficient of v in theta(xp) ... theta(x1) y.
Resonance lines, with kappa = k + 2 and l, a >= 1:
    a-line: m - l + 1 + (a-1) kappa = 0, singular vector in degree (la, l(a-1))
    b-line: m + l + 1 - a kappa = 0,     singular vector in degree (l(a-1), la)
    kappa-zero: kappa = 0
"""
from collections import namedtuple
from dataclasses import dataclass, field
import functools
import numpy as np
from sympy import QQ
from sl2hat.algebra import linalg
from sl2hat.algebra.loop import E, H, F, theta_symbol, E1, E2
from sl2hat.algebra.coeffs import (Pole, rational, rf_eval, substitute,
                                   rf_text)
from sl2hat.module.verma import (Verma, ModuleVector, VACUUM, pbw,
                                 degrees_upto)
from sl2hat.module.contragradient import Covector, Contragradient, rho_word
from sl2hat.util.caching import method_caching


class PoleOnLine(RuntimeError):
    pass


class SecondResonanceLine(RuntimeError):
    pass


class ContinuationFailure(RuntimeError):
    pass


class ResonanceLine(namedtuple('ResonanceLine', 'kind l a')):

    def value(self, m, k):
        kappa = k + 2
        if self.kind == 'a-line':
            return m - self.l + 1 + (self.a - 1)*kappa
        if self.kind == 'b-line':
            return m + self.l + 1 - self.a*kappa
        return kappa

    @property
    def degree(self):
        """degree of the singular vector the line produces"""
        l, a = self.l, self.a
        if self.kind == 'a-line':
            return (l*a, l*(a-1))
        if self.kind == 'b-line':
            return (l*(a-1), l*a)
        return (l, l)

    def text(self):
        l, a = self.l, self.a
        if self.kind == 'a-line':
            return f'm - {l} + 1 + {a-1}(k+2) = 0'
        if self.kind == 'b-line':
            return f'm + {l} + 1 - {a}(k+2) = 0'
        return 'k + 2 = 0'


def _below(deg, gamma):
    return deg[0] <= gamma[0] and deg[1] <= gamma[1]


def resonance_lines(gamma):
    """lines whose singular vector fits in degrees <= gamma"""
    p1, p2 = gamma
    out = []
    for kind in ('a-line', 'b-line'):
        for l in range(1, max(p1, p2) + 1):
            for a in range(1, max(p1, p2) + 1):
                line = ResonanceLine(kind, l, a)
                if _below(line.degree, gamma):
                    out.append(line)
    if _below((1, 1), gamma):
        out.append(ResonanceLine('kappa-zero', 1, 1))
    return out


def lines_through(point, gamma):
    m0, k0 = rational(point[0]), rational(point[1])
    return [line for line in resonance_lines(gamma)
            if not line.value(m0, k0)]


class Shapovalov:

    def __init__(self, verma):
        self.verma = verma
        self.domain = verma.domain

    @method_caching
    def gram(self, deg):
        """S(key_i, key_j) over the basis of degree deg, as a tuple of rows"""
        V = self.verma
        keys = V.basis(deg)
        rows = []
        for x in keys:
            row = []
            for y in keys:
                w = V.key_vector(y)
                for s in x.word:
                    w = V.act(theta_symbol(s), w)
                row.append(self.domain.convert(w.coeff(VACUUM)))
            rows.append(tuple(row))
        return tuple(rows)

    def form(self, x, y):
        if x.degree != y.degree:
            return self.domain.zero
        keys = self.verma.basis(x.degree)
        G = self.gram(x.degree)
        total = self.domain.zero
        for i, ki in enumerate(keys):
            for j, kj in enumerate(keys):
                if ki in x.coeffs and kj in y.coeffs:
                    total += x.coeffs[ki]*G[i][j]*y.coeffs[kj]
        return total

    def covector(self, x):
        """S as a module map V -> V*"""
        keys = self.verma.basis(x.degree)
        G = self.gram(x.degree)
        coeffs = {}
        for i, ki in enumerate(keys):
            if ki in x.coeffs:
                for j, kj in enumerate(keys):
                    coeffs[kj] = coeffs.get(kj, 0) + x.coeffs[ki]*G[i][j]
        return Covector(x.degree, coeffs)

    @method_caching
    def det(self, deg):
        return linalg.det([list(row) for row in self.gram(deg)], self.domain)

    def inverse_image(self, phi):
        """S^-1(phi), for a nondegenerate degree"""
        keys = self.verma.basis(phi.degree)
        G = self.gram(phi.degree)
        columns = [list(col) for col in zip(*G)]
        rhs = [self.domain.convert(phi.coeff(key)) for key in keys]
        x = linalg.solve(columns, rhs, self.domain)
        return ModuleVector(phi.degree, dict(zip(keys, x)))


def factor_determinant(gamma, S=None):
    """
    Trial division of det S(gamma) by the resonance forms.
    Returns ({ResonanceLine: multiplicity}, cofactor).
    """
    if S is None:
        S = Shapovalov(Verma.symbolic())
    d = S.det(gamma)
    numer, denom = d.numer, d.denom
    m, k = numer.ring.gens[:2]
    factors = {}
    for line in resonance_lines(gamma):
        L = line.value(m, k)
        mult = 0
        while numer:
            q, r = numer.div(L)
            if r:
                break
            numer, mult = q, mult + 1
        if mult:
            factors[line] = mult
    return factors, d.field.field_new(numer)/d.field.field_new(denom)


@dataclass
class SingularCandidate:
    vector: ModuleVector
    line: ResonanceLine
    point: tuple
    checks: dict = field(default_factory=dict)


def singular_vectors(gamma, point):
    """basis of the joint kernel of e1, e2 on V(m0, k0-m0) in degree gamma"""
    if tuple(gamma) == (0, 0):
        return []
    m0, k0 = rational(point[0]), rational(point[1])
    V = Verma(m0, k0)
    keys = V.basis(gamma)
    rows = []
    for g in (E1, E2):
        images = [V.act(g, V.key_vector(key)) for key in keys]
        if not images:
            continue
        for t in V.basis(images[0].degree):
            rows.append([w.coeff(t) for w in images])
    through = lines_through((m0, k0), gamma)
    line = through[0] if through else None
    out = []
    for x in linalg.nullspace(rows, QQ, len(keys)):
        vec = ModuleVector(gamma, dict(zip(keys, x))).normalized(keys)
        out.append(SingularCandidate(vec, line, (m0, k0)))
    return out


def is_singular(V, w):
    return bool(w) and not V.act(E1, w) and not V.act(E2, w)


def mff_l1(which, a, V):
    """
    l = 1 Malikov-Feigin-Fuchs vectors on the line of X_a (which='X') or
    Y_a (which='Y') in the module V:
        Y1 = e/T v
        Y2 = f (e/T)^2 v + (1+kappa) h/T e/T v - (1+kappa) kappa e/T^2 v
    X_a is the rho image of Y_a.
    """
    kappa = V.k + 2
    if a == 1:
        terms = [(V.one, ((E, -1),))]
    elif a == 2:
        terms = [(V.one, ((F, 0), (E, -1), (E, -1))),
                 (1 + kappa, ((H, -1), (E, -1))),
                 (-(1 + kappa)*kappa, ((E, -2),))]
    else:
        raise NotImplementedError(f'closed form MFF vector for a={a}')
    if which == 'X':
        terms = [(sign*c, word) for c, (sign, word) in
                 ((c, rho_word(word)) for c, word in terms)]
    elif which != 'Y':
        raise ValueError(f'which must be X or Y, got {which}')
    out = None
    for c, word in terms:
        w = V.evaluate_word(word).scaled(c)
        out = w if out is None else out + w
    return out


def _clear_common_factor(xs):
    """the vector xs of rational functions rescaled to coprime polynomials"""
    nonzero = [x for x in xs if x]
    if not nonzero:
        return xs
    K = nonzero[0].field
    den = functools.reduce(lambda p, q: p.lcm(q), [x.denom for x in nonzero])
    nums = [x.numer*den.exquo(x.denom) for x in xs]
    g = functools.reduce(lambda p, q: p.gcd(q), [p for p in nums if p])
    return [K.field_new(p.exquo(g)) for p in nums]


def xy_setup(which, a, V):
    """(degree, key, scale, line, m on the line as a function of k)"""
    m, k = V.m, V.k
    if which == 'X':
        return ((a, a-1), pbw(f=(a-1,)), m + (a-1)*(k+2),
                ResonanceLine('a-line', 1, a), -(a-1)*(k+2))
    if which == 'Y':
        return ((a-1, a), pbw(e=(a,)), m + 2 - a*(k+2),
                ResonanceLine('b-line', 1, a), a*(k+2) - 2)
    raise ValueError(f'which must be X or Y, got {which}')


def continue_XY(which, a, k0, S=None):
    """
    X_a = S^-1((m+(a-1)(k+2)) (f/T^(a-1) v)*) or
    Y_a = S^-1((m+2-a(k+2)) (e/T^a v)*), solved over Q(m, k), restricted
    to its l = 1 line and evaluated at k = k0.
    """
    if a < 1:
        raise ValueError(f'a must be >= 1, got {a}')
    if S is None:
        S = Shapovalov(Verma.symbolic())
    V = S.verma
    deg, key, scale, line, on_line = xy_setup(which, a, V)
    k0 = rational(k0)
    if not k0 + 2:
        raise SecondResonanceLine('k0 = -2 lies on k + 2 = 0')
    m0 = rf_eval(on_line, {'k': k0})
    others = [L for L in lines_through((m0, k0), deg) if L != line]
    if others:
        raise SecondResonanceLine(
            f'({m0}, {k0}) also lies on {[L.text() for L in others]}')
    keys = V.basis(deg)
    x = S.inverse_image(Contragradient(V).dual(key).scaled(scale))
    coords = [x.coeff(y) for y in keys]
    try:
        coords = [substitute(V.domain.convert(c), {'m': on_line})
                  for c in coords]
    except Pole as err:
        raise PoleOnLine(f'{which}_{a} has a pole along {line.text()}') \
            from err
    pole_at_k0, rescaled = False, False
    try:
        values = [rf_eval(c, {'k': k0}) for c in coords]
    except Pole:
        pole_at_k0, values = True, None
    if values is None or not any(values):
        coords = _clear_common_factor(coords)
        values = [rf_eval(c, {'k': k0}) for c in coords]
        rescaled = True
    vec = ModuleVector(deg, dict(zip(keys, values)))
    V0 = Verma(m0, k0)
    if not vec:
        raise ContinuationFailure(f'{which}_{a} vanishes at k0={k0}')
    if not is_singular(V0, vec):
        raise ContinuationFailure(f'{which}_{a} is not singular at k0={k0}')
    normal = vec.normalized(keys)
    kernel = singular_vectors(deg, (m0, k0))
    checks = {'singular': True, 'pole at k0': pole_at_k0,
              'rescaled': rescaled, 'kernel dimension': len(kernel),
              'proportional to kernel': len(kernel) == 1 and
              kernel[0].vector == normal}
    if a <= 2:
        checks['proportional to MFF'] = \
            mff_l1(which, a, V0).normalized(keys) == normal
    return SingularCandidate(vec, line, (m0, k0), checks)


def candidate_report(c):
    return {'line': c.line.text() if c.line else None,
            'point': [rf_text(x) for x in c.point],
            'vector': c.vector.to_dict(), 'checks': c.checks}


# tests ------------------------------------------------------------------------
def test_gram_examples():
    S = Shapovalov(Verma.symbolic())
    m, k = S.verma.m, S.verma.k
    assert S.gram((0, 0)) == ((1,),)
    assert S.gram((1, 0)) == ((m,),)
    assert S.gram((0, 1)) == ((k - m,),)
    assert S.det((1, 1)) == 2*m*(k - m)*(k + 2)


def test_gram_symmetric():
    S = Shapovalov(Verma.symbolic())
    for deg in degrees_upto(5):
        G = S.gram(deg)
        assert all(G[i][j] == G[j][i] for i in range(len(G))
                   for j in range(len(G))), deg


def test_shapovalov_module_map():
    S = Shapovalov(Verma.symbolic())
    V = S.verma
    C = Contragradient(V)
    for deg in [(1, 0), (1, 1), (2, 1)]:
        keys = V.basis(deg)
        for x in keys:
            X = V.key_vector(x)
            for y in keys:
                Y = V.key_vector(y)
                assert C.pair(S.covector(X), Y) == C.pair(S.covector(Y), X)
            for f, e in (((F, 0), E1), ((E, -1), E2)):
                fx = V.act(f, X)
                for z in V.basis(fx.degree):
                    Z = V.key_vector(z)
                    assert S.form(fx, Z) == S.form(X, V.act(e, Z))
                assert S.covector(fx) == C.coact(f, S.covector(X))


def test_factor_determinant():
    factors, cofactor = factor_determinant((1, 1))
    assert factors == {ResonanceLine('a-line', 1, 1): 1,
                       ResonanceLine('b-line', 1, 1): 1,
                       ResonanceLine('kappa-zero', 1, 1): 1}
    assert cofactor == -2
    for deg in degrees_upto(3):
        factors, cofactor = factor_determinant(deg)
        assert cofactor.numer.is_ground


def _random_rational(rng, size=40, den=13):
    return QQ(int(rng.integers(-size, size)), int(rng.integers(1, den)))


def _random_points(rng, line, count):
    out = []
    for _ in range(count):
        kappa = _random_rational(rng)
        if line.kind == 'kappa-zero':
            m0, kappa = _random_rational(rng), QQ(0)
        elif line.kind == 'a-line':
            m0 = line.l - 1 - (line.a - 1)*kappa
        else:
            m0 = line.a*kappa - line.l - 1
        out.append((m0, kappa - 2))
    return out


def test_kac_kazhdan():
    S = Shapovalov(Verma.symbolic())
    rng = np.random.default_rng(11)
    for deg in degrees_upto(4):
        d = S.det(deg)
        for line in resonance_lines(deg):
            for m0, k0 in _random_points(rng, line, 20):
                assert rf_eval(d, {'m': m0, 'k': k0}) == 0, (deg, line)
        generic = 0
        while generic < 20:
            m0 = _random_rational(rng, 99, 17)
            k0 = _random_rational(rng, 99, 17)
            if lines_through((m0, k0), deg):
                continue
            assert rf_eval(d, {'m': m0, 'k': k0}) != 0, deg
            generic += 1


def test_singular_vectors():
    rng = np.random.default_rng(5)
    V = Verma.symbolic()
    checked = 0
    while checked < 5:
        kappa = _random_rational(rng, 30, 9)
        if not kappa:
            continue
        for a in (1, 2):
            m0, k0 = a*kappa - 2, kappa - 2
            gamma = (a-1, a)
            if lines_through((m0, k0), gamma) != \
                    [ResonanceLine('b-line', 1, a)]:
                continue
            (c,) = singular_vectors(gamma, (m0, k0))
            V0 = Verma(m0, k0)
            assert is_singular(V0, c.vector)
            assert c.vector == mff_l1('Y', a, V0).normalized(V.basis(gamma))
        checked += 1
    assert singular_vectors((1, 0), (3, 1)) == []
    (c,) = singular_vectors((1, 0), (0, 1))
    assert c.vector == Verma(0, 1).key_vector(pbw(f=(0,)))


def test_mff_explicit():
    V = Verma.symbolic()
    y2 = mff_l1('Y', 2, V)
    assert y2.degree == (1, 2)
    assert y2.coeff(pbw(f=(0,), e=(1, 1))) == 1
    assert mff_l1('X', 1, V) == V.key_vector(pbw(f=(0,)))
    assert mff_l1('Y', 1, V) == V.key_vector(pbw(e=(1,)))
    kappa = QQ(5, 3)
    assert is_singular(Verma(2*kappa - 2, kappa - 2),
                       mff_l1('Y', 2, Verma(2*kappa - 2, kappa - 2)))
    assert is_singular(Verma(-kappa, kappa - 2),
                       mff_l1('X', 2, Verma(-kappa, kappa - 2)))


def test_continue_xy():
    S = Shapovalov(Verma.symbolic())
    x1 = continue_XY('X', 1, '1/3', S)
    assert x1.vector == Verma(0, QQ(1, 3)).key_vector(pbw(f=(0,)))
    y1 = continue_XY('Y', 1, 1, S)
    assert y1.vector == -Verma(1, 1).key_vector(pbw(e=(1,)))
    y2 = continue_XY('Y', 2, 1, S)
    assert y2.checks['proportional to MFF']
    for which in ('X', 'Y'):
        for a in (1, 2, 3):
            c = continue_XY(which, a, '2/7', S)
            assert c.checks['singular'] and c.checks['proportional to kernel']
            if a <= 2:
                assert c.checks['proportional to MFF']
    try:
        continue_XY('X', 1, -2, S)
        raise AssertionError('kappa = 0 accepted')
    except SecondResonanceLine:
        pass


if __name__ == '__main__':
    test_gram_examples()
    test_gram_symmetric()
    test_shapovalov_module_map()
    test_factor_determinant()
    test_kac_kazhdan()
    test_singular_vectors()
    test_mff_explicit()
    test_continue_xy()
