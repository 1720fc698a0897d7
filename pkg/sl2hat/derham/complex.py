# +
"""
The twisted de Rham complex of U = C - {z_1, ..., z_n}

    0 -> Omega^0(U) -> Omega^1(U) -> 0,    d + alpha,

with master function Phi = prod (t - z_i)^(-m_i/kappa) and
alpha = dPhi/Phi = -(1/kappa) sum m_i dt/(t - z_i).

Grade 0 basis: 1/(t-z_i)^a (a >= 1) and t^a (a >= 0).
Grade 1 basis: dt/(t-z_i)^a (a >= 1) and t^a dt (a >= 0).
Basis keys are ('pole', i, a) and ('poly', a).
"""
import json
import warnings
import numpy as np
from sympy import QQ, sympify, symbols, cancel, diff
from sl2hat.algebra.coeffs import Pool, rf_text, is_symbolic
from sl2hat.algebra.linalg import rank, solve_particular, triplets
from sl2hat.util.parallel import distribute
from sl2hat.derham import laurent


class KappaZero(RuntimeError):
    pass


def _parse(values):
    exprs = [sympify(x) for x in values]
    names = sorted({str(s) for x in exprs for s in x.free_symbols})
    if names:
        pool = Pool(*names)
        return pool, pool.domain, [pool.domain.from_sympy(x) for x in exprs]
    return None, QQ, [QQ.from_sympy(x) for x in exprs]


class MasterConfig:
    """
    Points z_1..z_n, weights m_1..m_n and kappa. Entries are ints, sympy
    numbers or strings ('3/2', 'kappa'); free symbols make the domain a
    fraction field over them, otherwise it is QQ.
    """

    def __init__(self, z, m, kappa):
        z, m = list(z), list(m)
        if len(z) == 0 or len(z) != len(m):
            raise ValueError(f'need n >= 1 points and n weights, got {z}, {m}')
        self.pool, self.domain, values = _parse(z + m + [kappa])
        self.n = len(z)
        self.z = tuple(values[:self.n])
        self.m = tuple(values[self.n:2*self.n])
        self.kappa = values[-1]
        if any(sympify(x).free_symbols for x in z):
            warnings.warn('symbolic points z_i: expect slow computations')
        for i in range(self.n):
            for j in range(i):
                if self.z[i] == self.z[j]:
                    raise ValueError(f'z_{j+1} = z_{i+1} = {rf_text(self.z[i])}')

    @property
    def m_inf(self):
        """m_(n+1) = m_1 + ... + m_n - 2"""
        return sum(self.m, self.domain.zero) - 2

    @property
    def weights(self):
        """the n+1 highest weights m_1, ..., m_n, m_(n+1)"""
        return self.m + (self.m_inf,)

    @property
    def k(self):
        return self.kappa - 2

    def is_generic(self):
        """no m_i/kappa and no (m_1+...+m_n)/kappa is an integer"""
        if is_symbolic(self.kappa) or any(is_symbolic(x) for x in self.m):
            return bool(self.kappa) and not detect_resonances(self, 8)
        if not self.kappa:
            return False
        ratios = [x/self.kappa for x in self.m + (self.m_inf + 2,)]
        return all(QQ.denom(r) != 1 for r in ratios)

    def to_dict(self):
        return {'z': [rf_text(x) for x in self.z],
                'm': [rf_text(x) for x in self.m],
                'kappa': rf_text(self.kappa)}

    @staticmethod
    def from_dict(d):
        return MasterConfig(d['z'], d['m'], d['kappa'])

    @staticmethod
    def from_json(path):
        with open(path) as f:
            return MasterConfig.from_dict(json.load(f))

    @staticmethod
    def random(n, rng, kappa=None, generic=True):
        """
        Random rational points and weights drawn from rng
        (numpy.random.Generator); kappa is drawn too unless given.
        With generic=True, draws are repeated until is_generic().
        """
        def draw():
            num = int(rng.integers(-30, 31))
            den = int(rng.integers(1, 10))
            return QQ(num, den)

        while True:
            z = []
            while len(z) < n:
                x = draw()
                if x not in z:
                    z.append(x)
            m = [draw() for _ in range(n)]
            k = draw() if kappa is None else kappa
            if kappa is None and not k:
                continue
            cfg = MasterConfig([QQ.to_sympy(x) for x in z],
                               [QQ.to_sympy(x) for x in m],
                               QQ.to_sympy(k) if QQ.of_type(k) else k)
            if not generic or cfg.is_generic():
                return cfg

    def __repr__(self):
        return 'MasterConfig({})'.format(self.to_dict())


class DeRhamElement:

    def __init__(self, grade, poles=None, polys=None):
        if grade not in (0, 1):
            raise ValueError(f'grade must be 0 or 1, got {grade}')
        self.grade = grade
        self.poles = {key: c for key, c in (poles or {}).items() if c}
        self.polys = {key: c for key, c in (polys or {}).items() if c}

    @staticmethod
    def basis(grade, key, coeff=1):
        if key[0] == 'pole':
            return DeRhamElement(grade, poles={key[1:]: coeff})
        return DeRhamElement(grade, polys={key[1]: coeff})

    @staticmethod
    def one():
        return DeRhamElement(0, polys={0: 1})

    @property
    def function(self):
        return self.poles, self.polys

    def terms(self):
        for (i, a), c in sorted(self.poles.items()):
            yield ('pole', i, a), c
        for a, c in sorted(self.polys.items()):
            yield ('poly', a), c

    def _same(self, other):
        if self.grade != other.grade:
            raise ValueError('adding elements of different grades')

    def __add__(self, other):
        self._same(other)
        poles, polys = laurent.combine(self.function, other.function)
        return DeRhamElement(self.grade, poles, polys)

    def __neg__(self):
        return -1*self

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        return DeRhamElement(self.grade,
                             {key: scalar*c for key, c in self.poles.items()},
                             {key: scalar*c for key, c in self.polys.items()})

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __eq__(self, other):
        if not isinstance(other, DeRhamElement):
            return NotImplemented
        return self.grade == other.grade and not (self - other)

    def __bool__(self):
        return bool(self.poles or self.polys)

    def text(self):
        if not self:
            return '0'
        parts = []
        for key, c in self.terms():
            if key[0] == 'pole':
                base = 'dt' if self.grade else '1'
                term = f'{base}/(t-z{key[1]})^{key[2]}'
            elif self.grade:
                term = f't^{key[1]} dt' if key[1] else 'dt'
            else:
                term = f't^{key[1]}' if key[1] else '1'
            parts.append(f'({rf_text(c)})*{term}')
        return ' + '.join(parts)

    def __repr__(self):
        return self.text()


def _kappa_d_pole(cfg, i, a):
    """kappa * d(1/(t-z_i)^a), as (poles, polys)"""
    z, m, kappa = cfg.z, cfg.m, cfg.kappa
    poles = {(i, a+1): -(m[i-1] + a*kappa)}
    for j in range(1, cfg.n + 1):
        if j == i:
            continue
        w = z[j-1] - z[i-1]
        for k in range(1, a + 1):
            laurent._add(poles, (i, a+1-k), m[j-1]/w**k)
        laurent._add(poles, (j, 1), -m[j-1]/w**a)
    return poles, {}


def _kappa_d_poly(cfg, a):
    """kappa * d(t^a), as (poles, polys)"""
    z, m, kappa = cfg.z, cfg.m, cfg.kappa
    polys = {}
    if a:
        laurent._add(polys, a-1, a*kappa - sum(m, cfg.domain.zero))
    for k in range(1, a):
        laurent._add(polys, a-1-k, -sum((mj*zj**k for mj, zj in zip(m, z)),
                                        cfg.domain.zero))
    poles = {}
    for j in range(1, cfg.n + 1):
        laurent._add(poles, (j, 1), -m[j-1]*laurent.power(z[j-1], a))
    return poles, polys


def differential(cfg, x):
    """d + alpha on a grade 0 element"""
    if x.grade != 0:
        raise ValueError('the differential acts on grade 0 elements')
    if not cfg.kappa:
        raise KappaZero('kappa = 0: the twisted complex is not defined')
    parts, scalars = [], []
    for key, c in x.terms():
        if key[0] == 'pole':
            parts.append(_kappa_d_pole(cfg, key[1], key[2]))
        else:
            parts.append(_kappa_d_poly(cfg, key[1]))
        scalars.append(c/cfg.kappa)
    poles, polys = laurent.combine(*parts, scalars=scalars)
    return DeRhamElement(1, poles, polys)


def alpha(cfg):
    """dPhi/Phi"""
    return DeRhamElement(1, {(j, 1): -cfg.m[j-1]/cfg.kappa
                             for j in range(1, cfg.n + 1)})


def differential_by_products(cfg, x):
    """d x + alpha x, from the product and derivative on functions"""
    f = laurent.combine(laurent.derivative(x.function),
                        laurent.multiply(cfg.z, alpha(cfg).function,
                                         x.function))
    return DeRhamElement(1, *f)


class Truncation:
    """
    The window
        source: 1/(t-z_i)^a with a <= A, t^a with a <= A
        target: dt/(t-z_i)^a with a <= A+1, t^a dt with a <= A-1
    The differential maps the source into the target.
    """

    def __init__(self, A):
        if A < 1:
            raise ValueError(f'truncation A must be >= 1, got {A}')
        self.A = A

    def source(self, n):
        return ([('pole', i, a) for i in range(1, n+1)
                 for a in range(1, self.A + 1)] +
                [('poly', a) for a in range(self.A + 1)])

    def target(self, n):
        return ([('pole', i, a) for i in range(1, n+1)
                 for a in range(1, self.A + 2)] +
                [('poly', a) for a in range(self.A)])

    def coordinates(self, x, keys):
        """x in the basis keys, or None if x is outside their span"""
        index = {key: r for r, key in enumerate(keys)}
        out = [0]*len(keys)
        for key, c in x.terms():
            if key not in index:
                return None
            out[index[key]] = c
        return out

    def matrix(self, cfg):
        """rows: target keys, columns: source keys"""
        source, target = self.source(cfg.n), self.target(cfg.n)

        def column(key):
            return self.coordinates(
                differential(cfg, DeRhamElement.basis(0, key)), target)

        columns = distribute(column, source)
        return [[col[r] for col in columns] for r in range(len(target))]

    def __repr__(self):
        return f'Truncation({self.A})'


def cohomology_ranks(cfg, trunc):
    if not cfg.kappa:
        raise KappaZero('kappa = 0: the twisted complex is not defined')
    rows = trunc.matrix(cfg)
    ns, nt = len(trunc.source(cfg.n)), len(trunc.target(cfg.n))
    r = rank(rows, cfg.domain, ns)
    return {'h0': ns - r, 'h1': nt - r, 'rank': r, 'source': ns, 'target': nt}


def find_relation_primitive(cfg, target, trunc):
    """
    g with (d + alpha) g = target inside the window, with all free
    coordinates zero; None if there is none in the window.
    """
    if target.grade != 1:
        raise ValueError('the target of a primitive search has grade 1')
    source, keys = trunc.source(cfg.n), trunc.target(cfg.n)
    rhs = trunc.coordinates(target, keys)
    if rhs is None:
        return None
    x = solve_particular(trunc.matrix(cfg), rhs, cfg.domain, len(source))
    if x is None:
        return None
    g = DeRhamElement(0)
    for key, c in zip(source, x):
        if c:
            g = g + DeRhamElement.basis(0, key, c)
    return g


def detect_resonances(cfg, a_max):
    """
    Satisfied resonance conditions for a <= a_max:
        (i)   m_i + (a-1) kappa = 0
        (ii)  m_(n+1) + 2 - a kappa = 0
        (iii) kappa = 0
    """
    out = []
    for a in range(1, a_max + 1):
        for i, mi in enumerate(cfg.m, 1):
            if not mi + (a-1)*cfg.kappa:
                out.append({'kind': 'i', 'i': i, 'a': a})
        if not cfg.m_inf + 2 - a*cfg.kappa:
            out.append({'kind': 'ii', 'i': cfg.n + 1, 'a': a})
    if not cfg.kappa:
        out.append({'kind': 'iii', 'i': None, 'a': None})
    return out


def log_form(cfg, coeffs):
    """sum c_j dt/(t - z_j)"""
    return DeRhamElement(1, {(j, 1): c for j, c in enumerate(coeffs, 1)})


def log_relation(cfg):
    """sum m_j omega_j, with primitive -kappa"""
    return log_form(cfg, cfg.m), DeRhamElement.one().scaled(-cfg.kappa)


def first_resonance_relation(cfg):
    """sum z_j m_j omega_j, exact when m_(n+1) + 2 = kappa"""
    form = log_form(cfg, [z*m for z, m in zip(cfg.z, cfg.m)])
    return form, DeRhamElement(0, polys={1: -cfg.kappa})


def second_resonance_relation(cfg):
    """
    sum z_j^2 m_j omega_j - (1/kappa)(sum z_j m_j)(sum z_j m_j omega_j),
    exact when m_(n+1) + 2 = 2 kappa
    """
    zm = sum((z*m for z, m in zip(cfg.z, cfg.m)), cfg.domain.zero)
    form = log_form(cfg, [z*z*m - zm*z*m/cfg.kappa
                          for z, m in zip(cfg.z, cfg.m)])
    return form, DeRhamElement(0, polys={2: -cfg.kappa, 1: zm})


_relations = {'log': (log_relation, None),
              'first': (first_resonance_relation, 1),
              'second': (second_resonance_relation, 2)}


def check_relation(cfg, which, trunc):
    """
    Searches a primitive for one of the relations 'log', 'first',
    'second' and compares it with the closed form.
    """
    builder, a = _relations[which]
    form, expected = builder(cfg)
    resonant = a is None or not cfg.m_inf + 2 - a*cfg.kappa
    g = find_relation_primitive(cfg, form, trunc)
    return {'relation': which, 'resonant': resonant,
            'form': form.text(),
            'primitive': None if g is None else g.text(),
            'expected': expected.text(),
            'exact': g is not None,
            'holds': (g is not None) == resonant and
            (g is None or differential(cfg, g) == form)}


def logarithmic_closure(cfg):
    """(d + alpha) 1 lies in the span of omega_1, ..., omega_n"""
    d1 = differential(cfg, DeRhamElement.one())
    return not d1.polys and all(a == 1 for (_, a) in d1.poles)


def differential_triplets(cfg, trunc):
    return triplets(trunc.matrix(cfg), text=rf_text)


# tests ------------------------------------------------------------------------
def _oracle(cfg, key):
    """kappa (d phi/dt + alpha phi) by sympy differentiation"""
    t = symbols('t')
    phi = laurent.to_sympy(cfg.z, DeRhamElement.basis(0, key).function, t,
                           _to_sympy)
    kappa = QQ.to_sympy(cfg.kappa)
    a = sum(QQ.to_sympy(m)/(t - QQ.to_sympy(z)) for z, m in zip(cfg.z, cfg.m))
    return t, kappa*diff(phi, t) - a*phi


def _to_sympy(c):
    return QQ.to_sympy(QQ.convert(c))


def test_differential_oracle():
    cfg = MasterConfig(['0', '1', '-3/2'], ['1/3', '2', '-5/7'], '7/4')
    keys = [('pole', i, a) for i in (1, 2, 3) for a in range(1, 5)]
    keys += [('poly', a) for a in range(5)]
    for key in keys:
        t, expected = _oracle(cfg, key)
        d = differential(cfg, DeRhamElement.basis(0, key))
        got = laurent.to_sympy(cfg.z, d.function, t, _to_sympy)
        assert cancel(QQ.to_sympy(cfg.kappa)*got - expected) == 0, key
        assert d == differential_by_products(cfg, DeRhamElement.basis(0, key))


def test_differential_examples():
    cfg = MasterConfig([0, 1], [1, 1], 5)
    d = differential(cfg, DeRhamElement.basis(0, ('pole', 1, 1)))
    assert d == DeRhamElement(1, {(1, 2): QQ(-6, 5), (1, 1): QQ(1, 5),
                                  (2, 1): QQ(-1, 5)})
    assert differential(cfg, DeRhamElement.one()) == \
        DeRhamElement(1, {(1, 1): QQ(-1, 5), (2, 1): QQ(-1, 5)})
    # kappa d(t) = (kappa - sum m) dt - sum m_j z_j dt/(t - z_j)
    d = differential(cfg, DeRhamElement.basis(0, ('poly', 1)))
    assert d == DeRhamElement(1, {(2, 1): QQ(-1, 5)}, {0: QQ(3, 5)})
    assert logarithmic_closure(cfg)


def test_symbolic_differential():
    cfg = MasterConfig([0, 1], ['m1', 'm2'], 'kappa')
    m1, m2, kappa = cfg.m[0], cfg.m[1], cfg.kappa
    d = differential(cfg, DeRhamElement.one())
    assert d == DeRhamElement(1, {(1, 1): -m1/kappa, (2, 1): -m2/kappa})
    d = differential(cfg, DeRhamElement.basis(0, ('pole', 2, 1)))
    assert d.poles[(2, 2)] == -(m2 + kappa)/kappa
    assert logarithmic_closure(cfg)


def test_point_at_origin():
    cfg = MasterConfig([0, 1], ['1/3', '-2/5'], 'kappa')
    one = DeRhamElement.one()
    assert differential(cfg, one) == alpha(cfg)
    for key in [('poly', 0), ('poly', 2), ('pole', 1, 2), ('pole', 2, 1)]:
        x = DeRhamElement.basis(0, key)
        assert differential(cfg, x) == differential_by_products(cfg, x)
    assert cfg.kappa*one == one.scaled(cfg.kappa)
    assert one != float('inf')


def test_resonance_degeneration():
    for a in range(1, 5):
        # m_1 + a kappa = 0
        cfg = MasterConfig([0, 2, '1/2'], [-2*a, '1/3', '5/2'], 2)
        d = differential(cfg, DeRhamElement.basis(0, ('pole', 1, a)))
        assert (1, a+1) not in d.poles
        cfg = MasterConfig([0, 2, '1/2'], [-2*a + 1, '1/3', '5/2'], 2)
        d = differential(cfg, DeRhamElement.basis(0, ('pole', 1, a)))
        assert (1, a+1) in d.poles


def test_cohomology_ranks():
    rng = np.random.default_rng(7)
    for n in (2, 3, 4):
        cfg = MasterConfig.random(n, rng)
        for A in range(1, 6):
            ranks = cohomology_ranks(cfg, Truncation(A))
            assert ranks['h0'] == 0 and ranks['h1'] == n - 1, (cfg, A)
    cfg = MasterConfig.random(1, rng)
    assert cohomology_ranks(cfg, Truncation(2))['h1'] == 0
    cfg = MasterConfig.random(3, rng)
    assert {cohomology_ranks(cfg, Truncation(A))['h1']
            for A in range(1, 6)} == {2}
    try:
        cohomology_ranks(MasterConfig([0], [1], 0), Truncation(1))
        raise AssertionError('kappa = 0 accepted')
    except KappaZero:
        pass


def test_relations():
    z, m = [0, 1, -2], ['1/3', '1/2', '1/5']
    # log relation always, first one for kappa = sum m
    cfg = MasterConfig(z, m, '31/30')
    assert detect_resonances(cfg, 3) == [{'kind': 'ii', 'i': 4, 'a': 1}]
    form, expected = log_relation(cfg)
    assert find_relation_primitive(cfg, form, Truncation(1)) == expected
    form, expected = first_resonance_relation(cfg)
    assert find_relation_primitive(cfg, form, Truncation(2)) == expected
    assert check_relation(cfg, 'first', Truncation(2))['holds']
    assert check_relation(cfg, 'second', Truncation(3))['holds']
    # second one for kappa = sum m / 2
    cfg = MasterConfig(z, m, '31/60')
    form, expected = second_resonance_relation(cfg)
    assert find_relation_primitive(cfg, form, Truncation(2)) == expected
    assert check_relation(cfg, 'first', Truncation(2))['holds']
    assert find_relation_primitive(cfg, first_resonance_relation(cfg)[0],
                                   Truncation(3)) is None


def test_detect_resonances():
    cfg = MasterConfig([0, 1], [3, '1/2'], -3)
    assert {'kind': 'i', 'i': 1, 'a': 2} in detect_resonances(cfg, 3)
    cfg = MasterConfig([0, 1], ['2/3', '1/2'], '7/5')
    assert detect_resonances(cfg, 5) == []
    cfg = MasterConfig([0], [1], 0)
    assert detect_resonances(cfg, 1)[-1]['kind'] == 'iii'


def test_config():
    cfg = MasterConfig.from_dict({'z': [0, '1/2'], 'm': [1, 'm2'],
                                  'kappa': 3})
    assert is_symbolic(cfg.m[1]) and cfg.domain != QQ
    assert cfg.to_dict()['m'] == ['1', 'm2']
    assert MasterConfig([0, '1/2'], [1, 2], 3).to_dict() == \
        {'z': ['0', '1/2'], 'm': ['1', '2'], 'kappa': '3'}
    assert MasterConfig([0, 1], [1, 2], 3).m_inf == 1
    try:
        MasterConfig([1, 1], [1, 2], 3)
        raise AssertionError('repeated points accepted')
    except ValueError:
        pass
    rng = np.random.default_rng(1)
    a = MasterConfig.random(3, rng).to_dict()
    assert a == MasterConfig.random(3, np.random.default_rng(1)).to_dict()


def test_triplets():
    cfg = MasterConfig([0, 1], [1, 1], 5)
    lines = differential_triplets(cfg, Truncation(1))
    assert '1 0 -6/5' in lines and '0 0 1/5' in lines


if __name__ == '__main__':
    test_differential_oracle()
    test_differential_examples()
    test_symbolic_differential()
    test_point_at_origin()
    test_resonance_degeneration()
    test_cohomology_ranks()
    test_relations()
    test_detect_resonances()
    test_config()
    test_triplets()
