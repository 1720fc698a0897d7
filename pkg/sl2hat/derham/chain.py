# +
"""
The last two terms of the chain complex of sl2(U) with coefficients in
V_1* x ... x V_(n+1)*, V_j = V(m_j, k - m_j), and the map eta from the
twisted de Rham complex (shifted by one) into it.

sl2(U) acts slotwise: at z_j through the Laurent expansion of u in t - z_j,
at infinity through the expansion in y = 1/t followed by pi. In a local
coordinate s, x u = sum c_i x s^i is read as sum c_i x T^i.
"""
import numpy as np
from sl2hat.algebra.loop import E, H, F, bracket_symbols, pi_symbol
from sl2hat.algebra.coeffs import rf_text
from sl2hat.algebra.linalg import rank
from sl2hat.module.verma import Verma, VACUUM, pbw
from sl2hat.module.contragradient import Contragradient, index_pairs
from sl2hat.derham import laurent
from sl2hat.derham.complex import (MasterConfig, DeRhamElement, Truncation,
                                   differential)


class Sl2UElement:
    """sum of x (x) u(t) for letters x in e, h, f and u in Omega^0(U)"""

    def __init__(self, terms=None):
        self.terms = {x: u for x, u in (terms or {}).items() if u}

    @staticmethod
    def basis(letter, u):
        return Sl2UElement({letter: u})

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __add__(self, other):
        terms = dict(self.terms)
        for x, u in other.terms.items():
            terms[x] = terms[x] + u if x in terms else u
        return Sl2UElement(terms)

    def scaled(self, scalar):
        return Sl2UElement({x: u.scaled(scalar)
                            for x, u in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __bool__(self):
        return bool(self.terms)

    def bracket(self, other, z):
        """[x u1, y u2] = [x, y] u1 u2; z: the points of U"""
        out = Sl2UElement()
        for x, u1 in self:
            for y, u2 in other:
                product = DeRhamElement(0, *laurent.multiply(z, u1.function,
                                                             u2.function))
                for (letter, _), c in bracket_symbols((x, 0), (y, 0)).items():
                    out = out + Sl2UElement({letter: product.scaled(c)})
        return out

    def text(self):
        return ' + '.join(f'{x}*[{u.text()}]' for x, u in self) or '0'

    def __repr__(self):
        return self.text()


def _key_text(key):
    return f'({key.text()})*'


class TensorCovector:
    """sparse {(key_1, ..., key_(n+1)): coeff} in the dual PBW bases"""

    def __init__(self, coeffs=None):
        self.coeffs = {keys: c for keys, c in (coeffs or {}).items() if c}

    def __iter__(self):
        return iter(self.coeffs.items())

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, keys):
        return self.coeffs.get(keys, 0)

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for keys, c in other.coeffs.items():
            coeffs[keys] = coeffs.get(keys, 0) + c
        return TensorCovector(coeffs)

    def __neg__(self):
        return -1*self

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        return TensorCovector({keys: scalar*c
                               for keys, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __eq__(self, other):
        if not isinstance(other, TensorCovector):
            return NotImplemented
        return not (self - other)

    def to_dict(self):
        return {' x '.join(_key_text(key) for key in keys): rf_text(c)
                for keys, c in self.coeffs.items()}

    def __repr__(self):
        return ' + '.join(f'({c})*[{k}]' for k, c in self.to_dict().items()) \
            or '0'


class ChainOneElement:
    """sum of g (x) w with g in sl2(U) and w a TensorCovector"""

    def __init__(self, terms=None):
        self.terms = list(terms or [])

    def __add__(self, other):
        return ChainOneElement(self.terms + other.terms)

    def scaled(self, scalar):
        return ChainOneElement([(g, w.scaled(scalar))
                                for g, w in self.terms])

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def text(self):
        return ' + '.join(f'{g.text()} (x) {w}' for g, w in self.terms) or '0'


class ChainComplex:

    def __init__(self, cfg):
        self.cfg = cfg
        self.n = cfg.n
        self.kappa = cfg.kappa
        self.slots = [Contragradient(Verma(w, cfg.k, cfg.domain))
                      for w in cfg.weights]

    def vacuum(self):
        return TensorCovector({(VACUUM,)*(self.n + 1): self.cfg.domain.one})

    def single(self, j, key, coeff=1):
        """(v_1)* x ... x (key)* at slot j x ... x (v_(n+1))*"""
        keys = [VACUUM]*(self.n + 1)
        keys[j-1] = key
        return TensorCovector({tuple(keys): coeff})

    def _expand(self, j, u, order):
        if j <= self.n:
            return laurent.expand_at(self.cfg.z, j, u.function, order)
        return laurent.expand_at_infinity(self.cfg.z, u.function, order)

    def mu_act(self, g, w, extra=0):
        """
        g . w for g in sl2(U). In slot j only T^s with s <= (degree of
        the slot key) + 1 + extra can act nontrivially.
        """
        coeffs = {}
        for keys, c in w:
            for j, C in enumerate(self.slots, 1):
                key = keys[j-1]
                order = sum(key.degree) + 1 + extra
                for x, u in g:
                    for s, cs in self._expand(j, u, order).items():
                        sign, sym = 1, (x, s)
                        if j == self.n + 1:
                            sign, sym = pi_symbol(sym)
                        for key2, c2 in C.coact_key(sym, key).items():
                            new = keys[:j-1] + (key2,) + keys[j:]
                            coeffs[new] = coeffs.get(new, 0) + sign*c*cs*c2
        return TensorCovector(coeffs)

    def d(self, chain):
        out = TensorCovector()
        for g, w in chain.terms:
            out = out + self.mu_act(g, w)
        return out

    def eta1(self, x):
        """
        dt/(t-z_j)^a -> -kappa (f/T^(a-1) v_j)*,
        t^(a-1) dt -> kappa (e/T^a v_(n+1))*
        """
        if x.grade != 1:
            raise ValueError('eta1 acts on grade 1 elements')
        out = TensorCovector()
        for key, c in x.terms():
            if key[0] == 'pole':
                _, j, a = key
                out = out + self.single(j, pbw(f=(a-1,)), -self.kappa*c)
            else:
                out = out + self.single(self.n + 1, pbw(e=(key[1] + 1,)),
                                        self.kappa*c)
        return out

    def _eta0_pole(self, j, a):
        def u(l):
            return DeRhamElement.basis(0, ('pole', j, l))

        terms = [(Sl2UElement.basis(F, u(a)), self.vacuum())]
        for l in range(1, a + 1):
            ff = TensorCovector()
            for ij in index_pairs(a - l, 0):
                ff = ff + self.single(j, pbw(f=ij), -2)
            terms.append((Sl2UElement.basis(E, u(l)), ff))
            terms.append((Sl2UElement.basis(H, u(l)),
                          self.single(j, pbw(f=(a - l,)), -1)))
        return terms

    def _eta0_poly(self, a):
        def u(l):
            return DeRhamElement.basis(0, ('poly', l))

        last = self.n + 1
        terms = [(Sl2UElement.basis(F, u(a)), self.vacuum())]
        for l in range(0, a - 1):
            ee = TensorCovector()
            for ij in index_pairs(a - l, 1):
                ee = ee + self.single(last, pbw(e=ij), -2)
            terms.append((Sl2UElement.basis(E, u(l)), ee))
            terms.append((Sl2UElement.basis(H, u(l + 1)),
                          self.single(last, pbw(e=(a - l - 1,)), -1)))
        return terms

    def eta0(self, x):
        if x.grade != 0:
            raise ValueError('eta0 acts on grade 0 elements')
        terms = []
        for key, c in x.terms():
            if key[0] == 'pole':
                pieces = self._eta0_pole(key[1], key[2])
            else:
                pieces = self._eta0_poly(key[1])
            terms += [(g, w.scaled(c)) for g, w in pieces]
        return ChainOneElement(terms)

    def eta(self, x):
        return self.eta0(x) if x.grade == 0 else self.eta1(x)

    def verify_chain_square(self, key):
        """d eta0 = eta1 (d + alpha) on the basis function key"""
        x = DeRhamElement.basis(0, key)
        lhs = self.d(self.eta0(x))
        rhs = self.eta1(differential(self.cfg, x))
        report = {'function': x.text(), 'holds': lhs == rhs,
                  'residual': (lhs - rhs).to_dict()}
        if not report['holds']:
            report['lhs'] = lhs.to_dict()
            report['rhs'] = rhs.to_dict()
        return report

    def eta1_injective(self, trunc):
        """rank of eta1 on the grade 1 basis of the window"""
        images = [self.eta1(DeRhamElement.basis(1, key))
                  for key in trunc.target(self.n)]
        columns = sorted({keys for w in images for keys, _ in w},
                         key=lambda keys: [k.text() for k in keys])
        rows = [[w.coeff(keys) for keys in columns] for w in images]
        return rank(rows, self.cfg.domain, len(columns)) == len(images)

    def logarithmic_image(self):
        """eta(1) and eta(omega_j) only involve f and (f v_j)*"""
        fv = pbw(f=(0,))
        pieces = self.eta0(DeRhamElement.one()).terms
        ok = all(set(g.terms) == {F} and g.terms[F] == DeRhamElement.one()
                 for g, _ in pieces)
        for j in range(1, self.n + 1):
            w = self.eta1(DeRhamElement.basis(1, ('pole', j, 1)))
            ok = ok and w == self.single(j, fv, -self.kappa)
        return ok


def chain_square_keys(n, a_max):
    """the basis functions (t-z_p)^(-a), t^a with a <= a_max"""
    return ([('pole', p, a) for p in range(1, n + 1)
             for a in range(1, a_max + 1)] +
            [('poly', a) for a in range(a_max + 1)])


# tests ------------------------------------------------------------------------
def _config(n, seed=3):
    return MasterConfig.random(n, np.random.default_rng(seed))


def test_mu_on_vacuum():
    for n in (1, 2, 3):
        X = ChainComplex(_config(n))
        g = Sl2UElement.basis(F, DeRhamElement.one())
        expected = TensorCovector()
        for j in range(1, n + 1):
            expected = expected + X.single(j, pbw(f=(0,)), X.cfg.m[j-1])
        assert X.mu_act(g, X.vacuum()) == expected
        # pi turns e into f at infinity
        e = X.mu_act(Sl2UElement.basis(E, DeRhamElement.one()), X.vacuum())
        assert e == X.single(n + 1, pbw(f=(0,)), X.cfg.m_inf)
        h = X.mu_act(Sl2UElement.basis(H, DeRhamElement.one()), X.vacuum())
        total = sum(X.cfg.m, X.cfg.domain.zero) - X.cfg.m_inf
        assert h == X.vacuum().scaled(total)


def test_truncation_soundness():
    X = ChainComplex(_config(2))
    us = [DeRhamElement.basis(0, ('pole', 1, 2)),
          DeRhamElement.basis(0, ('poly', 3)),
          DeRhamElement(0, {(2, 1): 3}, {1: -1})]
    ws = [X.vacuum(), X.single(1, pbw(f=(1,))), X.single(3, pbw(e=(2,))),
          X.single(2, pbw(f=(0,), h=(1,)))]
    for x in (E, H, F):
        for u in us:
            g = Sl2UElement.basis(x, u)
            for w in ws:
                assert X.mu_act(g, w) == X.mu_act(g, w, extra=3)


def test_lie_action():
    X = ChainComplex(_config(2, seed=5))
    z = X.cfg.z
    gs = [Sl2UElement.basis(F, DeRhamElement.basis(0, ('pole', 1, 1))),
          Sl2UElement.basis(E, DeRhamElement.basis(0, ('poly', 1))),
          Sl2UElement.basis(H, DeRhamElement.basis(0, ('pole', 2, 2))),
          Sl2UElement.basis(E, DeRhamElement.basis(0, ('pole', 2, 1)))]
    ws = [X.vacuum(), X.single(1, pbw(f=(0,))), X.single(3, pbw(e=(1,)))]
    for i, g1 in enumerate(gs):
        for g2 in gs[i+1:]:
            g12 = g1.bracket(g2, z)
            for w in ws:
                lhs = X.mu_act(g12, w)
                rhs = X.mu_act(g1, X.mu_act(g2, w)) - \
                    X.mu_act(g2, X.mu_act(g1, w))
                assert lhs == rhs, (g1, g2, w)


def test_eta_examples():
    X = ChainComplex(_config(2))
    kappa = X.kappa
    w = X.eta1(DeRhamElement.basis(1, ('pole', 2, 3)))
    assert w == X.single(2, pbw(f=(2,)), -kappa)
    w = X.eta1(DeRhamElement.basis(1, ('poly', 1)))
    assert w == X.single(3, pbw(e=(2,)), kappa)
    (g, w), = X.eta0(DeRhamElement.one()).terms
    assert g.terms == {F: DeRhamElement.one()} and w == X.vacuum()
    assert len(X.eta0(DeRhamElement.basis(0, ('pole', 1, 2))).terms) == 5
    assert X.logarithmic_image()
    assert X.eta1_injective(Truncation(3))


def test_chain_square():
    for n in (1, 2, 3):
        for seed in (0, 1, 2):
            X = ChainComplex(_config(n, seed))
            for key in chain_square_keys(n, 4):
                report = X.verify_chain_square(key)
                assert report['holds'], report


def test_chain_square_symbolic_kappa():
    cfg = MasterConfig([0, 1], ['1/3', '-2/5'], 'kappa')
    X = ChainComplex(cfg)
    for key in chain_square_keys(2, 2):
        assert X.verify_chain_square(key)['holds']
    w = X.vacuum()
    assert cfg.kappa*w == w.scaled(cfg.kappa) and w != float('inf')


if __name__ == '__main__':
    test_mu_on_vacuum()
    test_truncation_soundness()
    test_lie_action()
    test_eta_examples()
    test_chain_square()
    test_chain_square_symbolic_kappa()
