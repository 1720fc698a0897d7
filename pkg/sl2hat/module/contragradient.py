# +
"""
The contragradient module V* = restricted dual of a Verma module, with
<g phi, x> = <phi, theta(g) x>. Covectors are written in the dual basis.
"""
from hypothesis import given, settings, strategies as st
from sl2hat.algebra.loop import (E, H, F, LoopElement, degree, theta_symbol,
                                 rho_symbol, is_lowering, symbol_text, E1, E2,
                                 F1, F2)
from sl2hat.algebra.coeffs import rf_text
from sl2hat.module.verma import (Verma, ModuleVector, VACUUM, pbw,
                                 add_degrees, negative)
from sl2hat.util.caching import method_caching


class Covector(ModuleVector):

    def _key_text(self, key):
        return f'({key.text()})*'


def rho_word(word):
    """(sign, rho(word)) for a word of lowering symbols"""
    sign, out = 1, []
    for s in word:
        if not is_lowering(s):
            raise ValueError(
                f'rho is applied to PBW words only, got {symbol_text(s)}')
        ((t, c),) = rho_symbol(s).items()
        sign *= c
        out.append(t)
    return sign, tuple(out)


class Contragradient:

    def __init__(self, verma):
        self.verma = verma
        self.domain = verma.domain
        self.one = verma.one

    def dual(self, key):
        return Covector(key.degree, {key: self.one})

    def vacuum(self):
        return self.dual(VACUUM)

    def pair(self, phi, w):
        if phi.degree != w.degree:
            return self.domain.zero
        total = self.domain.zero
        for key, c in phi:
            if key in w.coeffs:
                total += c*w.coeffs[key]
        return total

    @method_caching
    def coact_key(self, sym, key):
        """sym . (key)* as {PBWKey: coeff}, one column of act(theta(sym), .)"""
        target = add_degrees(key.degree, degree(sym))
        if negative(target):
            return {}
        t = theta_symbol(sym)
        out = {}
        for x in self.verma.basis(target):
            value = self.verma.act_key(t, x).get(key, 0)
            if value:
                out[x] = value
        return out

    def coact(self, g, phi):
        """g: symbol or homogeneous LoopElement; phi: Covector"""
        if not isinstance(g, LoopElement):
            g = LoopElement({g: 1})
        dg = g.homogeneous_degree()
        if dg is None:
            return Covector(phi.degree)
        target = add_degrees(phi.degree, dg)
        coeffs = {}
        if not negative(target):
            for sym, a in g:
                for key, c in phi:
                    for key2, c2 in self.coact_key(sym, key).items():
                        coeffs[key2] = coeffs.get(key2, 0) + a*c*c2
        return Covector(target, coeffs)

    def coact_word(self, word, phi):
        for s in reversed(tuple(word)):
            phi = self.coact(s, phi)
        return phi

    def chi_star(self, phi, source):
        """
        Pullback along chi: V -> V(source), F v -> rho(F) v', where
        source is the contragradient module phi lives in and the highest
        weights of the two modules are swapped. chi*(g phi) = rho(g) chi*(phi).
        """
        deg = (phi.degree[1], phi.degree[0])
        coeffs = {}
        for y in self.verma.basis(deg):
            sign, word = rho_word(y.word)
            value = source.pair(phi, source.verma.evaluate_word(word))
            if value:
                coeffs[y] = sign*value
        return Covector(deg, coeffs)


def index_pairs(total, low):
    """(i, j) with i + j = total, i >= j >= low"""
    return [(total - j, j) for j in range(low, total//2 + 1)]


def identity_lhs(C, which, a):
    if which == 'A':
        return C.coact((F, -(a-1)), C.vacuum())
    return C.coact((E, -a), C.vacuum())


def identity_rhs(C, which, a):
    m, k = C.verma.m, C.verma.k
    if which == 'A':
        out = C.dual(pbw(f=(a-1,))).scaled(m + (a-1)*(k+2))
        for l in range(1, a):
            out = out + C.coact((H, -l), C.dual(pbw(f=(a-1-l,))))
            ff = Covector((a+1-l, a-1-l), {pbw(f=ij): C.one
                                           for ij in index_pairs(a-1-l, 0)})
            out = out + 2*C.coact((E, -l), ff)
        return out
    out = C.dual(pbw(e=(a,))).scaled(a*(k+2) - m - 2)
    for l in range(0, a-1):
        out = out - C.coact((H, -(l+1)), C.dual(pbw(e=(a-l-1,))))
        ee = Covector((a-l-2, a-l), {pbw(e=ij): C.one
                                     for ij in index_pairs(a-l, 1)})
        out = out + 2*C.coact((F, -l), ee)
    return out


def side_by_side(lhs, rhs):
    keys = list(lhs.coeffs) + [key for key in rhs.coeffs
                               if key not in lhs.coeffs]
    rows = []
    for key in keys:
        l, r = lhs.coeff(key), rhs.coeff(key)
        rows.append({'key': lhs._key_text(key), 'lhs': rf_text(l),
                     'rhs': rf_text(r), 'equal': l == r})
    return rows


def verify_identity(which, a, C=None):
    """
    Compares both sides of
      A: f/T^(a-1) (v)* = (m+(a-1)(k+2)) (f/T^(a-1) v)*
                          + sum_l [h/T^l (f/T^(a-1-l) v)* + 2 e/T^l sum (f/T^i f/T^j v)*]
      B: e/T^a (v)* = (a(k+2)-m-2) (e/T^a v)*
                      + sum_l [-h/T^(l+1) (e/T^(a-l-1) v)* + 2 f/T^l sum (e/T^i e/T^j v)*]
    on every basis key of degree (a, a-1) (A) or (a-1, a) (B).
    """
    if which not in ('A', 'B') or a < 1:
        raise ValueError(f'invalid identity {which} or a={a}')
    if C is None:
        C = Contragradient(Verma.symbolic())
    lhs, rhs = identity_lhs(C, which, a), identity_rhs(C, which, a)
    rows = side_by_side(lhs, rhs)
    residual = (lhs - rhs).to_dict()
    return {'identity': which, 'a': a, 'holds': not residual,
            'coefficients': rows, 'residual': residual}


def verify_identity_rho(a, C=None):
    """
    Identity B in V(m, k-m)* computed twice: directly, and as the chi*
    image of identity A in V(k-m, m)*.
    """
    if C is None:
        C = Contragradient(Verma.symbolic())
    m, k = C.verma.m, C.verma.k
    Cp = Contragradient(Verma(k - m, k, C.domain))
    pushed_lhs = C.chi_star(identity_lhs(Cp, 'A', a), Cp)
    pushed_rhs = C.chi_star(identity_rhs(Cp, 'A', a), Cp)
    direct = identity_lhs(C, 'B', a)
    rhs = identity_rhs(C, 'B', a)
    residual = (pushed_lhs - direct).to_dict()
    holds = pushed_lhs == direct and pushed_rhs == rhs and direct == rhs
    return {'identity': 'B via rho', 'a': a, 'holds': holds,
            'coefficients': side_by_side(pushed_lhs, direct),
            'residual': residual}


# tests ------------------------------------------------------------------------
def test_pair_and_coact_examples():
    C = Contragradient(Verma.symbolic())
    V = C.verma
    m, k = V.m, V.k
    assert C.pair(C.vacuum(), V.vacuum()) == 1
    a, l = 3, 1
    phi = C.coact((H, -l), C.dual(pbw(f=(a-1-l,))))
    assert C.pair(phi, V.key_vector(pbw(f=(a-1,)))) == -2
    n = 1
    phi = C.coact((F, -(a-1)), C.vacuum())
    assert C.pair(phi, V.key_vector(pbw(f=(a-1-n,), h=(n,)))) == 2*n*k
    assert C.coact((F, 0), C.vacuum()) == C.dual(pbw(f=(0,))).scaled(m)
    assert C.coact((E, -1), C.vacuum()) == C.dual(pbw(e=(1,))).scaled(k - m)
    assert C.coact((H, 0), C.vacuum()) == C.vacuum().scaled(m)
    assert not C.coact((E, 0), C.vacuum())


def test_contragradient_relations():
    C = Contragradient(Verma.symbolic())
    V = C.verma
    for deg in [(0, 0), (1, 0), (1, 1), (2, 1), (1, 2)]:
        for key in V.basis(deg):
            phi = C.dual(key)
            for f, e in ((F1, E1), (F2, E2)):
                psi = C.coact(f, phi)
                for x in V.basis(psi.degree):
                    assert C.pair(psi, V.key_vector(x)) == \
                        C.pair(phi, V.act(e, V.key_vector(x)))


_syms = st.sampled_from([(F, 0), (F, -1), (H, -1), (E, -1), (E, 0), (F, 1),
                         (H, 1), (H, 0), (E, 1), (E, -2)])
_degs = st.sampled_from([(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])


@settings(max_examples=60, deadline=None)
@given(_syms, _degs, st.integers(0, 10), st.integers(0, 10))
def test_adjointness(g, deg, i, j):
    C = Contragradient(Verma.symbolic())
    V = C.verma
    keys = V.basis(deg)
    phi = C.dual(keys[i % len(keys)])
    psi = C.coact(g, phi)
    targets = V.basis(psi.degree) if not negative(psi.degree) else ()
    if not targets:
        assert not psi
        return
    x = V.key_vector(targets[j % len(targets)])
    assert C.pair(psi, x) == C.pair(phi, V.act(theta_symbol(g), x))


def test_identity_a():
    C = Contragradient(Verma.symbolic())
    for a in range(1, 7):
        report = verify_identity('A', a, C)
        assert report['holds'], report['residual']
    m, k = C.verma.m, C.verma.k
    lhs = identity_lhs(C, 'A', 2)
    assert lhs.coeff(pbw(f=(1,))) == m + k
    assert identity_rhs(C, 'A', 2).coeff(pbw(f=(1,))) == m + k
    assert identity_lhs(C, 'A', 1) == C.dual(pbw(f=(0,))).scaled(m)


def test_identity_b():
    C = Contragradient(Verma.symbolic())
    for a in range(1, 6):
        assert verify_identity('B', a, C)['holds']
        assert verify_identity_rho(a, C)['holds']
    m, k = C.verma.m, C.verma.k
    lhs = identity_lhs(C, 'B', 2)
    assert lhs.coeff(pbw(e=(2,))) == 2*k - m
    assert len(verify_identity('B', 2, C)['coefficients']) >= 2


def test_rho_word():
    assert rho_word(pbw(f=(0, 2), h=(1,)).word) == (-1, ((E, -3), (E, -1),
                                                         (H, -1)))
    try:
        rho_word(((E, 0),))
        raise AssertionError('rho accepted a raising symbol')
    except ValueError:
        pass


if __name__ == '__main__':
    test_pair_and_coact_examples()
    test_contragradient_relations()
    test_adjointness()
    test_identity_a()
    test_identity_b()
    test_rho_word()
