# +
"""
Verma modules V(m, k-m) over sl2-hat.

Basis vectors are PBW monomials in the lowering generators f/T^i (i>=0),
h/T^j (j>=1), e/T^k (k>=1) applied to the highest weight vector v.
In degree (p1, p2) the f's are written first if p1 >= p2 and the e's first
otherwise; equal letters are ordered with the largest power of 1/T leftmost.

Straightening rule, for a word x1 x2 ... xp:
    g x1 x2...xp v = x1 (g x2...xp v) + [g, x1] x2...xp v
with c acting as k, h as m on v, and any vector of negative degree being 0.
"""
from dataclasses import dataclass, replace
from functools import cached_property
import itertools
import numpy as np
from sympy import QQ
from hypothesis import given, settings, strategies as st
from sl2hat.algebra.loop import (E, H, F, CENTRAL, degree, is_lowering,
                                 symbol_text, bracket_symbols, bracket,
                                 LoopElement, symbols_in_range, E1, E2, H1, H2)
from sl2hat.algebra.coeffs import Pool, is_symbolic, rf_text
from sl2hat.util.caching import method_caching

F_FIRST, E_FIRST = 'f-first', 'e-first'
_group = {F_FIRST: {F: 0, H: 1, E: 2}, E_FIRST: {E: 0, H: 1, F: 2}}


def orientation(deg):
    return F_FIRST if deg[0] >= deg[1] else E_FIRST


def sort_key(sym, order):
    return (_group[order][sym[0]], sym[1])


def word_degree(word):
    p1 = p2 = 0
    for s in word:
        d = degree(s)
        p1 += d[0]
        p2 += d[1]
    return (p1, p2)


def add_degrees(a, b):
    return (a[0]+b[0], a[1]+b[1])


def negative(deg):
    return deg[0] < 0 or deg[1] < 0


@dataclass(frozen=True)
class PBWKey:
    """powers i of the factors x/T^i, each weakly decreasing"""
    f_powers: tuple = ()
    h_powers: tuple = ()
    e_powers: tuple = ()
    orientation: str = F_FIRST

    @staticmethod
    def from_word(word, order=None):
        powers = {E: [], H: [], F: []}
        for letter, j in word:
            if not is_lowering((letter, j)):
                raise ValueError(f'{symbol_text((letter, j))} is not lowering')
            powers[letter].append(-j)
        if order is None:
            order = orientation(word_degree(word))
        return PBWKey(*(tuple(sorted(powers[x], reverse=True))
                        for x in (F, H, E)), order)

    @cached_property
    def word(self):
        f = [(F, -i) for i in self.f_powers]
        h = [(H, -j) for j in self.h_powers]
        e = [(E, -k) for k in self.e_powers]
        if self.orientation == F_FIRST:
            return tuple(f + h + e)
        return tuple(e + h + f)

    @cached_property
    def degree(self):
        return (sum(self.f_powers) + len(self.f_powers) + sum(self.h_powers) +
                sum(self.e_powers) - len(self.e_powers),
                sum(self.f_powers) + sum(self.h_powers) + sum(self.e_powers))

    def text(self):
        return ' '.join([symbol_text(s) for s in self.word] + ['v'])

    def __repr__(self):
        return self.text()


def pbw(f=(), h=(), e=()):
    """the key f/T^f[0] ... h/T^h[0] ... e/T^e[0] ... v, oriented by its degree"""
    key = PBWKey(*(tuple(sorted(p, reverse=True)) for p in (f, h, e)))
    return replace(key, orientation=orientation(key.degree))


VACUUM = PBWKey()


class ModuleVector:
    """sparse homogeneous vector: {PBWKey: coefficient}"""

    def __init__(self, degree, coeffs=None):
        self.degree = tuple(degree)
        self.coeffs = {key: c for key, c in (coeffs or {}).items() if c}

    def _new(self, degree, coeffs):
        return self.__class__(degree, coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs.items())

    def coeff(self, key):
        return self.coeffs.get(key, 0)

    def __add__(self, other):
        if not other:
            return self
        if not self:
            return other
        if other.degree != self.degree:
            raise ValueError(f'adding degrees {self.degree} and {other.degree}')
        coeffs = dict(self.coeffs)
        for key, c in other:
            coeffs[key] = coeffs[key] + c if key in coeffs else c
        return self._new(self.degree, coeffs)

    def __neg__(self):
        return self._new(self.degree, {key: -c for key, c in self})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        return self._new(self.degree, {key: scalar*c for key, c in self})

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if self and other and self.degree != other.degree:
            return False
        return not (self - other).coeffs

    def normalized(self, keys):
        """divided by the first nonzero coefficient in the order of keys"""
        for key in keys:
            if key in self.coeffs:
                return self.scaled(1/self.coeffs[key])
        return self

    def _key_text(self, key):
        return key.text()

    def to_dict(self):
        return {self._key_text(key): rf_text(c) for key, c in self}

    def __repr__(self):
        if not self.coeffs:
            return '0'
        return ' + '.join(f'({rf_text(c)}) {self._key_text(key)}'
                          for key, c in self)


class Verma:
    """
    The Verma module V(m, k-m): h1 v = m v, h2 v = (k-m) v, e1 v = e2 v = 0.
    m, k: elements of a sympy domain (symbolic or rational).
    """

    def __init__(self, m, k, domain=None):
        if domain is None:
            symbolic = [x for x in (m, k) if is_symbolic(x)]
            domain = symbolic[0].field.to_domain() if symbolic else QQ
        self.domain = domain
        self.m = domain.convert(m)
        self.k = domain.convert(k)
        self.one = domain.one

    @staticmethod
    def symbolic():
        pool = Pool('m', 'k')
        return Verma(pool['m'], pool['k'], pool.domain)

    # basis --------------------------------------------------------------------
    @method_caching
    def basis(self, deg):
        """deterministically ordered PBW keys of degree deg"""
        p1, p2 = deg
        if negative(deg):
            return ()
        order = orientation(deg)
        gens = ([(F, -i) for i in range(0, min(p1 - 1, p2) + 1)] +
                [(H, -j) for j in range(1, min(p1, p2) + 1)] +
                [(E, -k) for k in range(1, min(p1 + 1, p2) + 1)])
        keys = []

        def grow(start, remaining, chosen):
            if remaining == (0, 0):
                keys.append(PBWKey.from_word(chosen, order))
                return
            for t in range(start, len(gens)):
                rest = (remaining[0] - degree(gens[t])[0],
                        remaining[1] - degree(gens[t])[1])
                if not negative(rest):
                    grow(t, rest, chosen + [gens[t]])

        grow(0, (p1, p2), [])
        return tuple(sorted(keys, key=lambda key: [sort_key(s, order)
                                                   for s in key.word]))

    def dimension(self, deg):
        return len(self.basis(deg))

    def vacuum(self):
        return ModuleVector((0, 0), {VACUUM: self.one})

    def key_vector(self, key):
        return ModuleVector(key.degree, {key: self.one})

    # action -------------------------------------------------------------------
    @method_caching
    def _act(self, g, word, order):
        """g . word v for a word canonical under order, as {word: coeff}"""
        if negative(add_degrees(degree(g), word_degree(word))):
            return {}
        if g == CENTRAL:
            return {word: self.k}
        if is_lowering(g) and (not word or
                               sort_key(g, order) <= sort_key(word[0], order)):
            return {(g,) + word: self.one}
        if not word:
            # only h survives the degree test here
            return {(): self.m}
        x1, rest = word[0], word[1:]
        out = {}
        for w, c in self._act(g, rest, order).items():
            for w2, c2 in self._act(x1, w, order).items():
                out[w2] = out.get(w2, 0) + c*c2
        for s, b in bracket_symbols(g, x1).items():
            for w2, c2 in self._act(s, rest, order).items():
                out[w2] = out.get(w2, 0) + b*c2
        return {w: c for w, c in out.items() if c}

    @method_caching
    def _convert(self, word, order):
        """a canonical word of the other orientation, rewritten under order"""
        vec = {(): self.one}
        for s in reversed(word):
            new = {}
            for w, c in vec.items():
                for w2, c2 in self._act(s, w, order).items():
                    new[w2] = new.get(w2, 0) + c*c2
            vec = {w: c for w, c in new.items() if c}
        return vec

    @method_caching
    def act_key(self, sym, key):
        """sym . key as {PBWKey: coeff} in the basis of the target degree"""
        target = add_degrees(key.degree, degree(sym))
        if negative(target):
            return {}
        order = orientation(target)
        if key.orientation == order:
            words = {key.word: self.one}
        else:
            words = self._convert(key.word, order)
        out = {}
        for w, c in words.items():
            for w2, c2 in self._act(sym, w, order).items():
                out[w2] = out.get(w2, 0) + c*c2
        return {PBWKey.from_word(w, order): c for w, c in out.items() if c}

    def act(self, g, w):
        """g: symbol or homogeneous LoopElement; w: ModuleVector"""
        if not isinstance(g, LoopElement):
            g = LoopElement({g: 1})
        dg = g.homogeneous_degree()
        if dg is None:
            return ModuleVector(w.degree)
        target = add_degrees(w.degree, dg)
        coeffs = {}
        if not negative(target):
            for sym, a in g:
                for key, c in w:
                    for key2, c2 in self.act_key(sym, key).items():
                        coeffs[key2] = coeffs.get(key2, 0) + a*c*c2
        return ModuleVector(target, coeffs)

    def evaluate_word(self, word):
        """x1 x2 ... xp v for any symbols, in the PBW basis"""
        vec = self.vacuum()
        for s in reversed(tuple(word)):
            vec = self.act(s, vec)
        return vec

    def highest_weight_checks(self):
        v = self.vacuum()
        return {'e1 v = 0': not self.act(E1, v),
                'e2 v = 0': not self.act(E2, v),
                'h1 v = m v': self.act(H1, v) == v.scaled(self.m),
                'h2 v = (k-m) v': self.act(H2, v) == v.scaled(self.k - self.m)}


def generating_dimension(deg):
    """
    Coefficient of x^p1 y^p2 in
    prod 1/(1-x^(i+1) y^i) prod 1/(1-x^j y^j) prod 1/(1-x^(k-1) y^k).
    """
    p1, p2 = deg
    table = np.zeros((p1+1, p2+1), dtype=np.int64)
    table[0, 0] = 1
    parts = ([(i+1, i) for i in range(0, p1)] +
             [(j, j) for j in range(1, min(p1, p2)+1)] +
             [(k-1, k) for k in range(1, p2+1)])
    for dx, dy in parts:
        for x in range(dx, p1+1):
            for y in range(dy, p2+1):
                table[x, y] += table[x-dx, y-dy]
    return int(table[p1, p2])


def degrees_upto(total):
    return [(p1, s - p1) for s in range(total+1) for p1 in range(s+1)]


# tests ------------------------------------------------------------------------
def test_enumerate_basis():
    V = Verma.symbolic()
    assert [key.text() for key in V.basis((0, 0))] == ['v']
    assert [key.text() for key in V.basis((1, 0))] == ['f v']
    assert {key.text() for key in V.basis((2, 1))} == {
        'f/T v', 'f h/T v', 'f f e/T v'}
    assert {key.text() for key in V.basis((1, 1))} == {'h/T v', 'f e/T v'}
    assert {key.text() for key in V.basis((0, 2))} == {'e/T e/T v'}
    assert {key.text() for key in V.basis((1, 2))} == {
        'e/T e/T f v', 'e/T h/T v', 'e/T^2 v'}
    assert V.dimension((2, 1)) == 3 and V.dimension((0, 0)) == 1
    assert V.dimension((1, 1)) == 2


def test_dimension_generating_function():
    V = Verma.symbolic()
    for deg in degrees_upto(8):
        keys = V.basis(deg)
        assert len(keys) == generating_dimension(deg), deg
        assert len(set(keys)) == len(keys)
        assert all(key.degree == deg for key in keys)


def test_act_examples():
    V = Verma.symbolic()
    m, k = V.m, V.k
    a = 3
    w = V.key_vector(PBWKey((a-1,)))
    assert V.act((E, a-1), w) == V.vacuum().scaled(m + (a-1)*k)
    n = 2
    w = V.key_vector(PBWKey((), (n,)))
    assert V.act((H, n), w) == V.vacuum().scaled(2*n*k)
    assert not V.act((F, 1), V.vacuum())
    assert all(V.highest_weight_checks().values())


def test_representation_property():
    V = Verma.symbolic()
    syms = symbols_in_range(3)
    vectors = [V.key_vector(key) for deg in degrees_upto(4)
               for key in V.basis(deg)]
    for x, y in itertools.product(syms, repeat=2):
        xy = bracket(LoopElement({x: 1}), LoopElement({y: 1}))
        for w in vectors:
            lhs = V.act(xy, w)
            rhs = V.act(x, V.act(y, w)) - V.act(y, V.act(x, w))
            assert lhs == rhs, (x, y, w)
            if lhs:
                assert lhs.degree == add_degrees(
                    w.degree, add_degrees(degree(x), degree(y)))


_lowering = st.sampled_from([(F, 0), (F, -1), (H, -1), (E, -1), (E, -2)])


@settings(max_examples=100, deadline=None)
@given(st.lists(_lowering, max_size=4))
def test_words_reduce_to_basis(word):
    V = Verma.symbolic()
    w = V.evaluate_word(word)
    deg = word_degree(word)
    assert w.degree == deg
    assert set(key for key, _ in w) <= set(V.basis(deg))


def test_numeric_module():
    V = Verma(QQ(3), QQ(-1, 2))
    assert V.domain == QQ
    assert all(V.highest_weight_checks().values())
    w = V.key_vector(PBWKey((0,)))
    assert V.act((E, 0), w) == V.vacuum().scaled(QQ(3))


def test_field_scalars():
    V = Verma.symbolic()
    m, k = V.m, V.k
    w = V.key_vector(PBWKey((0,)))
    assert (m + k)*w == w.scaled(m + k)
    assert not (w == float('inf')) and w != 1
    assert (m*w).normalized([PBWKey((0,))]) == w


if __name__ == '__main__':
    test_enumerate_basis()
    test_dimension_generating_function()
    test_act_examples()
    test_representation_property()
    test_words_reduce_to_basis()
    test_numeric_module()
    test_field_scalars()
