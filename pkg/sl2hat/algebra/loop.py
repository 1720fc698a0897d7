# +
"""
The affine Lie algebra sl2-hat = sl2[T, 1/T] + C c.

A basis symbol is a pair (letter, power) standing for letter*T^power with
letter in 'e', 'h', 'f', and ('c', 0) is the central element.
Elements are sparse maps symbol -> coefficient (ints or sympy domain elements).
"""
import itertools
from hypothesis import given, settings, strategies as st

E, H, F, C = 'e', 'h', 'f', 'c'
CENTRAL = (C, 0)

_sl2 = {(E, F): {H: 1}, (F, E): {H: -1},
        (H, E): {E: 2}, (E, H): {E: -2},
        (H, F): {F: -2}, (F, H): {F: 2}}

# trace form
_form = {(E, F): 1, (F, E): 1, (H, H): 2}

_omega = {E: F, F: E, H: H}


def symbol(letter, power=0):
    if letter not in (E, H, F, C):
        raise ValueError(f'unknown letter {letter}')
    if letter == C and power != 0:
        raise ValueError('the central symbol carries no power of T')
    return (letter, power)


def degree(sym):
    """Z^2-degree of letter*T^power"""
    letter, j = sym
    if letter == F:
        return (1 - j, -j)
    if letter == H:
        return (-j, -j)
    if letter == E:
        return (-j - 1, -j)
    return (0, 0)


def is_lowering(sym):
    """f/T^i (i>=0), h/T^j (j>=1), e/T^k (k>=1): the generators of n-hat minus"""
    letter, j = sym
    if letter == F:
        return j <= 0
    if letter in (H, E):
        return j <= -1
    return False


def symbol_text(sym):
    letter, j = sym
    if letter == C or j == 0:
        return letter
    if j < 0:
        return f'{letter}/T' if j == -1 else f'{letter}/T^{-j}'
    return f'{letter}*T' if j == 1 else f'{letter}*T^{j}'


def bracket_symbols(x, y):
    """[aT^i, bT^j] = [a,b]T^(i+j) + i<a,b> delta(i+j,0) c, as {symbol: int}"""
    (a, i), (b, j) = x, y
    out = {}
    if a == C or b == C:
        return out
    for letter, coeff in _sl2.get((a, b), {}).items():
        out[(letter, i + j)] = coeff
    if i + j == 0 and i and (a, b) in _form:
        out[CENTRAL] = i*_form[(a, b)]
    return out


def pi_symbol(sym):
    """e <-> f, h -> -h, c -> c (powers kept); returns (sign, symbol)"""
    letter, j = sym
    if letter == H:
        return -1, sym
    if letter == C:
        return 1, sym
    return 1, (_omega[letter], j)


def theta_symbol(sym):
    """Chevalley antiautomorphism: x T^j -> omega(x) T^(-j), c -> c"""
    letter, j = sym
    if letter == C:
        return sym
    return (_omega[letter], -j)


def rho_symbol(sym):
    """
    Dynkin diagram involution:
    f T^j -> e T^(j-1), e T^j -> f T^(j+1), h T^j -> -h T^j (j != 0),
    h -> c - h, c -> c. Returns {symbol: int}.
    """
    letter, j = sym
    if letter == F:
        return {(E, j - 1): 1}
    if letter == E:
        return {(F, j + 1): 1}
    if letter == H:
        if j == 0:
            return {CENTRAL: 1, (H, 0): -1}
        return {(H, j): -1}
    return {CENTRAL: 1}


class LoopElement:

    def __init__(self, terms=None):
        self.terms = {s: c for s, c in dict(terms or {}).items() if c}

    @staticmethod
    def basis(letter, power=0, coeff=1):
        return LoopElement({symbol(letter, power): coeff})

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return LoopElement(terms)

    def __neg__(self):
        return LoopElement({s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return LoopElement({s: scalar*c for s, c in self.terms.items()})

    def __eq__(self, other):
        return (self - other).terms == {}

    def degrees(self):
        return {degree(s) for s in self.terms}

    def homogeneous_degree(self):
        degrees = self.degrees()
        if len(degrees) > 1:
            raise ValueError(f'{self} is not homogeneous: {degrees}')
        return degrees.pop() if degrees else None

    def __repr__(self):
        if not self.terms:
            return '0'
        return ' + '.join(f'({c})*{symbol_text(s)}' for s, c in
                          sorted(self.terms.items()))


def bracket(x, y):
    terms = {}
    for (s, a), (t, b) in itertools.product(x, y):
        for u, c in bracket_symbols(s, t).items():
            terms[u] = terms.get(u, 0) + c*a*b
    return LoopElement(terms)


def apply_map(which, x):
    """which: 'pi', 'rho' or 'theta' (theta is an antiautomorphism)"""
    terms = {}

    def add(s, c):
        terms[s] = terms.get(s, 0) + c

    for s, a in x:
        if which == 'pi':
            sign, t = pi_symbol(s)
            add(t, sign*a)
        elif which == 'theta':
            add(theta_symbol(s), a)
        elif which == 'rho':
            for t, c in rho_symbol(s).items():
                add(t, c*a)
        else:
            raise ValueError(f'unknown map {which}')
    return LoopElement(terms)


# Chevalley generators
E1, E2 = (E, 0), (F, 1)
F1, F2 = (F, 0), (E, -1)
H1 = (H, 0)
H2 = LoopElement({CENTRAL: 1, (H, 0): -1})


def symbols_in_range(p):
    return [(x, j) for x in (E, H, F) for j in range(-p, p+1)] + [CENTRAL]


# tests ------------------------------------------------------------------------
def _b(letter, power=0):
    return LoopElement.basis(letter, power)


def test_bracket_examples():
    assert bracket(_b(E), _b(F)) == _b(H)
    for n in (1, 2, 3):
        assert bracket(_b(H, n), _b(H, -n)) == LoopElement({CENTRAL: 2*n})
    assert bracket(_b(E, 1), _b(F, -1)) == _b(H) + _b(C)
    assert bracket(_b(F, -1), _b(E, 1)) == -_b(H) - _b(C)


def test_jacobi():
    syms = symbols_in_range(4)
    for x, y, z in itertools.product(syms, repeat=3):
        X, Y, Z = _b(*x), _b(*y), _b(*z)
        s = (bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) +
             bracket(Z, bracket(X, Y)))
        assert not s, (x, y, z)


def test_antisymmetry_and_degrees():
    syms = symbols_in_range(3)
    for x, y in itertools.product(syms, repeat=2):
        X, Y = _b(*x), _b(*y)
        assert not (bracket(X, Y) + bracket(Y, X))
        d = bracket(X, Y).degrees()
        dx, dy = degree(x), degree(y)
        assert d <= {(dx[0]+dy[0], dx[1]+dy[1])}


def test_maps():
    assert apply_map('pi', _b(H, -3)) == -_b(H, -3)
    assert apply_map('rho', _b(F, -2)) == _b(E, -3)
    assert apply_map('rho', _b(E, -3)) == _b(F, -2)
    assert apply_map('rho', _b(H)) == H2
    assert apply_map('theta', _b(F, -4)) == _b(E, 4)
    assert apply_map('rho', _b(*E1)) == _b(*E2)
    assert apply_map('rho', _b(*F1)) == _b(*F2)
    for x in symbols_in_range(4):
        X = _b(*x)
        for which in ('pi', 'rho', 'theta'):
            assert apply_map(which, apply_map(which, X)) == X


def test_maps_and_brackets():
    syms = symbols_in_range(3)
    for x, y in itertools.product(syms, repeat=2):
        X, Y = _b(*x), _b(*y)
        XY = bracket(X, Y)
        for which in ('pi', 'rho'):
            assert apply_map(which, XY) == bracket(apply_map(which, X),
                                                   apply_map(which, Y))
        assert apply_map('theta', XY) == bracket(apply_map('theta', Y),
                                                 apply_map('theta', X))


_elements = st.lists(st.tuples(st.sampled_from([E, H, F]), st.integers(-3, 3),
                               st.integers(-5, 5)), max_size=4).map(
    lambda terms: sum((LoopElement.basis(x, j, c) for x, j, c in terms),
                      LoopElement()))


@settings(max_examples=300, deadline=None)
@given(_elements, _elements)
def test_maps_on_random_pairs(X, Y):
    XY = bracket(X, Y)
    assert apply_map('pi', XY) == bracket(apply_map('pi', X), apply_map('pi', Y))
    assert apply_map('rho', XY) == bracket(apply_map('rho', X),
                                           apply_map('rho', Y))
    assert apply_map('theta', XY) == bracket(apply_map('theta', Y),
                                             apply_map('theta', X))
    assert not (XY + bracket(Y, X))


def test_text():
    assert symbol_text((E, -3)) == 'e/T^3'
    assert symbol_text((F, 2)) == 'f*T^2'
    assert symbol_text((H, -1)) == 'h/T'
    assert symbol_text(CENTRAL) == 'c'
    assert degree((F, -2)) == (3, 2)
    assert degree((E, -1)) == (0, 1)
    assert is_lowering((F, 0)) and not is_lowering((E, 0))


if __name__ == '__main__':
    test_bracket_examples()
    test_jacobi()
    test_antisymmetry_and_degrees()
    test_maps()
    test_maps_and_brackets()
    test_maps_on_random_pairs()
    test_text()
