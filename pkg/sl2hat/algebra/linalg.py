# +
"""
Exact linear algebra over sympy domains (QQ, Q(m,k), ...).
Matrices are passed around as lists of rows of domain elements.
"""
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def domain_matrix(rows, domain, ncols=None):
    rows = [[domain.convert(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), domain)


def entries(M):
    return [list(row) for row in M.rep.to_ddm()]


def det(rows, domain):
    if not rows:
        return domain.one
    return domain_matrix(rows, domain).det()


def rank(rows, domain, ncols=None):
    M = domain_matrix(rows, domain, ncols)
    if 0 in M.shape:
        return 0
    return M.rank()


def nullspace(rows, domain, ncols):
    """basis of {x: rows @ x = 0}, as a list of vectors"""
    if not rows:
        return [[domain.one if i == j else domain.zero for j in range(ncols)]
                for i in range(ncols)]
    if ncols == 0:
        return []
    return entries(domain_matrix(rows, domain, ncols).nullspace())


def solve(rows, rhs, domain):
    """unique solution of the square nonsingular system rows @ x = rhs"""
    A = domain_matrix(rows, domain)
    b = domain_matrix([[x] for x in rhs], domain, 1)
    return [row[0] for row in entries(A.lu_solve(b))]


def solve_particular(rows, rhs, domain, ncols):
    """
    A solution of rows @ x = rhs with all free variables set to zero,
    or None if the system is inconsistent.
    """
    if not rows:
        return [domain.zero]*ncols
    aug = domain_matrix([list(row) + [b] for row, b in zip(rows, rhs)],
                        domain, ncols+1)
    R, pivots = aug.rref()
    if ncols in pivots:
        return None
    R = entries(R)
    x = [domain.zero]*ncols
    for r, p in enumerate(pivots):
        x[p] = R[r][ncols]/R[r][p]
    return x


def triplets(rows, text=str):
    """sparse 'i j value' lines"""
    return ['{} {} {}'.format(i, j, text(x))
            for i, row in enumerate(rows)
            for j, x in enumerate(row) if x]


def test_linalg_qq():
    A = [[1, 2], [3, 4]]
    assert det(A, QQ) == -2
    assert rank(A, QQ) == 2
    assert rank([[1, 2], [2, 4]], QQ) == 1
    (v,) = nullspace([[1, 1]], QQ, 2)
    assert v[0] + v[1] == 0 and v[0]
    assert nullspace([], QQ, 2) == [[1, 0], [0, 1]]
    assert solve(A, [5, 6], QQ) == [QQ(-4), QQ(9, 2)]
    x = solve_particular([[1, 1, 0], [0, 0, 1]], [2, 3], QQ, 3)
    assert x == [2, 0, 3]
    assert solve_particular([[1, 1], [2, 2]], [1, 3], QQ, 2) is None
    assert triplets([[0, 2], [1, 0]]) == ['0 1 2', '1 0 1']


def test_linalg_symbolic():
    from sl2hat.algebra.coeffs import Pool
    pool = Pool('m', 'k')
    m, k = pool['m'], pool['k']
    K = pool.domain
    assert det([[m, 1], [1, k]], K) == m*k - 1
    x = solve([[m, 1], [1, k]], [1, 0], K)
    assert x[0] == k/(m*k - 1) and x[1] == -1/(m*k - 1)
    assert rank([[m, k], [m*m, m*k]], K) == 1


if __name__ == '__main__':
    test_linalg_qq()
    test_linalg_symbolic()
