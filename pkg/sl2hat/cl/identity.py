# +
from sl2hat.module.verma import Verma
from sl2hat.module.contragradient import (Contragradient, verify_identity,
                                          verify_identity_rho)
from sl2hat.module.groups import check_groups
from sl2hat.io.report import Report
from sl2hat.util.util import log


def identities(side='A', a_max=5, via_rho=True):
    """
    Identity A or B on every basis key, symbolically in m and k.
    For B and via_rho, also as the image of identity A under chi*.
    """
    if side not in ('A', 'B'):
        raise ValueError(f'side must be A or B, got {side}')
    if a_max < 1:
        raise ValueError(f'a_max must be >= 1, got {a_max}')
    report = Report('verify-identity', side=side, a_max=a_max,
                    via_rho=via_rho)
    C = Contragradient(Verma.symbolic())
    for a in range(1, a_max + 1):
        log(f'identity {side}, a = {a}')
        report.add(verify_identity(side, a, C))
        if side == 'B' and via_rho:
            report.add(verify_identity_rho(a, C))
    return report


def group_oracles(a_max=5):
    """closed-form pairing values of the groups O, I, II, III"""
    if a_max < 1:
        raise ValueError(f'a_max must be >= 1, got {a_max}')
    report = Report('group-oracles', a_max=a_max)
    C = Contragradient(Verma.symbolic())
    for a in range(1, a_max + 1):
        log(f'groups, a = {a}')
        report.extend(check_groups(a, C)['checks'])
    return report


def test_identities():
    report = identities('B', 2)
    assert report.holds and len(report.checks) == 4
    assert [c['identity'] for c in report.checks] == ['B', 'B via rho'] * 2
    report = group_oracles(2)
    assert report.holds and report.checks


if __name__ == '__main__':
    test_identities()
