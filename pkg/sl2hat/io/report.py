# +
"""
Campaign reports: one JSON document per run,

    {"schema": 1, "verb": ..., "inputs": {...}, "holds": bool, "checks": [...]}

where every check is a dict with at least a boolean "holds".
Only rank 0 writes.
"""
from sl2hat.util.parallel import rank
import json
import sys
import os
import tempfile

SCHEMA = 1


class Report:

    def __init__(self, verb, **inputs):
        self.verb = verb
        self.inputs = inputs
        self.checks = []

    def add(self, check):
        if 'holds' not in check:
            raise RuntimeError(f'a check needs a verdict: {check}')
        self.checks.append(check)
        return check

    def extend(self, checks):
        for check in checks:
            self.add(check)

    @property
    def holds(self):
        return all(check['holds'] for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check['holds']]

    def to_dict(self):
        return {'schema': SCHEMA, 'verb': self.verb, 'inputs': self.inputs,
                'holds': self.holds, 'checks': self.checks}

    def dumps(self):
        return json.dumps(self.to_dict(), indent=1, default=str)

    def write(self, path=None):
        if rank() != 0:
            return
        text = self.dumps() + '\n'
        if path:
            with open(path, 'w') as f:
                f.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()

    @staticmethod
    def read(path):
        with open(path) as f:
            data = json.load(f)
        if data.get('schema') != SCHEMA:
            raise RuntimeError(f'{path}: unknown report schema '
                               f'{data.get("schema")}')
        report = Report(data['verb'], **data['inputs'])
        report.extend(data['checks'])
        return report


def test_report():
    report = Report('derham-ranks', n=3, A=4, seed=7)
    report.add({'h0': 0, 'h1': 2, 'holds': True})
    assert report.holds and not report.failures
    report.add({'h0': 1, 'holds': False})
    assert not report.holds and len(report.failures) == 1
    data = json.loads(report.dumps())
    assert data['schema'] == 1 and data['holds'] is False
    assert data['inputs'] == {'n': 3, 'A': 4, 'seed': 7}
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'report.json')
        report.write(path)
        again = Report.read(path)
    assert again.dumps() == report.dumps()
    try:
        report.add({'h0': 0})
        raise AssertionError('a check without verdict was accepted')
    except RuntimeError:
        pass


if __name__ == '__main__':
    test_report()
