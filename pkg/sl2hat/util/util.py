# +
import datetime
import inspect
import sys


def date(fmt="%m/%d/%Y %H:%M:%S"):
    return datetime.datetime.now().strftime(fmt)


def get_default_args(func):
    signature = inspect.signature(func)
    return {
        k: v.default
        for k, v in signature.parameters.items()
        if v.default is not inspect.Parameter.empty
    }


def log(mssge, logfile=None):
    """
    Writes a date-stamped line, from rank 0 only.
    logfile: None for stderr, otherwise appended to.
    """
    from sl2hat.util.parallel import rank
    if rank() != 0:
        return
    line = '{} {}\n'.format(date(), mssge)
    if logfile:
        with open(logfile, 'a') as f:
            f.write(line)
    else:
        sys.stderr.write(line)
        sys.stderr.flush()


def test_get_default_args():
    def f(a, b=1, c='x'):
        pass
    assert get_default_args(f) == {'b': 1, 'c': 'x'}


if __name__ == '__main__':
    test_get_default_args()
