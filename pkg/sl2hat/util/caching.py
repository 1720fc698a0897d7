# +
import functools


def method_caching(method):
    """
    Memoizes a method on its (hashable) positional arguments.
    Caching is on unless obj.method_caching = False.
    The cache lives in obj.cached[method name] and can be cleared
    by obj.cached.clear(). Returned values are shared: do not mutate.
    """

    @functools.wraps(method)
    def cacher(self, *args):
        if getattr(self, 'method_caching', True):
            try:
                table = self.cached[method.__name__]
            except AttributeError:
                self.cached = {}
                return cacher(self, *args)  # recursive
            except KeyError:
                table = self.cached[method.__name__] = {}
            try:
                return table[args]
            except KeyError:
                _return = method(self, *args)
                table[args] = _return
                return _return
        else:
            return method(self, *args)

    return cacher


def test_method_caching():

    class Counter:

        def __init__(self):
            self.calls = 0

        @method_caching
        def square(self, a):
            self.calls += 1
            return a*a

    c = Counter()
    assert c.square(3) == 9 and c.square(3) == 9
    assert c.calls == 1
    c.square(4)
    assert c.calls == 2 and len(c.cached['square']) == 2
    c.method_caching = False
    c.square(3)
    assert c.calls == 3
    c.cached.clear()


if __name__ == '__main__':
    test_method_caching()
