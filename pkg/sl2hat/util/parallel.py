# +
import torch.distributed as dist


def mpi_init():
    """initializes the mpi process group, returns WORLD"""
    dist.init_process_group('mpi')
    return dist.group.WORLD


def rank():
    if dist.is_initialized():
        return dist.get_rank()
    else:
        return 0


def world():
    if dist.is_initialized():
        return dist.get_world_size()
    else:
        return 1


def balance_work(size, workers):
    # sizes
    a = size//workers
    b = size % workers
    work = [a+1 if j < b else a for j in range(workers)]
    # indices
    indices = []
    start = 0
    for chunk in work:
        indices += [(start, start+chunk)]
        start = start+chunk
    return indices


def gather_objects(local):
    """concatenates per-rank lists in rank order"""
    if not dist.is_initialized():
        return list(local)
    pieces = [None for _ in range(world())]
    dist.all_gather_object(pieces, list(local))
    out = []
    for piece in pieces:
        out += piece
    return out


def distribute(func, items):
    """
    Maps func over items, each rank taking a balanced slice.
    The result is in the order of items on every rank.
    """
    items = list(items)
    start, end = balance_work(len(items), world())[rank()]
    return gather_objects([func(item) for item in items[start:end]])


def test_balance_work():
    assert balance_work(7, 3) == [(0, 3), (3, 5), (5, 7)]
    assert balance_work(2, 4) == [(0, 1), (1, 2), (2, 2), (2, 2)]
    assert sum(b-a for a, b in balance_work(101, 8)) == 101


def test_distribute_serial():
    assert distribute(lambda x: x*x, range(5)) == [0, 1, 4, 9, 16]


if __name__ == '__main__':
    test_balance_work()
    test_distribute_serial()
