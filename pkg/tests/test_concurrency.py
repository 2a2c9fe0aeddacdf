from concurrent.futures import ThreadPoolExecutor

from xreal.basic_ops import add
from xreal.conversions import rat_to_stream
from xreal.digits import take
from xreal.series import build_e_minus2, mult


def _race(stream, n, workers=8):
    with ThreadPoolExecutor(workers) as pool:
        return list(pool.map(lambda _: take(stream, n), range(workers)))


def test_threads_forcing_one_stream_agree():
    expected = take(build_e_minus2(), 300)
    results = _race(build_e_minus2(), 300)
    assert all(r == expected for r in results)


def test_threads_forcing_shared_subterms_agree():
    x = rat_to_stream(2, 7)
    s = mult(add(x, rat_to_stream(1, 5)), x)
    expected = take(mult(add(rat_to_stream(2, 7), rat_to_stream(1, 5)), rat_to_stream(2, 7)), 60)
    assert all(r == expected for r in _race(s, 60))
