import os
from concurrent.futures import ThreadPoolExecutor

THREAD_COUNT = int(os.environ.get("FROBENIUS_THREADS", 5))


def make_parallel(single_func, thread_count=THREAD_COUNT):
    # This function will wrap another function
    # (similar to a decorator, but we don't want to overwrite the original)
    # e.g. parallel_func = make_parallel(singleton_func)
    # singleton_func's first parameter must be the var to multiplex on,
    # and it must return an iterable; parallel_func takes an iterable in its stead
    # and returns the flattened results in input order
    def parallel_func(iterable, *args, **kwargs):
        with ThreadPoolExecutor(max_workers=thread_count) as executor:
            futures = [executor.submit(single_func, i, *args, **kwargs) for i in iterable]
        return [val for future in futures for val in future.result()]

    return parallel_func


def chunked(start: int, stop: int, size: int):
    """Split the half-open range [start, stop) into consecutive ranges of at most `size` values."""
    if size < 1:
        raise ValueError(f"Chunk size must be positive, got {size}")
    return [range(lo, min(lo + size, stop)) for lo in range(start, stop, size)]
