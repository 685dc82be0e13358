"""A script to test the speed of the connected DAG census."""

import time

import tqdm

from dag_zeropad.census import census, connected_dag_count

try:
    for n in tqdm.tqdm(range(2, 8)):
        start = time.perf_counter()
        row = census(n, workers=1)
        tqdm.tqdm.write(
            f"n={n} graphs={connected_dag_count(n)} "
            f"repeated={row.repeated} seconds={time.perf_counter() - start:.2f}"
        )
except KeyboardInterrupt:
    pass
