from ._combinlab import (
    InputError,
    LimitError,
    counterfeit,
    ford_johnson_count,
    insertion_count,
    knapsack,
    matrix_chain,
    run,
    scc,
    select,
    sort,
    twosat,
)

__all__ = [
    "InputError",
    "LimitError",
    "counterfeit",
    "ford_johnson_count",
    "insertion_count",
    "knapsack",
    "matrix_chain",
    "run",
    "scc",
    "select",
    "sort",
    "twosat",
]
