from ._core import (
    Group,
    check_ids,
    classify_ap,
    enumerate_aps,
    factorize,
    is_prime,
    parse,
    thompson_search,
)

__all__ = [
    "Group",
    "check_ids",
    "classify_ap",
    "enumerate_aps",
    "factorize",
    "is_prime",
    "parse",
    "thompson_search",
]
