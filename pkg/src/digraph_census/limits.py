"""Size guards for expensive generators and exhaustive searches.

Every guard can be raised at once through the ``DIGRAPH_CENSUS_MAX_N``
environment variable, which replaces the default vertex-count limit of each
guarded operation.
"""

import os

from .errors import SizeLimitError

ENV_VAR = "DIGRAPH_CENSUS_MAX_N"

# default vertex-count ceilings per guarded operation
DEFAULTS = {
    "recursive_family": 4096,
    "enumerate_digon_free": 6,
    "verify_cig": 9,
    "layered_tournaments": 4096,
}


def max_n(kind: str) -> int:
    override = os.environ.get(ENV_VAR)
    if override:
        try:
            return int(override)
        except ValueError:
            raise SizeLimitError(f"{ENV_VAR} must be an integer, got {override!r}") from None
    return DEFAULTS[kind]


def check(kind: str, n: int) -> None:
    limit = max_n(kind)
    if n > limit:
        raise SizeLimitError(
            f"{kind}: n={n} exceeds size limit {limit} (set {ENV_VAR} to override)"
        )
