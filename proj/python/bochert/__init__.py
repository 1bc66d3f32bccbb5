"""Permutation groups, minimal degrees and exact checks of minimal-degree bounds."""

import json

from ._core import (  # noqa: F401
    CapExceeded,
    DegreeMismatch,
    Error,
    Group,
    ParseError,
    Permutation,
    PreconditionError,
    __version__,
    catalog_labels,
    check_commutator_laws,
    commutator,
    compose,
    conjugate,
    mathieu_table,
    prime_order_witness,
    trace,
    verify_json,
)


def verify(group, suite="all", samples=1000, seed=0, jobs=1):
    """Run verification suites and return the parsed JSON report."""
    if isinstance(group, str):
        group = Group.resolve(group)
    return json.loads(verify_json(group, suite, samples, seed, jobs))
