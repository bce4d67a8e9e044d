"""Python bindings for the galcoh library."""

import json

from ._galcoh import (
    InvalidInput,
    Unsupported,
    c3_encode,
    c4_decode,
    c4_encode,
    discriminant,
    factor,
    galois_group,
    h1_size,
    hilbert2,
    is_isomorphic,
    mirror,
    run,
)


def run_json(*args):
    """Run a CLI command and return (exit_code, parsed envelope)."""
    code, text = run(list(args))
    return code, json.loads(text)


__all__ = [
    "InvalidInput",
    "Unsupported",
    "c3_encode",
    "c4_decode",
    "c4_encode",
    "discriminant",
    "factor",
    "galois_group",
    "h1_size",
    "hilbert2",
    "is_isomorphic",
    "mirror",
    "run",
    "run_json",
]
