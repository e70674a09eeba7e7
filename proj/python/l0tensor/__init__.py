"""Exact pointwise tensor norms over finite atomic measure spaces.

Documents are JSON strings with rationals written "p/q"; the compiled
_core module does all the arithmetic and hands back formatted values.
"""

import sys

from ._core import (
    __version__,
    check_document,
    cli,
    element_norm,
    tensor_norm,
    theorem_ids,
    verify,
)

__all__ = [
    "__version__",
    "check_document",
    "cli",
    "element_norm",
    "main",
    "tensor_norm",
    "theorem_ids",
    "verify",
]


def main(argv=None):
    """Console entry point mirroring the l0t binary."""
    if argv is None:
        argv = sys.argv[1:]
    code, out, err = cli(list(argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
