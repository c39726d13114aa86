"""q-deformed oscillator qubits.

Thin Python face over the C++ core: deformed ladder operators on truncated
Fock spaces, the two-mode qubit construction, Hadamard / phase-shift gates,
and the verification helpers for the identities relating them.
"""

try:
    from ._qdeform import *  # noqa: F401,F403  (installed layout)
    from ._qdeform import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension on sys.path, not in package
    from _qdeform import *  # noqa: F401,F403
    from _qdeform import __doc__ as _core_doc

__version__ = "0.1.0"
