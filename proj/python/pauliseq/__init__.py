"""Adiabatic Pauli-Hamiltonian-sequence gates.

Symbolic verification of Hamiltonian sequences (operator handoff tracking)
and Monte Carlo simulation of gate error under multiplicative control noise.
The heavy lifting lives in the compiled ``_core`` extension.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # in-tree builds place _core next to the package dir
    from _core import *  # type: ignore # noqa: F401,F403
    from _core import __version__  # type: ignore # noqa: F401
