"""
Command modules for kronvpf CLI
"""

from .compute import cmd_compute
from .atomic import cmd_atomic
from .bounds import cmd_bounds
from .vanish import cmd_vanish
from .stable_triple import cmd_stable_triple
from .feasible_set import cmd_feasible_set
from .poset import cmd_poset
from .stability_seq import cmd_stability_seq
from .matrix import cmd_matrix, emit_matrix
from .ressayre import cmd_ressayre
from .reproduce import cmd_reproduce

__all__ = [
    'cmd_compute',
    'cmd_atomic',
    'cmd_bounds',
    'cmd_vanish',
    'cmd_stable_triple',
    'cmd_feasible_set',
    'cmd_poset',
    'cmd_stability_seq',
    'cmd_matrix',
    'emit_matrix',
    'cmd_ressayre',
    'cmd_reproduce'
]
