from .solver import Solver
from .registry import ALGORITHMS, make_solver
