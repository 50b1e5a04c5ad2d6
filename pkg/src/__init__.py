from .instance import AdditiveProfile, ItemSet, OrdinalProfile
from .finder import AgreeableSetFinder
from .bench import BenchRunner, run_bench
from .solvers import make_solver
from .oracles import AdditiveOracle, PlantedOracle
