from .src import AgreeableSetFinder
from .src import BenchRunner
