from .value_oracle import ValueOracle, query_report
from .planted import PlantedOracle, make_planted_oracle
from .additive import AdditiveOracle
