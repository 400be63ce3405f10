from .classification import ClassifyView, FormulaView
from .spectrum import SpectrumView
from .orbits import OrbitsView, NielsenView, OracleCheckView
