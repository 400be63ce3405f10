from .short_serializers import (
    MarkedVectorField,
    CharacterField,
    ActionClassShortSerializer,
    OrbitShortSerializer,
    OracleRowShortSerializer,
)

from .classification import (
    ClassificationReportSerializer,
    FormulaComparisonSerializer,
)

from .spectrum import GenusSpectrumSerializer

from .orbits import (
    OrbitPartitionSerializer,
    NielsenClassesSerializer,
    SingleOrbitSerializer,
)

from .oracle import OracleCheckSerializer

from .queries import (
    GroupQuerySerializer,
    RankQuerySerializer,
    ClassifyQuerySerializer,
    OrbitsQuerySerializer,
    SpectrumQuerySerializer,
)
