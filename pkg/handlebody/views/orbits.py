from ..serializers import OrbitsQuerySerializer, RankQuerySerializer
from .base import VerbView


class OrbitsView(VerbView):
    verb = "orbits"
    query_serializer_class = OrbitsQuerySerializer


class NielsenView(VerbView):
    verb = "nielsen"
    query_serializer_class = RankQuerySerializer


class OracleCheckView(VerbView):
    verb = "oracle-check"
    query_serializer_class = RankQuerySerializer
