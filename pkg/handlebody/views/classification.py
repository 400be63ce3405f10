from ..serializers import ClassifyQuerySerializer, RankQuerySerializer
from .base import VerbView


class ClassifyView(VerbView):
    verb = "classify"
    query_serializer_class = ClassifyQuerySerializer


class FormulaView(VerbView):
    verb = "formula"
    query_serializer_class = RankQuerySerializer
