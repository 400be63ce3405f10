from ..serializers import SpectrumQuerySerializer
from .base import VerbView


class SpectrumView(VerbView):
    verb = "spectrum"
    query_serializer_class = SpectrumQuerySerializer
