from rest_framework.response import Response
from rest_framework.views import APIView

from .. import verbs


class VerbView(APIView):
    """GET-only view running one verb on validated query parameters."""

    verb = None
    query_serializer_class = None

    def get(self, request, *args, **kwargs):
        serializer = self.query_serializer_class(data=request.query_params)
        serializer.is_valid(raise_exception=True)
        result = verbs.run(self.verb, dict(serializer.validated_data))
        return Response(result.data)
