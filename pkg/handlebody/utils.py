from rest_framework import status
from rest_framework.exceptions import APIException
from rest_framework.views import exception_handler

from .exceptions import CapExceeded, HandlebodyError


class HandlebodyAPIException(APIException):
    status_code = status.HTTP_400_BAD_REQUEST
    default_code = "error"

    def __init__(self, error):
        super().__init__(detail=str(error), code=error.kind)
        self.kind = error.kind
        if isinstance(error, CapExceeded):
            self.status_code = status.HTTP_413_REQUEST_ENTITY_TOO_LARGE


def custom_exception_handler(exc, context):
    if isinstance(exc, HandlebodyError):
        exc = HandlebodyAPIException(exc)
    response = exception_handler(exc, context)
    if response is not None:
        response.data["status_code"] = response.status_code
        response.data["detail"] = response.data.get("detail", str(exc))
        response.data["error"] = getattr(exc, "kind", getattr(exc, "default_code", "error"))
    return response
