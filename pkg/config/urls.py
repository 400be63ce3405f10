from django.urls import include, path

urlpatterns = [
    path("api/handlebody/", include("handlebody.urls")),
]
