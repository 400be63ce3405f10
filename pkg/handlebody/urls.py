from django.urls import path

from handlebody.views import (
    ClassifyView,
    FormulaView,
    NielsenView,
    OracleCheckView,
    OrbitsView,
    SpectrumView,
)

urlpatterns = [
    path("classify/", ClassifyView.as_view(), name="classify"),
    path("spectrum/", SpectrumView.as_view(), name="spectrum"),
    path("orbits/", OrbitsView.as_view(), name="orbits"),
    path("nielsen/", NielsenView.as_view(), name="nielsen"),
    path("oracle-check/", OracleCheckView.as_view(), name="oracle-check"),
    path("formula/", FormulaView.as_view(), name="formula"),
]
