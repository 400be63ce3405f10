from rest_framework import serializers

from .short_serializers import ActionClassShortSerializer


class ClassificationReportSerializer(serializers.Serializer):
    """
    Machine form of a ClassificationReport.

    ``or`` is a keyword, so the count fields are declared in ``get_fields``
    to keep the published names op/or/nonor in a fixed order.
    """

    COUNTS = (
        ("op", "op_classes"),
        ("op_weak", "op_weak"),
        ("or", "or_classes"),
        ("or_weak", "or_weak"),
        ("nonor", "nonor_classes"),
        ("nonor_weak", "nonor_weak"),
    )

    def get_fields(self):
        fields = {
            "group": serializers.CharField(read_only=True),
            "order": serializers.IntegerField(read_only=True),
            "n": serializers.IntegerField(read_only=True),
            "genus": serializers.IntegerField(read_only=True),
            "mu": serializers.IntegerField(read_only=True),
            "h1_rank": serializers.IntegerField(read_only=True),
            "source": serializers.CharField(read_only=True),
        }
        for name, source in self.COUNTS:
            # DRF refuses a source equal to the field name
            extra = {"source": source} if source != name else {}
            fields[name] = serializers.IntegerField(read_only=True, **extra)
        fields["nielsen_classes"] = serializers.IntegerField(read_only=True, allow_null=True)
        fields["epi_orbits"] = serializers.IntegerField(read_only=True, allow_null=True)
        representatives = "weak_classes" if self.context.get("weak") else "classes"
        fields["representatives"] = ActionClassShortSerializer(
            source=representatives, many=True, read_only=True
        )
        return fields


class FormulaComparisonSerializer(serializers.Serializer):
    formula = serializers.SerializerMethodField()
    enumeration = serializers.SerializerMethodField()
    differing = serializers.ListField(child=serializers.CharField(), read_only=True)

    def get_formula(self, obj):
        return ClassificationReportSerializer(obj["formula"], context=self.context).data

    def get_enumeration(self, obj):
        if obj["enumeration"] is None:
            return None
        return ClassificationReportSerializer(obj["enumeration"], context=self.context).data
