from rest_framework import serializers

from .short_serializers import OracleRowShortSerializer


class OracleCheckSerializer(serializers.Serializer):
    group = serializers.SerializerMethodField()
    n = serializers.SerializerMethodField()
    genus = serializers.SerializerMethodField()
    vectors = serializers.SerializerMethodField()
    orientable = serializers.SerializerMethodField()
    mismatches = serializers.SerializerMethodField()

    def get_group(self, rows):
        return str(self.context["group"])

    def get_n(self, rows):
        return self.context["n"]

    def get_genus(self, rows):
        return rows[0].genus if rows else None

    def get_vectors(self, rows):
        return len(rows)

    def get_orientable(self, rows):
        return sum(1 for row in rows if row.covering_orientable)

    def get_mismatches(self, rows):
        bad = [row for row in rows if not row.agrees]
        return OracleRowShortSerializer(bad, many=True, context=self.context).data
