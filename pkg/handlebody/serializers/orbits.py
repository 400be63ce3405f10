from rest_framework import serializers

from ..formats import format_marked_vector
from .short_serializers import MarkedVectorField, OrbitShortSerializer


class OrbitPartitionSerializer(serializers.Serializer):
    group = serializers.SerializerMethodField()
    n = serializers.IntegerField(read_only=True)
    mode = serializers.CharField(read_only=True)
    orbit_count = serializers.SerializerMethodField()
    states = serializers.IntegerField(source="total_states", read_only=True)
    orbits = OrbitShortSerializer(many=True, read_only=True)

    def get_group(self, obj):
        return str(obj.group)

    def get_orbit_count(self, obj):
        return len(obj.orbits)


class NielsenClassesSerializer(OrbitPartitionSerializer):
    single_class = serializers.SerializerMethodField()

    def get_single_class(self, obj):
        return len(obj.orbits) == 1


class SingleOrbitSerializer(serializers.Serializer):
    group = serializers.SerializerMethodField()
    mode = serializers.SerializerMethodField()
    size = serializers.IntegerField(read_only=True)
    kind = serializers.CharField(read_only=True, allow_null=True)
    representative = MarkedVectorField()
    members = serializers.SerializerMethodField()

    def get_group(self, obj):
        return str(self.context["group"])

    def get_mode(self, obj):
        return self.context.get("mode")

    def get_members(self, obj):
        group = self.context["group"]
        return [format_marked_vector(group, x) for x in self.context.get("members", ())]
