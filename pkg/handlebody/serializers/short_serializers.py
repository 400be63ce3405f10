from rest_framework import serializers

from ..formats import format_character, format_marked_vector


class MarkedVectorField(serializers.Field):
    """Read-only ``g=(...);v=(...)`` text; needs ``group`` in the context."""

    def __init__(self, **kwargs):
        kwargs.setdefault("read_only", True)
        super().__init__(**kwargs)

    def to_representation(self, value):
        return format_marked_vector(self.context["group"], value)


class CharacterField(serializers.Field):
    """A character as its signs on the canonical generators, or null."""

    def __init__(self, **kwargs):
        kwargs.setdefault("read_only", True)
        super().__init__(**kwargs)

    def to_representation(self, value):
        if value is None:
            return None
        return format_character(self.context["group"], value)


class ActionClassShortSerializer(serializers.Serializer):
    kind = serializers.CharField(read_only=True)
    orbit_size = serializers.IntegerField(read_only=True)
    character = CharacterField()
    representative = MarkedVectorField()


class OrbitShortSerializer(serializers.Serializer):
    size = serializers.IntegerField(read_only=True)
    kind = serializers.CharField(read_only=True, allow_null=True)
    representative = MarkedVectorField()


class OracleRowShortSerializer(serializers.Serializer):
    representative = MarkedVectorField()
    algebraic = serializers.CharField(read_only=True)
    covering_orientable = serializers.BooleanField(read_only=True)
    cycle_rank = serializers.IntegerField(read_only=True)
    same_character = serializers.BooleanField(read_only=True)
