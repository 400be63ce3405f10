from rest_framework import serializers


class SortedGeneraField(serializers.Field):
    def __init__(self, **kwargs):
        kwargs.setdefault("read_only", True)
        super().__init__(**kwargs)

    def to_representation(self, value):
        return sorted(value)


class GenusSpectrumSerializer(serializers.Serializer):
    group = serializers.CharField(read_only=True)
    bound = serializers.IntegerField(read_only=True)
    orientation_preserving = SortedGeneraField(source="orientable_op")
    orientation_reversing = SortedGeneraField(source="orientable_or")
    nonorientable = SortedGeneraField()
