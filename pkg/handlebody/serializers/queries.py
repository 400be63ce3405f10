from rest_framework import serializers

from ..groups import parse_descriptor
from ..exceptions import DescriptorError


class GroupQuerySerializer(serializers.Serializer):
    group = serializers.CharField()
    order_cap = serializers.IntegerField(min_value=1, required=False)

    def validate_group(self, value):
        try:
            parse_descriptor(value)
        except DescriptorError as exc:
            raise serializers.ValidationError(str(exc))
        return value


class RankQuerySerializer(GroupQuerySerializer):
    n = serializers.IntegerField(min_value=1, required=False)
    genus = serializers.IntegerField(min_value=1, required=False)
    state_cap = serializers.IntegerField(min_value=1, required=False)

    def validate(self, attrs):
        if ("n" in attrs) == ("genus" in attrs):
            raise serializers.ValidationError("Give exactly one of n and genus.")
        return attrs


class ClassifyQuerySerializer(RankQuerySerializer):
    weak = serializers.BooleanField(default=False)


class OrbitsQuerySerializer(ClassifyQuerySerializer):
    vector = serializers.CharField(required=False)

    def validate(self, attrs):
        # a single orbit takes its length from the vector
        if "vector" in attrs and "n" not in attrs and "genus" not in attrs:
            return attrs
        return super().validate(attrs)


class SpectrumQuerySerializer(GroupQuerySerializer):
    bound = serializers.IntegerField(min_value=1)
