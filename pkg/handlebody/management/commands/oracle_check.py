from ._base import HandlebodyCommand


class Command(HandlebodyCommand):
    help = "Compare the character criterion with the covering-graph oracle on every marked vector"

    verb = "oracle-check"
