from ._base import HandlebodyCommand


class Command(HandlebodyCommand):
    help = "List the Nielsen classes of generating n-vectors"

    verb = "nielsen"
