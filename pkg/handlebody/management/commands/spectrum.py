from ._base import HandlebodyCommand


class Command(HandlebodyCommand):
    help = "List the genera up to a bound on which a group acts freely"

    verb = "spectrum"
    takes_rank = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--bound", type=int, required=True, help="largest genus")

    def params(self, options):
        params = super().params(options)
        params["bound"] = options["bound"]
        return params
