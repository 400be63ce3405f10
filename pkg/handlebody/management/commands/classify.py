from ._base import HandlebodyCommand


class Command(HandlebodyCommand):
    help = "Count free actions of a group on the handlebodies of one genus"

    verb = "classify"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--weak",
            action="store_true",
            help="list weak-equivalence classes instead of equivalence classes",
        )

    def params(self, options):
        params = super().params(options)
        params["weak"] = options["weak"]
        return params
