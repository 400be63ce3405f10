from ._base import HandlebodyCommand


class Command(HandlebodyCommand):
    help = "Closed-form counts for an abelian group, diffed against enumeration"

    verb = "formula"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--no-compare",
            action="store_false",
            dest="compare",
            help="skip the enumeration diff",
        )

    def params(self, options):
        params = super().params(options)
        params["compare"] = options["compare"]
        return params
