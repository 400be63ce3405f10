from ._base import HandlebodyCommand


class Command(HandlebodyCommand):
    help = "Enumerate orbits of marked generating vectors, or the orbit of one vector"

    verb = "orbits"
    rank_required = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--weak", action="store_true", help="also apply Aut(G)")
        parser.add_argument("--vector", help="a single marked vector, g=(...);v=(...)")
        parser.add_argument(
            "--export-graph",
            dest="export_graph",
            help="write the Schreier graph of --vector as an edge list",
        )

    def params(self, options):
        params = super().params(options)
        params["weak"] = options["weak"]
        for key in ("vector", "export_graph"):
            if options.get(key):
                params[key] = options[key]
        return params
