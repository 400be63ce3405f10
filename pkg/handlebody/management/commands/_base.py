"""
Shared plumbing for the handlebody management commands.

Every command builds a group from a descriptor, resolves ``--n`` or
``--genus``, runs one verb and writes either the table or the machine
document to stdout. Library errors become a one-line ``CommandError``:
exit status 3 for exceeded caps, 2 for everything else.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from handlebody import verbs
from handlebody.conf import get_setting
from handlebody.exceptions import CapExceeded, HandlebodyError
from handlebody.formats import OUTPUT_FORMATS

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
CAP_ERROR = 3


class HandlebodyCommand(BaseCommand):
    verb = None
    takes_rank = True
    rank_required = True

    def add_arguments(self, parser):
        parser.add_argument("group", help="group descriptor, e.g. quaternion or dihedral:3")
        if self.takes_rank:
            rank = parser.add_mutually_exclusive_group(required=self.rank_required)
            rank.add_argument("--n", type=int, help="length of the generating vectors")
            rank.add_argument("--genus", type=int, help="handlebody genus 1 + |G|(n-1)")
            parser.add_argument("--state-cap", type=int, dest="state_cap")
        parser.add_argument("--order-cap", type=int, dest="order_cap")
        parser.add_argument(
            "--format",
            choices=OUTPUT_FORMATS,
            dest="output_format",
            default=None,
            help="table (default) or machine (JSON)",
        )

    def params(self, options):
        keys = ("group", "n", "genus", "state_cap", "order_cap")
        return {key: options.get(key) for key in keys if options.get(key) is not None}

    def handle(self, *args, **options):
        output_format = options["output_format"] or get_setting("DEFAULT_FORMAT")
        params = self.params(options)
        logger.debug("running %s with %s", self.verb, params)
        try:
            result = verbs.run(self.verb, params)
        except CapExceeded as exc:
            raise CommandError(f"error: {exc.kind}: {exc}", returncode=CAP_ERROR)
        except HandlebodyError as exc:
            raise CommandError(f"error: {exc.kind}: {exc}", returncode=USAGE_ERROR)
        self.stdout.write(result.render(output_format))
