import logging

from formslie.forms import list_forms
from handlers.command_handler import EXIT_OK, CommandHandler
from superalg.catalog import DIVISION_ALGEBRAS, INVOLUTIVE_PRESETS
from superalg.embeddings import EMBEDDINGS

logger = logging.getLogger(__name__)


class ListFormsHandler(CommandHandler):
    """Dumps the form families together with the algebra and embedding catalogs."""

    name = "list-forms"

    def handle(self, args) -> int:
        self.emit(
            {
                "schema": 1,
                "forms": list_forms(),
                "division_algebras": list(DIVISION_ALGEBRAS),
                "involutive_presets": dict(INVOLUTIVE_PRESETS),
                "embeddings": sorted(EMBEDDINGS),
            }
        )
        return EXIT_OK
