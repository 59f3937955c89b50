import logging

from formslie.lie import group_components, lie_basis
from formslie.quaternionic import phi_j_identities
from handlers.command_handler import EXIT_CHECK_FAILED, EXIT_OK, CommandHandler
from superalg.embeddings import EMBEDDINGS, check_embedding

logger = logging.getLogger(__name__)


class LieBasisHandler(CommandHandler):
    """Dimensions of g(phi), its closure and invariance checks, and the component count of G(phi)."""

    name = "lie-basis"

    def handle(self, args) -> int:
        form = self.form(args)
        lie = lie_basis(form)
        report = {
            **lie.to_dict(),
            "closed": lie.check_closed(),
            "invariant": lie.check_invariance(),
            "components": len(group_components(form)) + 1,
        }
        self.emit(report)
        return EXIT_OK if report["closed"] and report["invariant"] else EXIT_CHECK_FAILED


class CheckQuaternionicHandler(CommandHandler):
    name = "check-quaternionic"

    def handle(self, args) -> int:
        report = phi_j_identities(self.form(args))
        self.emit(report)
        return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


class CheckEmbeddingsHandler(CommandHandler):
    """Verifies the catalogued superalgebra embeddings (all of them by default)."""

    name = "check-embeddings"

    def handle(self, args) -> int:
        names = args.name or sorted(EMBEDDINGS)
        rows = [check_embedding(name).to_dict() for name in names]
        ok = all(row["ok"] for row in rows)
        self.emit({"schema": 1, "ok": ok, "embeddings": rows})
        return EXIT_OK if ok else EXIT_CHECK_FAILED
