"""In-memory action log of toolkit runs (nu values, extensions, certificates)."""

from collections import deque
from datetime import datetime
from enum import Enum
from typing import Any

from config import ACTION_LOG_LIMIT

_ACTION_LOG: deque[dict[str, Any]] = deque(maxlen=ACTION_LOG_LIMIT)

STATUS_ICONS = {"success": "✅", "warning": "⚠️", "error": "❌"}
VERDICTS = ("PASS", "FAIL", "VIOLATION-FOUND")


class ActionType(Enum):
    """Types of actions that can be logged."""
    NU_COMPUTED = "nu_computed"
    EXTENSION = "extension"
    CERTIFICATE = "certificate"
    GRAPHS_GENERATED = "graphs_generated"
    EXTREMAL_SEARCH = "extremal_search"
    ERROR = "error"


class ActionLogger:
    """
    Action log of the current process.

    Entries are plain dicts {timestamp, type, description, details, status}.
    Pool workers keep their own copy, so certificates are logged by the
    parent once results come back. The CLI prints entries to stderr only.
    """

    @staticmethod
    def log(
        action_type: ActionType,
        description: str,
        details: dict[str, Any] | None = None,
        status: str = "success",
    ):
        """
        Append an entry.

        Args:
            action_type: The type of action
            description: One-line summary shown in renderers
            details: JSON-able key/value pairs
            status: success, warning, or error
        """
        _ACTION_LOG.append({
            "timestamp": datetime.now().isoformat(),
            "type": action_type.value,
            "description": description,
            "details": dict(details or {}),
            "status": status,
        })

    @staticmethod
    def get_logs(limit: int | None = None) -> list[dict]:
        """Entries, newest first, at most `limit` of them."""
        newest_first = list(reversed(_ACTION_LOG))
        return newest_first[:limit] if limit else newest_first

    @staticmethod
    def get_logs_by_type(action_type: ActionType) -> list[dict]:
        """Entries of one type, oldest first."""
        return [entry for entry in _ACTION_LOG if entry["type"] == action_type.value]

    @staticmethod
    def get_verdict_stats() -> dict[str, Any]:
        """
        Tally certificate verdicts.

        Returns:
            {"total": int, "counts": {verdict: int}, "logs": certificate entries}
        """
        certificates = ActionLogger.get_logs_by_type(ActionType.CERTIFICATE)
        counts = dict.fromkeys(VERDICTS, 0)
        for entry in certificates:
            verdict = entry["details"].get("verdict")
            if verdict in counts:
                counts[verdict] += 1
        return {"total": len(certificates), "counts": counts, "logs": certificates}

    @staticmethod
    def clear():
        _ACTION_LOG.clear()

    @staticmethod
    def format_log_entry(entry: dict) -> str:
        """'[HH:MM:SS] icon description' for compact listings."""
        clock = datetime.fromisoformat(entry["timestamp"]).strftime("%H:%M:%S")
        icon = STATUS_ICONS.get(entry["status"], "ℹ️")
        return f"[{clock}] {icon} {entry['description']}"


# One helper per action type
def log_nu(k: int, value: int, graph_hash: str):
    """Log an exact nu_k computation."""
    ActionLogger.log(
        ActionType.NU_COMPUTED,
        f"nu_{k} = {value}",
        {"k": k, "value": value, "hash": graph_hash},
    )


def log_extension(mode: str, colored: int, iterations: int):
    """Log a finished factor extension."""
    ActionLogger.log(
        ActionType.EXTENSION,
        f"Extension ({mode}) finished after {iterations} steps with {colored} colored edges",
        {"mode": mode, "colored": colored, "iterations": iterations},
    )


def log_certificate(claim: str, verdict: str, graph_hash: str):
    """Log an emitted certificate."""
    status = "success" if verdict == "PASS" else "warning"
    ActionLogger.log(
        ActionType.CERTIFICATE,
        f"{claim} on {graph_hash}: {verdict}",
        {"claim": claim, "verdict": verdict, "hash": graph_hash},
        status=status,
    )


def log_generated(count: int, n: int, mode: str):
    """Log a graph generation run."""
    ActionLogger.log(
        ActionType.GRAPHS_GENERATED,
        f"Generated {count} graphs on {n} vertices ({mode})",
        {"count": count, "n": n, "mode": mode},
    )


def log_extremal(max_n: int, found: int):
    """Log an extremal search."""
    ActionLogger.log(
        ActionType.EXTREMAL_SEARCH,
        f"Extremal search up to n={max_n}: {found} graphs with nu2 + nu3 = 2n",
        {"max_n": max_n, "found": found},
    )


def log_error(error_message: str, details: dict | None = None):
    """Log an error."""
    ActionLogger.log(
        ActionType.ERROR,
        f"Error: {error_message}",
        details,
        status="error",
    )
