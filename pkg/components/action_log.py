"""Action log rendering for the terminal (stderr only)."""

import sys
from datetime import datetime
from typing import TextIO

from utils.logger import STATUS_ICONS, ActionLogger, ActionType

TYPE_LABELS = {
    ActionType.NU_COMPUTED.value: "NU",
    ActionType.EXTENSION.value: "EXTEND",
    ActionType.CERTIFICATE.value: "CERT",
    ActionType.GRAPHS_GENERATED.value: "GEN",
    ActionType.EXTREMAL_SEARCH.value: "SEARCH",
    ActionType.ERROR.value: "ERROR",
}


def render_action_log(max_entries: int = 50, stream: TextIO | None = None):
    """
    Print the action log, oldest entry first, with a verdict summary.

    Args:
        max_entries: Maximum number of log entries to display
        stream: Destination, stderr by default
    """
    stream = stream or sys.stderr
    logs = ActionLogger.get_logs(limit=max_entries)

    if not logs:
        print("No actions logged.", file=stream)
        return

    stats = ActionLogger.get_verdict_stats()
    counts = stats["counts"]
    print(
        f"Actions: {len(logs)}  Certificates: {stats['total']}  "
        f"PASS {counts['PASS']}  FAIL {counts['FAIL']}  VIOLATION {counts['VIOLATION-FOUND']}",
        file=stream,
    )

    for entry in reversed(logs):
        print(render_log_entry(entry), file=stream)


def render_log_entry(entry: dict) -> str:
    """
    Format one entry with its type badge and details.

    Args:
        entry: Log entry dictionary

    Returns:
        One line, or several when the entry has details
    """
    try:
        time_str = datetime.fromisoformat(entry["timestamp"]).strftime("%H:%M:%S")
    except (KeyError, ValueError):
        time_str = "??:??:??"

    icon = STATUS_ICONS.get(entry.get("status"), "ℹ️")
    badge = TYPE_LABELS.get(entry.get("type"), "INFO")
    line = f"{time_str} {icon} [{badge}] {entry.get('description', '')}"

    details = entry.get("details") or {}
    for key, value in details.items():
        line += f"\n    {key}: {value}"
    return line


def render_compact_log(max_entries: int = 5, stream: TextIO | None = None):
    """Print the most recent entries, one line each."""
    stream = stream or sys.stderr
    logs = ActionLogger.get_logs(limit=max_entries)

    if not logs:
        print("No recent actions", file=stream)
        return

    for entry in logs:
        print(ActionLogger.format_log_entry(entry), file=stream)
