"""Per-run summary of a certificate stream."""

import sys
import time
from dataclasses import dataclass, field
from typing import TextIO

import pandas as pd

from utils.certificate import Certificate, Verdict
from utils.multigraph import hash_hex


@dataclass
class RunReport:
    """
    Command echo, the certificates emitted and the wall time.

    Summary counts are always derived from `certificates`, never stored.
    """
    command: str
    certificates: list[Certificate] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    finished: float | None = None

    def add(self, certs: list[Certificate]):
        self.certificates.extend(certs)

    def finish(self):
        self.finished = time.perf_counter()

    @property
    def wall_time(self) -> float:
        end = self.finished if self.finished is not None else time.perf_counter()
        return end - self.started

    def counts(self) -> dict[str, int]:
        tally = {verdict.value: 0 for verdict in Verdict}
        for cert in self.certificates:
            tally[cert.verdict.value] += 1
        return tally

    def to_frame(self) -> pd.DataFrame:
        """One row per certificate: claim, n, m, hash, verdict."""
        return pd.DataFrame(
            [
                {
                    "claim": cert.claim.value,
                    "n": cert.graph.n,
                    "m": cert.graph.m,
                    "hash": hash_hex(cert.graph),
                    "verdict": cert.verdict.value,
                }
                for cert in self.certificates
            ],
            columns=["claim", "n", "m", "hash", "verdict"],
        )

    def summary(self) -> pd.DataFrame:
        """Verdict counts per (claim, n)."""
        df = self.to_frame()
        if df.empty:
            return pd.DataFrame(columns=[v.value for v in Verdict])
        table = pd.crosstab([df["claim"], df["n"]], df["verdict"])
        return table.reindex(columns=[v.value for v in Verdict], fill_value=0)


def render_run_report(report: RunReport, stream: TextIO | None = None):
    """Print the command, the per-(claim, n) table and totals to stderr."""
    stream = stream or sys.stderr
    counts = report.counts()
    print(f"$ {report.command}", file=stream)
    if report.certificates:
        print(report.summary().to_string(), file=stream)
    print(
        f"{len(report.certificates)} certificates: "
        + "  ".join(f"{verdict} {count}" for verdict, count in counts.items())
        + f"  ({report.wall_time:.2f}s)",
        file=stream,
    )
