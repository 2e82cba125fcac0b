"""Pass/fail accounting shared by the verifier, the scanners, and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    family: str
    indices: tuple[int, ...]
    message: str
    lhs: str = ""
    rhs: str = ""

    def to_dict(self) -> dict:
        d: dict = {
            "family": self.family,
            "indices": list(self.indices),
            "message": self.message,
        }
        if self.lhs or self.rhs:
            d["lhs"] = self.lhs
            d["rhs"] = self.rhs
        return d


@dataclass
class RunReport:
    """Aggregated outcome of one verification or scan command.

    Wall time is tracked for the human rendering but deliberately left out
    of the JSON rendering so that identical runs produce identical bytes.
    """

    tag: str
    instances: int = 0
    passes: int = 0
    failures: list[Failure] = field(default_factory=list)
    families: dict[str, list[int]] = field(default_factory=dict)
    info: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    def add(
        self,
        family: str,
        indices: tuple[int, ...],
        ok: bool,
        message: str = "",
        lhs: str = "",
        rhs: str = "",
    ) -> None:
        self.instances += 1
        counts = self.families.setdefault(family, [0, 0])
        counts[0] += 1
        if ok:
            self.passes += 1
            counts[1] += 1
        else:
            self.failures.append(Failure(family, indices, message, lhs, rhs))

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "instances": self.instances,
            "passes": self.passes,
            "families": {
                name: {"instances": c[0], "passes": c[1]}
                for name, c in sorted(self.families.items())
            },
            "info": dict(sorted(self.info.items())),
            "failures": [f.to_dict() for f in self.failures],
            "ok": self.ok,
        }

    def render_text(self) -> str:
        lines = [
            f"[{'PASS' if self.ok else 'FAIL'}] {self.tag}: "
            f"{self.passes}/{self.instances} instances pass ({self.wall_time:.2f} s)"
        ]
        for name, (total, passed) in sorted(self.families.items()):
            lines.append(f"    {name}: {passed}/{total}")
        for key, value in sorted(self.info.items()):
            lines.append(f"    {key}: {value}")
        for f in self.failures:
            lines.append(f"    FAIL {f.family} {f.indices}: {f.message}")
            if f.lhs or f.rhs:
                lines.append(f"         lhs = {f.lhs}")
                lines.append(f"         rhs = {f.rhs}")
        return "\n".join(lines)


def render_reports_json(reports: list[RunReport], command: str) -> str:
    payload = {
        "command": command,
        "ok": all(r.ok for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
