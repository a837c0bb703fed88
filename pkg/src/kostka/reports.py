"""Verification report value type shared by the checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

_MAX_SHOWN = 50


@dataclass
class Report:
    """Outcome of one exhaustive check: what ran, how much, and every violation found."""

    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"{self.name}: checked={self.checked} violations={len(self.violations)} {status} ({self.elapsed:.2f}s)"]
        for v in self.violations[:_MAX_SHOWN]:
            lines.append("  " + ", ".join(f"{key}={v[key]}" for key in sorted(v)))
        if len(self.violations) > _MAX_SHOWN:
            lines.append(f"  ... and {len(self.violations) - _MAX_SHOWN} more")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": self.violations,
            "elapsed": round(self.elapsed, 3),
        }
