from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass
class Failure:
    prop: str
    inputs: tuple[str, ...]
    expected: str
    actual: str
    note: str = ""


@dataclass
class PropertyReport:
    """Outcome of one check suite over one space.

    ``failures`` is empty exactly when the suite passed.
    """

    suite: str
    space_id: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, prop, inputs, expected, actual, note=""):
        self.failures.append(Failure(prop, tuple(inputs), str(expected), str(actual), note))

    def merge(self, other: PropertyReport) -> PropertyReport:
        """Combine shard reports of the same suite; order of merging is irrelevant
        to ``checked`` and failures are kept in shard order."""
        if other.suite != self.suite or other.space_id != self.space_id:
            raise ValueError("can only merge reports of the same suite and space")
        return PropertyReport(
            self.suite, self.space_id, self.checked + other.checked,
            self.failures + other.failures,
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.suite} on {self.space_id}: {self.checked} checked, "
                f"{len(self.failures)} failures")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d
