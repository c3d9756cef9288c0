from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self):
        return {
            'name': self.name,
            'passed': self.passed,
            'detail': self.detail,
            'seconds': round(self.seconds, 3),
        }

    def __str__(self):
        status = 'PASS' if self.passed else 'FAIL'
        return f"{status} {self.name}: {self.detail}"
