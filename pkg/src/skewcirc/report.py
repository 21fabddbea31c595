"""Structured pass/fail reports for identity and theorem checks.

Every verification routine returns a :class:`Report`: a named list of checks,
each carrying a witness string when it failed.  Reports nest, serialize to
JSON and render as text for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    skipped: str = ""

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail if not passed else ""))
        return bool(passed)

    def extend(self, other):
        self.checks.append(other)

    @property
    def ok(self):
        return all(c.ok if isinstance(c, Report) else c.passed for c in self.checks)

    def counts(self):
        passed = failed = 0
        for c in self.checks:
            if isinstance(c, Report):
                p, f = c.counts()
                passed += p
                failed += f
            elif c.passed:
                passed += 1
            else:
                failed += 1
        return passed, failed

    def failures(self):
        out = []
        for c in self.checks:
            if isinstance(c, Report):
                out.extend(f"{self.title}/{line}" for line in c.failures())
            elif not c.passed:
                out.append(f"{c.name}" + (f": {c.detail}" if c.detail else ""))
        return out

    def to_json(self):
        body = []
        for c in self.checks:
            if isinstance(c, Report):
                body.append(c.to_json())
            else:
                entry = {"name": c.name, "passed": c.passed}
                if c.detail:
                    entry["detail"] = c.detail
                body.append(entry)
        out = {"title": self.title, "ok": self.ok, "checks": body}
        if self.skipped:
            out["skipped"] = self.skipped
        return out

    def lines(self, indent=0):
        pad = "  " * indent
        passed, failed = self.counts()
        if self.skipped:
            yield f"{pad}{self.title}: SKIPPED ({self.skipped})"
            return
        status = "ok" if failed == 0 else "FAIL"
        yield f"{pad}{self.title}: {status} ({passed} passed, {failed} failed)"
        for c in self.checks:
            if isinstance(c, Report):
                yield from c.lines(indent + 1)
            elif not c.passed:
                detail = f" -- {c.detail}" if c.detail else ""
                yield f"{pad}  FAIL {c.name}{detail}"

    def __str__(self):
        return "\n".join(self.lines())
