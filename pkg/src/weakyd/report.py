"""Named checks with counterexample witnesses, and their aggregation."""

import json
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .exactlin import QQ


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict = None  # {"index": [...], "lhs": [...], "rhs": [...]} or {"detail": str}

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["name"], bool(d["passed"]), d.get("witness"))


def _fmt_vec(v, F):
    return [F.fmt(x) for x in np.asarray(v, dtype=object).reshape(-1)]


def compare(name, lhs, rhs, nvars, F=QQ):
    """Compare two tensors whose first ``nvars`` axes range over variables.

    The witness is the first variable tuple (C order) on which the remaining
    output slices differ, together with both slices.
    """
    lhs = np.asarray(lhs, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    if lhs.shape != rhs.shape:
        return Check(name, False, {"detail": "shape %s != %s" % (lhs.shape, rhs.shape)})
    if lhs.size == 0:
        return Check(name, True)
    vshape = lhs.shape[:nvars]
    n = int(np.prod(vshape)) if vshape else 1
    L = lhs.reshape(n, -1)
    R = rhs.reshape(n, -1)
    for k in range(n):
        a, b = L[k], R[k]
        if any(x != y for x, y in zip(a, b)):
            idx = [int(i) for i in np.unravel_index(k, vshape)] if vshape else []
            return Check(name, False, {"index": idx, "lhs": _fmt_vec(a, F),
                                       "rhs": _fmt_vec(b, F)})
    return Check(name, True)


def _entries(T):
    T = np.asarray(T, dtype=object)
    return [(idx, T[idx]) for idx in zip(*np.nonzero(np.array([x != 0 for x in T.flat])
                                                    .reshape(T.shape)))]


def associativity(name, mult, F=QQ):
    """(e_a e_b) e_c = e_a (e_b e_c), summing only over nonzero structure constants.

    Same witness format as ``compare`` with the triple (a, b, c) as variables.
    """
    nz = _entries(mult)
    by_first, by_second = defaultdict(list), defaultdict(list)
    for (i, j, k), v in nz:
        by_first[i].append((j, k, v))
        by_second[j].append((i, k, v))
    lhs, rhs = defaultdict(int), defaultdict(int)
    for (a, b, z), v in nz:
        for c, x, w in by_first[z]:
            lhs[(a, b, c, x)] = lhs[(a, b, c, x)] + v * w
    for (b, c, z), v in nz:
        for a, x, w in by_second[z]:
            rhs[(a, b, c, x)] = rhs[(a, b, c, x)] + w * v
    bad = sorted(k[:3] for k in set(lhs) | set(rhs) if lhs.get(k, 0) != rhs.get(k, 0))
    if not bad:
        return Check(name, True)
    a, b, c = (int(t) for t in bad[0])
    n = np.shape(mult)[2]
    return Check(name, False, {"index": [a, b, c],
                               "lhs": [F.fmt(lhs.get((a, b, c, x), 0))
                                       for x in range(n)],
                               "rhs": [F.fmt(rhs.get((a, b, c, x), 0))
                                       for x in range(n)]})


def holds(name, ok, detail=None):
    """A check decided elsewhere; ``detail`` explains a failure."""
    if ok:
        return Check(name, True)
    return Check(name, False, {"detail": detail or "condition failed"})


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, other, prefix=None):
        for c in other.checks:
            name = "%s/%s" % (prefix, c.name) if prefix else c.name
            self.checks.append(Check(name, c.passed, c.witness))
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def to_dict(self):
        n_pass = sum(c.passed for c in self.checks)
        return {"suite": self.suite,
                "summary": {"total": len(self.checks), "passed": n_pass,
                            "failed": len(self.checks) - n_pass},
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_dict(cls, d):
        return cls(d["suite"], [Check.from_dict(c) for c in d["checks"]])

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def summary(self):
        lines = []
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = "%s %s" % (mark, c.name)
            if not c.passed and c.witness:
                line += "  " + json.dumps(c.witness, sort_keys=True)
            lines.append(line)
        d = self.to_dict()["summary"]
        lines.append("%s: %d checks, %d passed, %d failed"
                     % (self.suite, d["total"], d["passed"], d["failed"]))
        return "\n".join(lines) + "\n"
