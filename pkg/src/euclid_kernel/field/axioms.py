"""Instance checks of the Euclidean-field axioms EF0-EF8 over a sample set.

Each axiom is instantiated over all sample tuples of the right arity and
evaluated with the backend's own operations.  ``P(x)`` is ``sign(x) > 0``.
On the Puiseux backends every equality is decided up to truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import PreconditionViolated

AXIOMS = ("EF0", "EF1", "EF2", "EF3", "EF4", "EF5", "EF6", "EF7", "EF8")

STATEMENTS = {
    "EF0": "0 != 1",
    "EF1": "x != 0 -> exists y (x*y = 1)",
    "EF2": "P(x) and P(y) -> P(x+y) and P(x*y)",
    "EF3": "x+y = 0 -> not (P(x) and P(y))",
    "EF4": "x+y = 0 and not P(x) and not P(y) -> x = 0",
    "EF5": "x+y = 0 and not P(y) -> exists z (z*z = x)",
    "EF6": "not not P(x) -> P(x)",
    "EF7": "(forall y, x*y != 1) -> x = 0",
    "EF8": "|a| <= |b|*y -> exists z (a = b*z)",
}


@dataclass
class AxiomResult:
    axiom: str
    holds: bool
    instances: int
    counterexample: tuple | None = None
    note: str = ""

    def to_dict(self, backend) -> dict:
        return {
            "axiom": self.axiom,
            "statement": STATEMENTS[self.axiom],
            "verdict": "holds" if self.holds else "fails",
            "instances": self.instances,
            "counterexample": None
            if self.counterexample is None
            else [backend.to_expr(x) for x in self.counterexample],
            "note": self.note,
        }


@dataclass
class AxiomReport:
    backend: object
    samples: list
    results: dict = field(default_factory=dict)

    def holds(self, axiom: str) -> bool:
        return self.results[axiom].holds

    def failing(self) -> list[str]:
        return [a for a in AXIOMS if not self.results[a].holds]

    def all_hold(self) -> bool:
        return not self.failing()

    def to_dict(self) -> dict:
        B = self.backend
        return {
            "backend": B.name,
            "up_to_truncation": B.up_to_truncation,
            "samples": [B.to_expr(x) for x in self.samples],
            "axioms": [self.results[a].to_dict(B) for a in AXIOMS],
        }

    def to_text(self) -> str:
        B = self.backend
        lines = [f"axiom report on {B.name}" + (" (up to truncation)" if B.up_to_truncation else "")]
        for a in AXIOMS:
            r = self.results[a]
            line = f"  {a:<4} {'holds' if r.holds else 'FAILS':<6} {r.instances:>5} instances  {STATEMENTS[a]}"
            if r.counterexample is not None:
                line += "  witness: " + ", ".join(B.to_expr(x) for x in r.counterexample)
            lines.append(line)
        return "\n".join(lines)


def default_samples(backend) -> list:
    """The sample set used by the CLI and the self-test."""
    if backend.name == "constructible":
        texts = ["0", "1", "-1", "2", "sqrt(2)", "1/2", "-sqrt(3)", "3 - 2*sqrt(2)"]
    elif backend.name == "puiseux":
        texts = ["0", "1", "-1", "2", "t", "1+t", "-t", "t^(1/2)", "1/t", "1 - t"]
    else:
        texts = ["0", "1", "-1", "2", "t", "1+t", "-t", "t^(1/2)", "1 - t", "2*t^2"]
    return [backend.parse(s) for s in texts]


def _P(B, x) -> bool:
    return B.sign(x) > 0


def _check(name, instances, test, note=""):
    count = 0
    for inst in instances:
        count += 1
        if not test(*inst):
            return AxiomResult(name, False, count, tuple(inst), note)
    return AxiomResult(name, True, count, None, note)


def check_ef_axioms(backend, samples=None) -> AxiomReport:
    """Evaluate every instance of EF0-EF8 over ``samples``."""
    B = backend
    if samples is None:
        samples = default_samples(B)
    samples = [B.coerce(x) for x in samples]
    if not samples:
        raise ValueError("samples must be nonempty")
    outside = [x for x in samples if not B.contains(x)]
    if outside:
        raise ValueError(f"sample {B.to_expr(outside[0])} is not in the {B.name} ring")
    pairs = list(itertools.product(samples, repeat=2))
    # Sums vanish only rarely among the pairs, so add the pairs (x, -x).
    negated = [(x, -x) for x in samples]
    report = AxiomReport(B, samples)
    R = report.results

    R["EF0"] = _check("EF0", [()], lambda: not (B.one - B.zero).is_zero())

    def ef1(x):
        if B.is_zero(x):
            return True
        y = B.recip(x)
        return y is not None and B.contains(y) and B.is_zero(x * y - B.one)

    R["EF1"] = _check("EF1", [(x,) for x in samples], ef1)

    def ef2(x, y):
        if not (_P(B, x) and _P(B, y)):
            return True
        return _P(B, x + y) and _P(B, x * y)

    R["EF2"] = _check("EF2", pairs, ef2)

    def zero_sum(x, y):
        return B.is_zero(x + y)

    R["EF3"] = _check(
        "EF3", pairs + negated, lambda x, y: not zero_sum(x, y) or not (_P(B, x) and _P(B, y))
    )

    def ef4(x, y):
        if zero_sum(x, y) and not _P(B, x) and not _P(B, y):
            return B.is_zero(x)
        return True

    R["EF4"] = _check("EF4", pairs + negated, ef4)

    def ef5(x, y):
        if not (zero_sum(x, y) and not _P(B, y)):
            return True
        z = B.sqrt(x)
        return z is not None and B.contains(z) and B.is_zero(z * z - x)

    R["EF5"] = _check("EF5", pairs + negated, ef5)

    def ef6(x):
        # Sign is decided outright, so "not not P" and "P" are one query.
        return not (B.sign(x) > 0) or _P(B, x)

    R["EF6"] = _check(
        "EF6", [(x,) for x in samples], ef6, note="realized by decidable sign"
    )

    def ef7(x):
        # The reciprocal is sought in the full field: in the bounded ring
        # "no y works" must hold at every later stage, not just here.
        y = B.leaf_recip(x)
        return y is not None or B.is_zero(x)

    R["EF7"] = _check(
        "EF7", [(x,) for x in samples], ef7, note="reciprocal sought in the full field"
    )

    def ef8(a, b, y):
        if (abs(b) * y - abs(a)).sign() < 0:
            return True
        try:
            z = B.bounded_quotient(a, b, y)
        except PreconditionViolated:
            return False
        if z is None:
            return B.is_zero(a)
        return B.contains(z) and B.is_zero(a - b * z)

    triples = list(itertools.product(samples, repeat=3))
    R["EF8"] = _check("EF8", triples, ef8)
    return report
