"""Core types for balance-scale weighing schemes.

A non-adaptive scheme assigns every coin a placement vector over
{-1, 0, +1}: one trit per trial, -1 meaning the coin sits on the left
pan, +1 the right pan, 0 off the scale.  Running all trials against a
ground-truth configuration yields an outcome string over {l, b, r},
where 'l' means the left pan sinks, 'b' balanced, 'r' the right pan
sinks.  A heavier culprit therefore reproduces its own vector as the
outcome pattern; a lighter culprit reproduces the negated vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Vector = tuple[int, ...]

# answer / configuration signs
LIGHTER = "lighter"
HEAVIER = "heavier"
UNKNOWN = "unknown"  # culprit found, direction undeterminable (q4=false only)
NONE = "none"        # no counterfeit present

_LETTER_TO_TRIT = {"l": -1, "n": 0, "r": 1}
_TRIT_TO_LETTER = {-1: "l", 0: "n", 1: "r"}
_OUTCOME_TO_TRIT = {"l": -1, "b": 0, "r": 1}
_TRIT_TO_OUTCOME = {-1: "l", 0: "b", 1: "r"}


# ---------- errors ----------

class CoinWeighError(Exception):
    """Base class for every error raised by this package."""


class DecodeError(CoinWeighError):
    pass


class UndecodableOutcome(DecodeError):
    """No admissible configuration produces the observed outcome."""


class AmbiguousOutcome(DecodeError):
    """More than one admissible configuration fits the observed outcome."""


class SchemeFormatError(CoinWeighError):
    """Scheme text is malformed; the message names the offending line."""


class ConstructionError(CoinWeighError):
    pass


class UnsolvableInstance(ConstructionError):
    pass


class AdaptiveOnlyInstance(ConstructionError):
    """Solvable, but not by any fixed (non-adaptive) weighing plan."""


class SearchBudgetExceeded(CoinWeighError):
    """A bounded search ran out of budget before reaching a verdict."""


# ---------- variants ----------

@dataclass(frozen=True)
class Variant:
    """One of the twelve problem flavours.

    q1: the counterfeit's direction (heavier/lighter) is known up front.
    q2: a counterfeit is known to exist.
    q3: an extra coin known to be genuine is available.
    q4: the answer must report the direction, not just the culprit.

    When q1 holds, q4 is vacuously satisfied.
    """

    name: str
    q1: bool
    q2: bool
    q3: bool
    q4: bool


VARIANTS: dict[str, Variant] = {
    "P1": Variant("P1", True, True, True, True),
    "P2": Variant("P2", True, True, False, True),
    "P3": Variant("P3", True, False, True, True),
    "P4": Variant("P4", True, False, False, True),
    "P5": Variant("P5", False, True, True, True),
    "P6": Variant("P6", False, True, True, False),
    "P7": Variant("P7", False, True, False, True),
    "P8": Variant("P8", False, True, False, False),
    "P9": Variant("P9", False, False, True, True),
    "P10": Variant("P10", False, False, True, False),
    "P11": Variant("P11", False, False, False, True),
    "P12": Variant("P12", False, False, False, False),
}


def variant(name: str | Variant) -> Variant:
    if isinstance(name, Variant):
        return name
    try:
        return VARIANTS[name]
    except KeyError:
        raise ValueError(f"unknown variant {name!r} (expected P1..P12)") from None


# ---------- vector algebra ----------

def negate(v: Vector) -> Vector:
    return tuple(-t for t in v)


def concat(v: Vector, w: Vector) -> Vector:
    return v + w


def vector_sum(vectors) -> Vector:
    """Entrywise integer sum (not clamped to trits)."""
    vectors = list(vectors)
    if not vectors:
        return ()
    return tuple(sum(col) for col in zip(*vectors))


def all_vectors(k: int) -> list[Vector]:
    """All of {-1,0,+1}^k in lexicographic order with -1 < 0 < +1."""
    return list(itertools.product((-1, 0, 1), repeat=k))


def zero_vector(k: int) -> Vector:
    return (0,) * k


def parse_lnr(text: str) -> Vector:
    """Parse an l/n/r placement string into a trit vector."""
    out = []
    for ch in text:
        if ch not in _LETTER_TO_TRIT:
            raise SchemeFormatError(f"bad placement character {ch!r} in {text!r}")
        out.append(_LETTER_TO_TRIT[ch])
    return tuple(out)


def format_lnr(v: Vector) -> str:
    return "".join(_TRIT_TO_LETTER[t] for t in v)


# ---------- configurations, answers, schemes ----------

@dataclass(frozen=True)
class Configuration:
    """Ground truth of an instance: the culprit (0 = no counterfeit) and
    its weight sign."""

    culprit: int
    sign: str

    def __post_init__(self):
        if self.culprit < 0:
            raise ValueError("culprit must be >= 0")
        if self.culprit == 0:
            if self.sign != NONE:
                raise ValueError("culprit 0 requires sign 'none'")
        elif self.sign not in (LIGHTER, HEAVIER):
            raise ValueError(f"bad sign {self.sign!r} for culprit {self.culprit}")


@dataclass(frozen=True)
class Answer:
    culprit: int
    sign: str


@dataclass(frozen=True)
class Scheme:
    """A fixed weighing plan: coin i (1-based) gets coin_vectors[i-1].

    The genuine vector is present exactly when the variant grants an
    extra genuine coin; that coin weighs in under the reserved id n+1
    and is never a decode suspect.
    """

    variant: Variant
    n: int
    k: int
    coin_vectors: tuple[Vector, ...]
    genuine_vector: Vector | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", variant(self.variant))
        object.__setattr__(self, "coin_vectors",
                           tuple(tuple(v) for v in self.coin_vectors))
        if self.genuine_vector is not None:
            object.__setattr__(self, "genuine_vector", tuple(self.genuine_vector))
        if self.n != len(self.coin_vectors):
            raise ValueError(f"n={self.n} but {len(self.coin_vectors)} coin vectors")
        vecs = self.coin_vectors
        if self.genuine_vector is not None:
            vecs = vecs + (self.genuine_vector,)
        for v in vecs:
            if len(v) != self.k:
                raise ValueError(f"vector {v!r} has length {len(v)}, want k={self.k}")
            if any(t not in (-1, 0, 1) for t in v):
                raise ValueError(f"vector {v!r} holds a non-trit entry")
        if (self.genuine_vector is not None) != self.variant.q3:
            raise ValueError(
                f"{self.variant.name} requires genuine vector "
                f"{'present' if self.variant.q3 else 'absent'}")

    def all_vectors_with_genuine(self) -> tuple[Vector, ...]:
        if self.genuine_vector is None:
            return self.coin_vectors
        return self.coin_vectors + (self.genuine_vector,)


def trial_pans(scheme: Scheme, j: int) -> tuple[list[int], list[int]]:
    """1-based coin ids on the (left, right) pans of trial j (1-based).

    The genuine coin, when placed, shows up as id n+1.
    """
    if not 1 <= j <= scheme.k:
        raise ValueError(f"trial {j} out of range 1..{scheme.k}")
    left, right = [], []
    for i, v in enumerate(scheme.all_vectors_with_genuine(), start=1):
        if v[j - 1] == -1:
            left.append(i)
        elif v[j - 1] == 1:
            right.append(i)
    return left, right


# ---------- simulation and decoding ----------

def outcome_for_heavier(v: Vector) -> str:
    """Outcome string observed when the coin placed per v is the heavy fake."""
    return "".join(_TRIT_TO_OUTCOME[t] for t in v)


def simulate(scheme: Scheme, config: Configuration) -> str:
    """Run every trial at once; only the culprit's position matters since
    all other coins cancel out."""
    if config.culprit > scheme.n:
        raise ValueError(f"culprit {config.culprit} out of range for n={scheme.n}")
    if config.culprit == 0:
        if scheme.variant.q2:
            raise ValueError(
                f"culprit 0 inadmissible for {scheme.variant.name} (counterfeit known to exist)")
        return "b" * scheme.k
    v = scheme.coin_vectors[config.culprit - 1]
    if config.sign == LIGHTER:
        v = negate(v)
    return outcome_for_heavier(v)


def outcome_to_trits(outcome: str, k: int) -> Vector:
    if len(outcome) != k or any(c not in "lbr" for c in outcome):
        raise ValueError(f"outcome {outcome!r} is not a length-{k} string over 'lbr'")
    return tuple(_OUTCOME_TO_TRIT[c] for c in outcome)


def decode_candidates(scheme: Scheme, outcome: str) -> list[Answer]:
    """Every admissible explanation of an outcome, before uniqueness checks.

    For q1 variants the known comparison is taken as "heavier" (lighter
    instances follow by mirroring every vector), so only heavier
    candidates are collected.  For q4=false variants a coin matching
    with both signs collapses into a single unknown-sign answer.
    """
    t = outcome_to_trits(outcome, scheme.k)
    var = scheme.variant
    zero = zero_vector(scheme.k)
    candidates: list[Answer] = []
    for i, v in enumerate(scheme.coin_vectors, start=1):
        if var.q1:
            if v == t:
                candidates.append(Answer(i, HEAVIER))
            continue
        heavy = v == t
        light = negate(v) == t
        if heavy and light:
            # only possible when v = 0^k (or k = 0): the coin is caught
            # but its direction stays invisible
            if var.q4:
                candidates.append(Answer(i, HEAVIER))
                candidates.append(Answer(i, LIGHTER))
            else:
                candidates.append(Answer(i, UNKNOWN))
        elif heavy:
            candidates.append(Answer(i, HEAVIER))
        elif light:
            candidates.append(Answer(i, LIGHTER))
    if not var.q2 and t == zero:
        candidates.append(Answer(0, NONE))
    return candidates


def decode(scheme: Scheme, outcome: str) -> Answer:
    """Map an outcome to the unique admissible explanation, or raise."""
    candidates = decode_candidates(scheme, outcome)
    if not candidates:
        raise UndecodableOutcome(
            f"outcome {outcome!r} fits no admissible configuration")
    if len(candidates) > 1:
        raise AmbiguousOutcome(
            f"outcome {outcome!r} fits several configurations: "
            + ", ".join(f"(coin {a.culprit}, {a.sign})" for a in candidates))
    return candidates[0]


# ---------- scheme text format ----------
#
# line 1: variant=<P1..P12> n=<int> k=<int> genuine=<index|none>
# then one l/n/r string per vector, coins in index order, genuine last.

def format_scheme(scheme: Scheme) -> str:
    g = "none" if scheme.genuine_vector is None else str(scheme.n + 1)
    lines = [f"variant={scheme.variant.name} n={scheme.n} k={scheme.k} genuine={g}"]
    for v in scheme.coin_vectors:
        lines.append(format_lnr(v))
    if scheme.genuine_vector is not None:
        lines.append(format_lnr(scheme.genuine_vector))
    return "\n".join(lines) + "\n"


def parse_scheme(text: str) -> Scheme:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise SchemeFormatError("line 1: missing header")
    fields = {}
    for part in lines[0].split():
        key, eq, val = part.partition("=")
        if not eq or key in fields:
            raise SchemeFormatError(f"line 1: bad header field {part!r}")
        fields[key] = val
    if set(fields) != {"variant", "n", "k", "genuine"}:
        raise SchemeFormatError(
            f"line 1: header must set variant/n/k/genuine, got {sorted(fields)}")
    if fields["variant"] not in VARIANTS:
        raise SchemeFormatError(f"line 1: unknown variant {fields['variant']!r}")
    var = VARIANTS[fields["variant"]]
    try:
        n = int(fields["n"])
        k = int(fields["k"])
    except ValueError:
        raise SchemeFormatError("line 1: n and k must be integers") from None
    if n < 0 or k < 0:
        raise SchemeFormatError("line 1: n and k must be non-negative")
    g = fields["genuine"]
    if g == "none":
        with_genuine = False
    elif g == str(n + 1):
        with_genuine = True
    else:
        raise SchemeFormatError(
            f"line 1: genuine must be 'none' or {n + 1}, got {g!r}")
    body = lines[1:]
    expected = n + (1 if with_genuine else 0)
    if len(body) != expected:
        raise SchemeFormatError(
            f"expected {expected} vector lines after the header, found {len(body)}")
    vecs = []
    for lineno, line in enumerate(body, start=2):
        try:
            v = parse_lnr(line)
        except SchemeFormatError as e:
            raise SchemeFormatError(f"line {lineno}: {e}") from None
        if len(v) != k:
            raise SchemeFormatError(
                f"line {lineno}: vector length {len(v)}, want k={k}")
        vecs.append(v)
    genuine = vecs.pop() if with_genuine else None
    try:
        return Scheme(var, n, k, tuple(vecs), genuine)
    except ValueError as e:
        raise SchemeFormatError(str(e)) from None
