"""Rule based certificates for the symmetric Auslander condition (SAC).

A certificate is a finite proof tree: the root names a ring by a structured
descriptor, each node applies one sufficiency rule and cites the theorem it
rests on, and every premise is either Verified (recomputed here from the
semigroup, ideal and algebra modules, with the raw numbers embedded as
evidence) or Asserted (an explicit hypothesis this toolkit cannot check,
e.g. a Krull dimension bound or an external structure theorem).

Verdicts are Certified or Unknown, never "fails": the rule set consists of
sufficient conditions only, so the absence of a derivation proves nothing.
Unknown nodes carry the trace of attempted rules.

The search is backward chaining over a fixed, per variant rule order, with
memoization keyed by (descriptor, remaining depth) and a stack guard that
fails cyclic derivations.  Everything is deterministic: repeated runs emit
byte identical JSON.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .artinian import quotient_algebra, truncation_algebra
from .errors import (
    MalformedDescriptor,
    SackitError,
    UnknownPremiseKind,
)
from .ideals import SemigroupIdeal, is_ulrich, search_reduction
from .semigroup import NumericalSemigroup

SCHEMA_VERSION = "cert-v1"


# ----------------------------------------------------------------------------
# ring descriptors


@dataclass(frozen=True)
class SemigroupRing:
    """k[[H]] for a numerical semigroup H."""

    generators: tuple[int, ...]

    def __str__(self) -> str:
        return f"sgp({_ints(self.generators)})"


@dataclass(frozen=True)
class Truncation:
    """k[H]/(t^q), the Artinian truncation of k[[H]]."""

    generators: tuple[int, ...]
    q: int

    def __str__(self) -> str:
        return f"trunc(sgp({_ints(self.generators)}),{self.q})"


@dataclass(frozen=True)
class Glued:
    """The semigroup ring of n*H + <m>, presented as a gluing."""

    inner: SemigroupRing
    n: int
    m: int

    def __str__(self) -> str:
        return f"glued({self.inner},{self.n},{self.m})"


@dataclass(frozen=True)
class PowerSeriesExt:
    """R[[T]] over an inner ring R."""

    inner: "RingDescriptor"

    def __str__(self) -> str:
        return f"powser({self.inner})"


@dataclass(frozen=True)
class ParameterPowerQuotient:
    """R/Q^power with Q generated by a regular sequence of length regseq_len."""

    inner: "RingDescriptor"
    power: int
    regseq_len: int

    def __str__(self) -> str:
        return f"qpow({self.inner},{self.power},{self.regseq_len})"


@dataclass(frozen=True)
class UlrichPowerQuotient:
    """R/I^power for a declared Ulrich ideal I of the inner ring."""

    inner: "RingDescriptor"
    ideal_gens: tuple[int, ...]
    power: int

    def __str__(self) -> str:
        return f"upow({self.inner},({_ints(self.ideal_gens)}),{self.power})"


@dataclass(frozen=True)
class AbstractCI:
    """A ring declared to be a complete intersection."""

    def __str__(self) -> str:
        return "ci()"


@dataclass(frozen=True)
class AbstractWithFiniteFlatCover:
    """A ring R together with a module-finite extension S of finite flat
    dimension over R; either slot may be left unspecified."""

    inner: "RingDescriptor | None"
    cover: "RingDescriptor | None"

    def __str__(self) -> str:
        left = "?" if self.inner is None else str(self.inner)
        right = "?" if self.cover is None else str(self.cover)
        return f"ffd({left},{right})"


RingDescriptor = (
    SemigroupRing
    | Truncation
    | Glued
    | PowerSeriesExt
    | ParameterPowerQuotient
    | UlrichPowerQuotient
    | AbstractCI
    | AbstractWithFiniteFlatCover
)


def _ints(xs) -> str:
    return ",".join(str(x) for x in xs)


# ----------------------------------------------------------------------------
# descriptor text form: LL(1) mini-grammar
#
#   ring  := sgp(ints) | trunc(sgp(ints),int) | glued(sgp(ints),int,int)
#          | powser(ring) | qpow(ring,int,int) | upow(ring,(ints),int)
#          | ci() | ffd(ring-or-?,ring-or-?)

_TOKEN = re.compile(r"\s*([a-z]+|\d+|[(),?])")


def _tokenize(text: str):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise MalformedDescriptor(
                f"unexpected character {text[pos]!r} at position {pos}"
            )
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise MalformedDescriptor("unexpected end of descriptor")
        if expected is not None and tok != expected:
            raise MalformedDescriptor(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def int_(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise MalformedDescriptor(f"expected an integer, got {tok!r}")
        return int(tok)

    def int_list(self):
        out = [self.int_()]
        while self.peek() == ",":
            self.take(",")
            out.append(self.int_())
        return tuple(out)

    def sgp(self) -> SemigroupRing:
        self.take("sgp")
        self.take("(")
        gens = self.int_list()
        self.take(")")
        return SemigroupRing(gens)

    def ring(self, allow_hole=False):
        head = self.peek()
        if head == "?":
            if not allow_hole:
                raise MalformedDescriptor("'?' is only valid inside ffd(...)")
            self.take("?")
            return None
        if head == "sgp":
            return self.sgp()
        if head == "trunc":
            self.take("trunc")
            self.take("(")
            inner = self.sgp()
            self.take(",")
            q = self.int_()
            self.take(")")
            return Truncation(inner.generators, q)
        if head == "glued":
            self.take("glued")
            self.take("(")
            inner = self.sgp()
            self.take(",")
            n = self.int_()
            self.take(",")
            m = self.int_()
            self.take(")")
            return Glued(inner, n, m)
        if head == "powser":
            self.take("powser")
            self.take("(")
            inner = self.ring()
            self.take(")")
            return PowerSeriesExt(inner)
        if head == "qpow":
            self.take("qpow")
            self.take("(")
            inner = self.ring()
            self.take(",")
            power = self.int_()
            self.take(",")
            regseq = self.int_()
            self.take(")")
            return ParameterPowerQuotient(inner, power, regseq)
        if head == "upow":
            self.take("upow")
            self.take("(")
            inner = self.ring()
            self.take(",")
            self.take("(")
            gens = self.int_list()
            self.take(")")
            self.take(",")
            power = self.int_()
            self.take(")")
            return UlrichPowerQuotient(inner, gens, power)
        if head == "ci":
            self.take("ci")
            self.take("(")
            self.take(")")
            return AbstractCI()
        if head == "ffd":
            self.take("ffd")
            self.take("(")
            inner = self.ring(allow_hole=True)
            self.take(",")
            cover = self.ring(allow_hole=True)
            self.take(")")
            return AbstractWithFiniteFlatCover(inner, cover)
        raise MalformedDescriptor(f"unknown descriptor head {head!r}")


def parse_ring(text: str) -> RingDescriptor:
    """Parse the descriptor mini-grammar; inverse of str() on descriptors."""
    parser = _Parser(_tokenize(text))
    desc = parser.ring()
    if parser.peek() is not None:
        raise MalformedDescriptor(
            f"trailing input after descriptor: {parser.peek()!r}"
        )
    return desc


def _semigroup(gens) -> NumericalSemigroup:
    try:
        return NumericalSemigroup.from_generators(gens)
    except SackitError as exc:
        raise MalformedDescriptor(f"bad semigroup {_ints(gens)}: {exc}") from exc


def validate_descriptor(desc) -> None:
    """Structural well-formedness; raises MalformedDescriptor.

    Glue preconditions are deliberately not enforced here: they are premises
    that R-GLUE verifies, so a bad gluing yields Unknown, not an error.
    """
    if isinstance(desc, SemigroupRing):
        _semigroup(desc.generators)
    elif isinstance(desc, Truncation):
        H = _semigroup(desc.generators)
        if desc.q <= 0 or not H.contains(desc.q):
            raise MalformedDescriptor(
                f"truncation degree {desc.q} is not a positive member of H"
            )
    elif isinstance(desc, Glued):
        if not isinstance(desc.inner, SemigroupRing):
            raise MalformedDescriptor("glued() needs a semigroup ring inside")
        _semigroup(desc.inner.generators)
        if desc.n < 1 or desc.m < 1:
            raise MalformedDescriptor("gluing parameters must be positive")
    elif isinstance(desc, PowerSeriesExt):
        if desc.inner is None:
            raise MalformedDescriptor("powser() needs an inner ring")
        validate_descriptor(desc.inner)
    elif isinstance(desc, ParameterPowerQuotient):
        if desc.inner is None:
            raise MalformedDescriptor("qpow() needs an inner ring")
        validate_descriptor(desc.inner)
        if desc.power < 1 or desc.regseq_len < 1:
            raise MalformedDescriptor("qpow() exponents must be >= 1")
    elif isinstance(desc, UlrichPowerQuotient):
        if desc.inner is None:
            raise MalformedDescriptor("upow() needs an inner ring")
        validate_descriptor(desc.inner)
        if desc.power < 1:
            raise MalformedDescriptor("upow() power must be >= 1")
        if not desc.ideal_gens:
            raise MalformedDescriptor("upow() needs ideal generators")
        if isinstance(desc.inner, SemigroupRing):
            H = _semigroup(desc.inner.generators)
            for g in desc.ideal_gens:
                if g <= 0 or not H.contains(g):
                    raise MalformedDescriptor(
                        f"ideal generator {g} is not a positive member of H"
                    )
    elif isinstance(desc, AbstractCI):
        pass
    elif isinstance(desc, AbstractWithFiniteFlatCover):
        if desc.inner is not None:
            validate_descriptor(desc.inner)
        if desc.cover is not None:
            validate_descriptor(desc.cover)
    else:
        raise MalformedDescriptor(f"not a ring descriptor: {desc!r}")


# ----------------------------------------------------------------------------
# premises


@dataclass(frozen=True)
class Premise:
    statement: str
    status: str  # "Verified" | "Asserted"
    evidence: tuple | None = None  # sorted (key, value) pairs

    def to_json_dict(self) -> dict:
        d = {"statement": self.statement, "status": self.status}
        if self.evidence is not None:
            d["evidence"] = dict(self.evidence)
        return d


def _verified(statement: str, **evidence) -> Premise:
    return Premise(statement, "Verified", tuple(sorted(evidence.items())))


def _asserted(statement: str) -> Premise:
    return Premise(statement, "Asserted", None)


def _premise_ulrich(semigroup, ideal_gens, q=None):
    ideal = SemigroupIdeal.from_generators(semigroup, ideal_gens)
    if q is None:
        q = search_reduction(ideal)
    if q is None:
        return False, _asserted("no stable reduction found")
    report = is_ulrich(ideal, q)
    premise = _verified(
        f"I=({_ints(ideal.generators)}) with reduction q={q} is an Ulrich "
        f"ideal of H={semigroup}",
        colength=report.colength,
        mu=report.mu,
        layer=report.layer_length,
        q=q,
    )
    return report.is_ulrich, premise


def _premise_min_mult(semigroup):
    ok = semigroup.has_minimal_multiplicity()
    premise = _verified(
        f"H={semigroup} has minimal multiplicity",
        e=semigroup.multiplicity,
        v=semigroup.embedding_dim,
    )
    return ok, premise


def _premise_radical_index_le3(semigroup, q):
    algebra = truncation_algebra(semigroup, q)
    index = algebra.radical_index()
    premise = _verified(
        f"k[H]/(t^{q}) with H={semigroup} has radical index <= 3",
        index=index,
        q=q,
    )
    return index <= 3, premise


def _premise_glue_preconditions(inner_gens, n, m, expected=None):
    inner = _semigroup(inner_gens)
    try:
        glued = inner.glue(n, m)
    except SackitError as exc:
        return False, _asserted(f"gluing rejected: {exc}")
    ok = expected is None or glued.generators == tuple(expected)
    premise = _verified(
        f"{n}*H + <{m}> with H={inner} is a valid gluing",
        result=list(glued.generators),
        n=n,
        m=m,
    )
    return ok, premise


def _premise_gap_symmetric(semigroup):
    ok = semigroup.is_gap_symmetric()
    premise = _verified(
        f"H={semigroup} is gap symmetric, so k[[H]] is Gorenstein "
        f"(external criterion)",
        gap_symmetric=ok,
        frobenius=semigroup.frobenius,
    )
    return ok, premise


def _premise_colength_le2(semigroup, ideal_gens, power=1):
    ideal = SemigroupIdeal.from_generators(semigroup, ideal_gens)
    if power > 1:
        ideal = ideal.power(power)
    col = ideal.colength()
    premise = _verified(
        f"colength of ({_ints(ideal_gens)})^{power} over H={semigroup} "
        f"is <= 2",
        colength=col,
    )
    return col <= 2, premise


def _premise_emb_dim_le1(semigroup=None, ideal_gens=None, power=1, q=None):
    if ideal_gens is not None:
        ideal = SemigroupIdeal.from_generators(semigroup, ideal_gens)
        if power > 1:
            ideal = ideal.power(power)
        algebra = quotient_algebra(ideal)
        v = algebra.embedding_dim()
        what = f"k[H]/({_ints(ideal_gens)})^{power} with H={semigroup}"
    elif q is not None:
        algebra = truncation_algebra(semigroup, q)
        v = algebra.embedding_dim()
        what = f"k[H]/(t^{q}) with H={semigroup}"
    else:
        v = semigroup.embedding_dim
        what = f"k[[H]] with H={semigroup}"
    premise = _verified(f"{what} has embedding dimension <= 1", embdim=v)
    return v <= 1, premise


_PREMISE_DISPATCH = {
    "ulrich": _premise_ulrich,
    "min_mult": _premise_min_mult,
    "radical_index_le3": _premise_radical_index_le3,
    "glue_preconditions": _premise_glue_preconditions,
    "gap_symmetric": _premise_gap_symmetric,
    "colength_le2": _premise_colength_le2,
    "emb_dim_le1": _premise_emb_dim_le1,
}


def verify_premise(kind: str, **kwargs):
    """Check one premise from the closed vocabulary.

    Returns (ok, Premise); the Premise embeds the computed numbers whether
    or not the check passed.  Unknown kinds raise UnknownPremiseKind.
    """
    try:
        fn = _PREMISE_DISPATCH[kind]
    except KeyError:
        raise UnknownPremiseKind(kind) from None
    return fn(**kwargs)


# ----------------------------------------------------------------------------
# citations: the only quotes certificates are allowed to emit


@dataclass(frozen=True)
class Citation:
    where: str
    quote: str

    def to_json_dict(self) -> dict:
        return {"where": self.where, "quote": self.quote}


CITATIONS = {
    "R-CI": Citation(
        "complete-intersections",
        "All complete intersections (not necessarily local) satisfy (SAC)",
    ),
    "R-MODX": Citation(
        "nonzerodivisor-transfer",
        "x ∈ m be a non-zerodivisor on R",
    ),
    "R-POW": Citation(
        "power-series-extension",
        "if and only if R[[T]] satisfies",
    ),
    "R-ULCI": Citation(
        "ulrich-ci-quotient",
        "there exists an Ulrich ideal I such that R/I is a complete "
        "intersection",
    ),
    "R-MIN": Citation(
        "minimal-multiplicity",
        "has minimal multiplicity, hence satisfies (SAC)",
    ),
    "R-RAD3": Citation(
        "radical-cube-zero",
        "has radical cube zero … satisfies (SAC) by",
    ),
    "R-GLUE": Citation(
        "semigroup-gluing",
        "Consequently, if A satisfies (SAC), then so does R",
    ),
    "R-QPOW": Citation(
        "parameter-power-quotient",
        "R/Q^ℓ satisfies (SAC) for all integers 1 ≤ ℓ ≤ n",
    ),
    "R-UPOW": Citation(
        "ulrich-power-quotient",
        "If R/I^ℓ satisfies (SAC) … and μ(I) − dim R > 1, "
        "then R satisfies (SAC)",
    ),
    "R-FFD": Citation(
        "finite-flat-descent",
        "If S satisfies (SAC), then R satisfies (SAC)",
    ),
}


# ----------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Certificate:
    goal: str
    verdict: str  # "Certified" | "Unknown"
    rule: str | None
    citation: Citation | None
    premises: tuple[Premise, ...]
    children: tuple["Certificate", ...]
    attempted: tuple[str, ...] = field(default=())

    def to_json_dict(self, root: bool = True) -> dict:
        d = {
            "goal": self.goal,
            "verdict": self.verdict,
            "rule": self.rule,
            "citation": None if self.citation is None else self.citation.to_json_dict(),
            "premises": [p.to_json_dict() for p in self.premises],
            "children": [c.to_json_dict(root=False) for c in self.children],
        }
        if self.verdict == "Unknown":
            d["attempted"] = list(self.attempted)
        if root:
            d["schema"] = SCHEMA_VERSION
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}goal: {self.goal}", f"{pad}verdict: {self.verdict}"]
        if self.verdict == "Certified":
            cit = self.citation
            lines.append(f'{pad}rule: {self.rule}  [{cit.where}: "{cit.quote}"]')
            for p in self.premises:
                ev = "" if p.evidence is None else f"  {dict(p.evidence)}"
                lines.append(f"{pad}  - [{p.status}] {p.statement}{ev}")
            for child in self.children:
                lines.append(f"{pad}  from:")
                lines.append(child.render(indent + 2))
        else:
            lines.append(f"{pad}attempted: {', '.join(self.attempted) or '(none)'}")
        return "\n".join(lines)


CERT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "definitions": {
        "citation": {
            "type": "object",
            "required": ["where", "quote"],
            "properties": {
                "where": {"type": "string"},
                "quote": {"type": "string"},
            },
            "additionalProperties": False,
        },
        "premise": {
            "type": "object",
            "required": ["statement", "status"],
            "properties": {
                "statement": {"type": "string"},
                "status": {"enum": ["Verified", "Asserted"]},
                "evidence": {"type": "object"},
            },
            "additionalProperties": False,
        },
        "certificate": {
            "type": "object",
            "required": ["goal", "verdict", "rule", "citation", "premises", "children"],
            "properties": {
                "goal": {"type": "string"},
                "verdict": {"enum": ["Certified", "Unknown"]},
                "rule": {"type": ["string", "null"]},
                "citation": {
                    "anyOf": [
                        {"$ref": "#/definitions/citation"},
                        {"type": "null"},
                    ]
                },
                "premises": {
                    "type": "array",
                    "items": {"$ref": "#/definitions/premise"},
                },
                "children": {
                    "type": "array",
                    "items": {"$ref": "#/definitions/certificate"},
                },
                "attempted": {"type": "array", "items": {"type": "string"}},
                "schema": {"const": SCHEMA_VERSION},
            },
            "additionalProperties": False,
        },
    },
    "allOf": [{"$ref": "#/definitions/certificate"}],
    "required": ["schema"],
}


# ----------------------------------------------------------------------------
# the rule engine


class _Search:
    def __init__(self, depth: int):
        self.depth = depth
        self.memo: dict = {}
        self.stack: set = set()


def _certified(desc, rule, premises, children) -> Certificate:
    return Certificate(
        goal=str(desc),
        verdict="Certified",
        rule=rule,
        citation=CITATIONS[rule],
        premises=tuple(premises),
        children=tuple(children),
    )


def _unknown(desc, attempted) -> Certificate:
    return Certificate(
        goal=str(desc),
        verdict="Unknown",
        rule=None,
        citation=None,
        premises=(),
        children=(),
        attempted=tuple(attempted),
    )


def _ulrich_candidates(H: NumericalSemigroup):
    """Deterministic candidate pool: the maximal ideal, then the ideal
    generated by all minimal generators but one, in drop order."""
    gens = H.generators
    yield gens
    if len(gens) > 1:
        for g in gens:
            yield tuple(x for x in gens if x != g)


def _child(desc, depth, search):
    return _certify_inner(desc, depth - 1, search)


# Each rule returns a Certificate or None (rule does not apply / premises
# failed / child Unknown).


def _rule_ci(desc, depth, search):
    if isinstance(desc, AbstractCI):
        return _certified(
            desc, "R-CI", [_asserted("declared complete intersection")], []
        )
    if isinstance(desc, SemigroupRing):
        H = _semigroup(desc.generators)
        ok, pr = verify_premise("emb_dim_le1", semigroup=H)
        if ok:
            return _certified(desc, "R-CI", [pr], [])
        return None
    if isinstance(desc, Truncation):
        H = _semigroup(desc.generators)
        ok, pr = verify_premise("emb_dim_le1", semigroup=H, q=desc.q)
        if ok:
            return _certified(desc, "R-CI", [pr], [])
        return None
    if isinstance(desc, UlrichPowerQuotient):
        if not isinstance(desc.inner, SemigroupRing):
            return None
        H = _semigroup(desc.inner.generators)
        ok, pr = verify_premise(
            "colength_le2", semigroup=H, ideal_gens=desc.ideal_gens,
            power=desc.power,
        )
        if not ok:
            ok, pr = verify_premise(
                "emb_dim_le1", semigroup=H, ideal_gens=desc.ideal_gens,
                power=desc.power,
            )
        if ok:
            return _certified(desc, "R-CI", [pr], [])
        return None
    return None


def _rule_min(desc, depth, search):
    H = _semigroup(desc.generators)
    ok, p_min = verify_premise("min_mult", semigroup=H)
    if not ok:
        return None
    ok, p_ulr = verify_premise(
        "ulrich", semigroup=H, ideal_gens=H.generators, q=H.multiplicity
    )
    if not ok:
        return None
    ok, p_col = verify_premise(
        "colength_le2", semigroup=H, ideal_gens=H.generators
    )
    if not ok:
        return None
    return _certified(desc, "R-MIN", [p_min, p_ulr, p_col], [])


_RAD3_EXTERNAL = _asserted(
    "Artinian local algebras with radical cube zero of this kind satisfy "
    "the symmetric Auslander condition (external structure theorem)"
)


def _rule_rad3(desc, depth, search):
    if isinstance(desc, SemigroupRing):
        H = _semigroup(desc.generators)
        q = H.multiplicity
        ok, p_rad = verify_premise("radical_index_le3", semigroup=H, q=q)
        if not ok:
            return None
        p_nzd = _verified(
            f"t^{q} is a non-zerodivisor on k[[H]], H={H}", q=q
        )
        return _certified(desc, "R-RAD3", [p_rad, _RAD3_EXTERNAL, p_nzd], [])
    if isinstance(desc, Truncation):
        H = _semigroup(desc.generators)
        ok, p_rad = verify_premise("radical_index_le3", semigroup=H, q=desc.q)
        if not ok:
            return None
        return _certified(desc, "R-RAD3", [p_rad, _RAD3_EXTERNAL], [])
    return None


def _rule_ulci(desc, depth, search):
    H = _semigroup(desc.generators)
    for gens in _ulrich_candidates(H):
        ok, p_ulr = verify_premise("ulrich", semigroup=H, ideal_gens=gens)
        if not ok:
            continue
        ok, p_ci = verify_premise("colength_le2", semigroup=H, ideal_gens=gens)
        if not ok:
            ok, p_ci = verify_premise(
                "emb_dim_le1", semigroup=H, ideal_gens=gens
            )
        if not ok:
            continue
        return _certified(desc, "R-ULCI", [p_ulr, p_ci], [])
    return None


def _glue_decompositions(H: NumericalSemigroup):
    """Candidate (inner generators, n, m) with n*inner + <m> = H, n ascending."""
    gens = H.generators
    for n in range(2, max(gens) + 1):
        divisible = tuple(g // n for g in gens if g % n == 0)
        rest = tuple(g for g in gens if g % n != 0)
        if len(rest) == 1 and divisible:
            yield divisible, n, rest[0]


def _rule_glue(desc, depth, search):
    if isinstance(desc, Glued):
        candidates = [(desc.inner.generators, desc.n, desc.m)]
    else:
        H = _semigroup(desc.generators)
        candidates = list(_glue_decompositions(H))
    for inner_gens, n, m in candidates:
        expected = desc.generators if isinstance(desc, SemigroupRing) else None
        try:
            ok, p_glue = verify_premise(
                "glue_preconditions", inner_gens=inner_gens, n=n, m=m,
                expected=expected,
            )
        except MalformedDescriptor:
            continue
        if not ok:
            continue
        child = _child(SemigroupRing(tuple(inner_gens)), depth, search)
        if child.verdict != "Certified":
            continue
        return _certified(desc, "R-GLUE", [p_glue], [child])
    return None


def _rule_upow(desc, depth, search):
    if isinstance(desc, SemigroupRing):
        # upward: some Ulrich ideal I with mu(I) - dim R > 1 whose power
        # quotient is itself certified
        H = _semigroup(desc.generators)
        for gens in _ulrich_candidates(H):
            ok, p_ulr = verify_premise("ulrich", semigroup=H, ideal_gens=gens)
            if not ok:
                continue
            mu = dict(p_ulr.evidence)["mu"]
            if mu - 1 <= 1:
                continue
            p_mu = _verified(
                f"mu(I) - dim R = {mu - 1} > 1 for I=({_ints(gens)})",
                mu=mu,
                dim=1,
            )
            child = _child(UlrichPowerQuotient(desc, tuple(gens), 1), depth, search)
            if child.verdict != "Certified":
                continue
            return _certified(desc, "R-UPOW", [p_ulr, p_mu], [child])
        return None
    if isinstance(desc, UlrichPowerQuotient):
        # downward: R/I Gorenstein and certified, ambient dimension >= 2
        # asserted (no ring of dimension >= 2 is representable here)
        if desc.power < 2 or not isinstance(desc.inner, SemigroupRing):
            return None
        H = _semigroup(desc.inner.generators)
        ok, p_ulr = verify_premise(
            "ulrich", semigroup=H, ideal_gens=desc.ideal_gens
        )
        if not ok:
            return None
        ok, p_gor = verify_premise(
            "colength_le2", semigroup=H, ideal_gens=desc.ideal_gens
        )
        if not ok:
            p_gor = _asserted("R/I is Gorenstein")
        p_dim = _asserted("dim R >= 2")
        child = _child(
            UlrichPowerQuotient(desc.inner, desc.ideal_gens, 1), depth, search
        )
        if child.verdict != "Certified":
            return None
        return _certified(desc, "R-UPOW", [p_ulr, p_gor, p_dim], [child])
    return None


def _rule_modx(desc, depth, search):
    if isinstance(desc, SemigroupRing):
        H = _semigroup(desc.generators)
        q = H.multiplicity
        child_desc = Truncation(desc.generators, q)
    else:
        H = _semigroup(desc.generators)
        q = desc.q
        child_desc = SemigroupRing(desc.generators)
    p_nzd = _verified(
        f"t^{q} is a non-zerodivisor on k[[H]], H={H}", q=q
    )
    child = _child(child_desc, depth, search)
    if child.verdict != "Certified":
        return None
    return _certified(desc, "R-MODX", [p_nzd], [child])


def _rule_pow(desc, depth, search):
    child = _child(desc.inner, depth, search)
    if child.verdict != "Certified":
        return None
    return _certified(desc, "R-POW", [], [child])


def _rule_qpow(desc, depth, search):
    if not 1 <= desc.power <= desc.regseq_len:
        return None
    p_range = _verified(
        f"1 <= l={desc.power} <= n={desc.regseq_len}",
        l=desc.power,
        n=desc.regseq_len,
    )
    if isinstance(desc.inner, SemigroupRing):
        H = _semigroup(desc.inner.generators)
        ok, p_gor = verify_premise("gap_symmetric", semigroup=H)
        if not ok:
            return None
    elif isinstance(desc.inner, AbstractCI):
        p_gor = _asserted("complete intersections are Gorenstein")
    else:
        p_gor = _asserted("the inner ring is Gorenstein")
    child = _child(desc.inner, depth, search)
    if child.verdict != "Certified":
        return None
    return _certified(desc, "R-QPOW", [p_range, p_gor], [child])


def _rule_ffd(desc, depth, search):
    if desc.cover is None:
        return None
    p_fd = _asserted(
        "the cover is module-finite with finite flat dimension over the ring"
    )
    child = _child(desc.cover, depth, search)
    if child.verdict != "Certified":
        return None
    return _certified(desc, "R-FFD", [p_fd], [child])


_RULE_FUNCTIONS = {
    "R-CI": _rule_ci,
    "R-MIN": _rule_min,
    "R-RAD3": _rule_rad3,
    "R-ULCI": _rule_ulci,
    "R-GLUE": _rule_glue,
    "R-UPOW": _rule_upow,
    "R-MODX": _rule_modx,
    "R-POW": _rule_pow,
    "R-QPOW": _rule_qpow,
    "R-FFD": _rule_ffd,
}

# Fixed per-variant rule order: cheap combinatorial rules first.  R-RAD3
# precedes R-ULCI so rings reachable by both take the cheaper radical route.
_VARIANT_RULES = {
    SemigroupRing: ("R-CI", "R-MIN", "R-RAD3", "R-ULCI", "R-GLUE", "R-UPOW", "R-MODX"),
    Truncation: ("R-CI", "R-RAD3", "R-MODX"),
    Glued: ("R-GLUE",),
    PowerSeriesExt: ("R-POW",),
    ParameterPowerQuotient: ("R-QPOW",),
    UlrichPowerQuotient: ("R-CI", "R-UPOW"),
    AbstractCI: ("R-CI",),
    AbstractWithFiniteFlatCover: ("R-FFD",),
}


def _certify_inner(desc, depth, search, rules=None):
    if depth <= 0:
        return _unknown(desc, ("(depth limit)",))
    memo_key = (desc, depth)
    if rules is None and memo_key in search.memo:
        return search.memo[memo_key]
    if desc in search.stack:
        return _unknown(desc, ("(cyclic goal)",))

    order = _VARIANT_RULES.get(type(desc), ())
    if rules is not None:
        order = tuple(r for r in rules if r in order)

    search.stack.add(desc)
    try:
        attempted = []
        result = None
        for rule_id in order:
            attempted.append(rule_id)
            cert = _RULE_FUNCTIONS[rule_id](desc, depth, search)
            if cert is not None:
                result = cert
                break
        if result is None:
            result = _unknown(desc, attempted)
    finally:
        search.stack.discard(desc)

    if rules is None:
        search.memo[memo_key] = result
    return result


def certify(goal, depth: int = 8, root_rules=None) -> Certificate:
    """Backward-chaining certificate search for "(SAC) holds" over ``goal``.

    root_rules restricts the rules tried at the root only (for exhibiting
    independent derivations); children always use the full per-variant
    order.  The result is a deterministic function of (goal, depth,
    root_rules).
    """
    if isinstance(goal, str):
        goal = parse_ring(goal)
    if goal is None:
        raise MalformedDescriptor("no descriptor given")
    validate_descriptor(goal)
    search = _Search(depth)
    return _certify_inner(goal, depth, search, rules=root_rules)
