"""Monadic operator pairs (exists, forall) on a finite two-implication algebra.

A pair is monadic when M1-M5 hold; the bounded-commutative mode adds
M6/M7 and the hoop mode adds M6 only.  `enumerate_mop` lists every
monadic pair in a canonical order; the tau/sigma builders construct a
pair from a single interior-like or closure-like map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import FiniteAlgebra, UnaryMap
from .classify import (ClassificationReport, DerivedOps, Verdict, classify,
                       HOLDS)

PLAIN = "plain"
BOUNDED_COMMUTATIVE = "bc"
HOOP = "hoop"

_MODE_ALIASES = {
    "plain": PLAIN,
    "bc": BOUNDED_COMMUTATIVE,
    "bounded_commutative": BOUNDED_COMMUTATIVE,
    "hoop": HOOP,
}


class ModeUnavailable(ValueError):
    """Requested check mode needs derived operations the algebra lacks."""


class NotBCK(ValueError):
    pass


class NotBoundedCommutative(ValueError):
    pass


class PreconditionUnmet(ValueError):
    pass


class UConditionFailed(ValueError):
    def __init__(self, k: int, witness: tuple[int, ...]):
        super().__init__(f"condition U{k} fails at {witness}")
        self.k = k
        self.witness = witness


class EConditionFailed(ValueError):
    def __init__(self, k: int, witness: tuple[int, ...]):
        super().__init__(f"condition E{k} fails at {witness}")
        self.k = k
        self.witness = witness


@dataclass(frozen=True)
class MonadicPair:
    exists: UnaryMap
    forall: UnaryMap

    def sort_key(self):
        return (self.forall.images, self.exists.images)

    def is_identity(self) -> bool:
        return self.exists.is_identity() and self.forall.is_identity()


@dataclass(frozen=True)
class MonadicCheckReport:
    mode: str
    axioms: dict[str, Verdict]

    @property
    def ok(self) -> bool:
        return all(v.status == HOLDS for v in self.axioms.values())

    def first_failure(self) -> Verdict | None:
        for v in self.axioms.values():
            if v.status != HOLDS:
                return v
        return None

    def to_json(self, alg: FiniteAlgebra | None = None) -> dict:
        return {"mode": self.mode, "ok": self.ok,
                "axioms": {k: v.to_json(alg) for k, v in self.axioms.items()}}


def _normalize_mode(mode: str) -> str:
    try:
        return _MODE_ALIASES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None


def check_monadic(alg: FiniteAlgebra, pair: MonadicPair, mode: str = PLAIN,
                  ops: DerivedOps | None = None) -> MonadicCheckReport:
    """Check M1-M5 (plus M6/M7 per mode) over all element pairs."""
    mode = _normalize_mode(mode)
    n, one = alg.size, alg.one
    arr, sq = alg.arrow, alg.squig
    E, F = pair.exists.images, pair.forall.images
    axioms: dict[str, Verdict] = {}

    def scan(name, preds):
        # preds: list of (variant, predicate) checked per tuple, lexicographically
        for tup in product(range(n), repeat=preds[0][1].__code__.co_argcount):
            for variant, pred in preds:
                if not pred(*tup):
                    axioms[name] = Verdict.fails(variant, tup)
                    return
        axioms[name] = Verdict.holds(name)

    scan("M1", [("M1(arrow)", lambda x: arr[x][E[x]] == one),
                ("M1(squig)", lambda x: sq[x][E[x]] == one)])
    scan("M2", [("M2(arrow)", lambda x: arr[F[x]][x] == one),
                ("M2(squig)", lambda x: sq[F[x]][x] == one)])
    scan("M3", [("M3(arrow)", lambda x, y: F[arr[x][E[y]]] == arr[E[x]][E[y]]),
                ("M3(squig)", lambda x, y: F[sq[x][E[y]]] == sq[E[x]][E[y]])])
    scan("M4", [("M4(arrow)", lambda x, y: F[arr[E[x]][y]] == arr[E[x]][F[y]]),
                ("M4(squig)", lambda x, y: F[sq[E[x]][y]] == sq[E[x]][F[y]])])
    scan("M5", [("M5", lambda x: E[F[x]] == F[x])])

    if mode in (BOUNDED_COMMUTATIVE, HOOP):
        if ops is None:
            _, ops = classify(alg)
        od = ops.odot
        if od is None:
            raise ModeUnavailable(f"mode {mode!r} needs the pseudo-product table")
        scan("M6", [("M6", lambda x: F[od[x][x]] == od[F[x]][F[x]])])
    if mode == BOUNDED_COMMUTATIVE:
        op = ops.oplus
        if op is None:
            raise ModeUnavailable("bounded-commutative mode needs the oplus table")
        scan("M7", [("M7", lambda x: F[op[x][x]] == op[F[x]][F[x]])])

    return MonadicCheckReport(mode, axioms)


def is_monadic(alg: FiniteAlgebra, pair: MonadicPair, mode: str = PLAIN,
               ops: DerivedOps | None = None) -> bool:
    return check_monadic(alg, pair, mode, ops).ok


def enumerate_mop(alg: FiniteAlgebra, mode: str = PLAIN,
                  ops: DerivedOps | None = None,
                  unpruned: bool = False) -> list[MonadicPair]:
    """All monadic pairs, sorted by (forall images, exists images).

    The pruned enumeration restricts candidates to maps that are
    increasing/decreasing, idempotent and fix 1 -- all consequences of
    M1/M2/M5, so no valid pair is lost.  `unpruned` runs the raw scan
    over every pair of self-maps instead (self-check; feasible for
    small carriers only).
    """
    mode = _normalize_mode(mode)
    if mode != PLAIN and ops is None:
        _, ops = classify(alg)
    n, one = alg.size, alg.one
    arr, sq = alg.arrow, alg.squig

    found: list[MonadicPair] = []
    if unpruned:
        # Exhaustive O(n^{2n}) scan.  M1 depends only on the exists
        # candidate, so it is hoisted out of the inner loop; every
        # (exists, forall) pair is still decided exactly.
        for E in product(range(n), repeat=n):
            if not all(arr[x][E[x]] == one and sq[x][E[x]] == one for x in range(n)):
                continue
            em = UnaryMap(E)
            for F in product(range(n), repeat=n):
                pair = MonadicPair(em, UnaryMap(F))
                if check_monadic(alg, pair, mode, ops).ok:
                    found.append(pair)
        found.sort(key=MonadicPair.sort_key)
        return found

    up = [[y for y in range(n) if arr[x][y] == one and sq[x][y] == one]
          for x in range(n)]
    down = [[y for y in range(n) if arr[y][x] == one and sq[y][x] == one]
            for x in range(n)]
    up[one] = [one]    # exists(1) = 1
    down_choices = list(down)
    down_choices[one] = [one]   # forall(1) = 1

    def idempotent(m):
        return all(m[m[x]] == m[x] for x in range(n))

    exist_cands = [UnaryMap(E) for E in product(*up) if idempotent(E)]
    forall_cands = [UnaryMap(F) for F in product(*down_choices) if idempotent(F)]
    for em in exist_cands:
        for fm in forall_cands:
            pair = MonadicPair(em, fm)
            if check_monadic(alg, pair, mode, ops).ok:
                found.append(pair)
    found.sort(key=MonadicPair.sort_key)
    return found


def fixed_set(alg: FiniteAlgebra, pair: MonadicPair):
    """(fixed elements, image of forall, kernel of forall) as frozensets."""
    n = alg.size
    fixed_e = frozenset(x for x in range(n) if pair.exists(x) == x)
    fixed_f = frozenset(x for x in range(n) if pair.forall(x) == x)
    if fixed_e != fixed_f:
        raise ValueError("fixed sets of exists and forall disagree; pair is not monadic")
    image = frozenset(pair.forall(x) for x in range(n))
    kernel = frozenset(x for x in range(n) if pair.forall(x) == alg.one)
    return fixed_e, image, kernel


def residuation_check(alg: FiniteAlgebra, pair: MonadicPair,
                      report: ClassificationReport | None = None) -> Verdict:
    """exists(x) <= y iff x <= forall(y), over all pairs.  Needs (T)."""
    if report is None:
        report, _ = classify(alg)
    if not report.holds("condition_T"):
        raise PreconditionUnmet("residuation check needs a transitive order")
    for x, y in product(range(alg.size), repeat=2):
        left = alg.arrow[pair.exists(x)][y] == alg.one
        right = alg.arrow[x][pair.forall(y)] == alg.one
        if left != right:
            return Verdict.fails("residuated_pair", (x, y))
    return Verdict.holds("residuated_pair")


def _require_bounded_good(alg, report, ops, what):
    if not report.holds("bounded") or ops.neg_minus is None:
        raise PreconditionUnmet(f"{what} needs a bounded algebra")
    if not report.holds("good"):
        raise PreconditionUnmet(f"{what} needs a good algebra")


def build_from_tau(alg: FiniteAlgebra, tau: UnaryMap,
                   report: ClassificationReport | None = None,
                   ops: DerivedOps | None = None) -> MonadicPair:
    """Pair with forall = tau, exists x = (tau x-)~, after verifying U1-U6."""
    if report is None or ops is None:
        report, ops = classify(alg)
    _require_bounded_good(alg, report, ops, "build_from_tau")
    if ops.oplus is None:
        raise PreconditionUnmet("build_from_tau needs the oplus table")
    n, one = alg.size, alg.one
    t, nm, ns, op = tau.images, ops.neg_minus, ops.neg_sim, ops.oplus

    for x in range(n):                                    # U1
        if alg.arrow[t[x]][x] != one:
            raise UConditionFailed(1, (x,))
    for x in range(n):                                    # U2
        if ns[t[nm[x]]] != nm[t[ns[x]]]:
            raise UConditionFailed(2, (x,))
    for x, y in product(range(n), repeat=2):              # U3
        if t[op[x][nm[t[y]]]] != op[t[x]][nm[t[y]]]:
            raise UConditionFailed(3, (x, y))
        if t[op[ns[t[x]]][y]] != op[ns[t[x]]][t[y]]:
            raise UConditionFailed(3, (x, y))
    for x, y in product(range(n), repeat=2):              # U4
        if not (t[op[x][t[y]]] == t[op[t[x]][y]] == op[t[x]][t[y]]):
            raise UConditionFailed(4, (x, y))
    for x in range(n):                                    # U5
        if t[ns[op[nm[x]][nm[x]]]] != ns[op[nm[t[x]]][nm[t[x]]]]:
            raise UConditionFailed(5, (x,))
        if t[nm[op[ns[x]][ns[x]]]] != nm[op[ns[t[x]]][ns[t[x]]]]:
            raise UConditionFailed(5, (x,))
    # U6 is exactly M7, which belongs to the commutative theory; on a
    # non-commutative (e.g. merely involutive) algebra it can fail even
    # for maps the construction is meant for, so it is only enforced
    # when the algebra is commutative.
    if report.holds("commutative"):
        for x in range(n):                                # U6
            if t[op[x][x]] != op[t[x]][t[x]]:
                raise UConditionFailed(6, (x,))

    exists = tuple(ns[t[nm[x]]] for x in range(n))
    other = tuple(nm[t[ns[x]]] for x in range(n))
    assert exists == other, "the two defining formulas for exists disagree despite U2"
    pair = MonadicPair(UnaryMap(exists), tau)
    _validate_built(alg, pair, report, ops, "build_from_tau")
    return pair


def build_from_sigma(alg: FiniteAlgebra, sigma: UnaryMap,
                     report: ClassificationReport | None = None,
                     ops: DerivedOps | None = None) -> MonadicPair:
    """Pair with exists = sigma, forall x = (sigma x-)~, after verifying E1-E6."""
    if report is None or ops is None:
        report, ops = classify(alg)
    _require_bounded_good(alg, report, ops, "build_from_sigma")
    if ops.odot is None:
        raise PreconditionUnmet("build_from_sigma needs the pseudo-product table")
    n, one = alg.size, alg.one
    s, nm, ns, od = sigma.images, ops.neg_minus, ops.neg_sim, ops.odot

    for x in range(n):                                    # E1
        if alg.arrow[x][s[x]] != one:
            raise EConditionFailed(1, (x,))
    for x in range(n):                                    # E2
        if ns[s[nm[x]]] != nm[s[ns[x]]]:
            raise EConditionFailed(2, (x,))
    for x, y in product(range(n), repeat=2):              # E3
        if s[od[x][ns[s[y]]]] != od[s[x]][ns[s[y]]]:
            raise EConditionFailed(3, (x, y))
        if s[od[nm[s[x]]][y]] != od[nm[s[x]]][s[y]]:
            raise EConditionFailed(3, (x, y))
    for x, y in product(range(n), repeat=2):              # E4
        if not (s[od[x][s[y]]] == s[od[s[x]][y]] == od[s[x]][s[y]]):
            raise EConditionFailed(4, (x, y))
    for x in range(n):                                    # E5
        if s[ns[od[nm[x]][nm[x]]]] != ns[od[nm[s[x]]][nm[s[x]]]]:
            raise EConditionFailed(5, (x,))
        if s[nm[od[ns[x]][ns[x]]]] != nm[od[ns[s[x]]][ns[s[x]]]]:
            raise EConditionFailed(5, (x,))
    # E6 mirrors U6/M7: enforced only on commutative algebras (see
    # build_from_tau).
    if report.holds("commutative"):
        for x in range(n):                                # E6
            if s[od[x][x]] != od[s[x]][s[x]]:
                raise EConditionFailed(6, (x,))

    forall = tuple(ns[s[nm[x]]] for x in range(n))
    other = tuple(nm[s[ns[x]]] for x in range(n))
    assert forall == other, "the two defining formulas for forall disagree despite E2"
    pair = MonadicPair(sigma, UnaryMap(forall))
    _validate_built(alg, pair, report, ops, "build_from_sigma")
    return pair


def _validate_built(alg, pair, report, ops, what):
    # the construction theorems promise a monadic pair; verify, never
    # assume.  M7 is checked only on commutative algebras, matching the
    # U6/E6 gating above.
    if report.holds("commutative") and ops.oplus is not None and ops.odot is not None:
        mode = BOUNDED_COMMUTATIVE
    elif ops.odot is not None:
        mode = HOOP
    else:
        mode = PLAIN
    chk = check_monadic(alg, pair, mode, ops)
    if not chk.ok:
        bad = chk.first_failure()
        raise AssertionError(f"{what} produced a non-monadic pair: "
                             f"{bad.name} fails at {bad.witness}")


def dual_quantifier(alg: FiniteAlgebra, direction: str, m: UnaryMap,
                    report: ClassificationReport | None = None,
                    ops: DerivedOps | None = None) -> UnaryMap:
    """exists x = (forall x-)~ (direction='exists') or the converse
    ('forall').  Needs a bounded involutive algebra; an involution."""
    if report is None or ops is None:
        report, ops = classify(alg)
    if not report.holds("involutive"):
        raise PreconditionUnmet("dual_quantifier needs a bounded involutive algebra")
    if direction not in ("exists", "forall"):
        raise ValueError("direction must be 'exists' or 'forall'")
    nm, ns = ops.neg_minus, ops.neg_sim
    return UnaryMap(tuple(ns[m(nm[x])] for x in range(alg.size)))


@dataclass(frozen=True)
class CompositionResult:
    pair: MonadicPair | None       # validated composition, when it commutes
    commute: bool
    # pointwise comparisons; None when <= is not a partial order, where
    # the comparison is not meaningful
    forall_le: bool | None         # forall1 <= forall2 pointwise
    exists_le: bool | None         # exists1 <= exists2 pointwise


def compose_pairs(alg: FiniteAlgebra, p1: MonadicPair, p2: MonadicPair,
                  report: ClassificationReport | None = None) -> CompositionResult:
    """Compose two monadic pairs.

    Returns the validated pair (exists1 exists2, forall1 forall2) iff
    the compositions commute; also reports the pointwise ordering and
    asserts its composition characterizations.  The theorems are stated
    for pseudo BCK-algebras, but their arguments only use transitivity
    of the induced order, and the source example applies them to a
    non-BCK transitive algebra -- so that is the precondition enforced.
    """
    if report is None:
        report, _ = classify(alg)
    if not report.holds("condition_T"):
        raise NotBCK("compose_pairs needs a transitive induced order")
    one = alg.one
    e12 = p1.exists.compose(p2.exists)
    e21 = p2.exists.compose(p1.exists)
    f12 = p1.forall.compose(p2.forall)
    f21 = p2.forall.compose(p1.forall)
    commute = e12 == e21 and f12 == f21

    le = lambda a, b: all(alg.arrow[a(x)][b(x)] == one for x in alg.elements())
    # forall1 forall2 = forall1 forces forall1 <= forall2 even on a mere
    # preorder (forall1 x = forall1(forall2 x) <= forall2 x by M2)
    assert not (f12 == p1.forall) or le(p1.forall, p2.forall), \
        "forall ordering characterization (forward)"
    assert not (e12 == p1.exists) or le(p2.exists, p1.exists), \
        "exists ordering characterization (forward)"
    if report.holds("poset"):
        forall_le = le(p1.forall, p2.forall)
        exists_le = le(p1.exists, p2.exists)
        # full equivalences need antisymmetry of <=
        assert forall_le == (f12 == p1.forall), "forall ordering characterization"
        assert le(p2.exists, p1.exists) == (e12 == p1.exists), "exists ordering characterization"
    else:
        forall_le = exists_le = None

    pair = None
    if commute:
        pair = MonadicPair(e12, f12)
        if not check_monadic(alg, pair).ok:
            raise AssertionError("commuting composition failed monadic validation")
    return CompositionResult(pair, commute, forall_le, exists_le)


def check_mv_quantifier(alg: FiniteAlgebra, m: UnaryMap, kind: str,
                        report: ClassificationReport | None = None,
                        ops: DerivedOps | None = None) -> Verdict:
    """MVU1-MVU6 (kind='universal') or MVE1-MVE6 (kind='existential')
    on the multi-valued structure of a bounded commutative algebra."""
    if report is None or ops is None:
        report, ops = classify(alg)
    if not (report.holds("bounded") and report.holds("commutative")):
        raise NotBoundedCommutative("MV quantifier axioms need a bounded commutative algebra")
    n = alg.size
    f = m.images
    nm, ns, od, op = ops.neg_minus, ops.neg_sim, ops.odot, ops.oplus
    meet, join = ops.meet, ops.join

    if kind == "universal":
        checks = [
            ("MVU1", 1, lambda x: alg.arrow[f[x]][x] == alg.one),
            ("MVU2", 2, lambda x, y: f[meet[x][y]] == meet[f[x]][f[y]]),
            ("MVU3", 1, lambda x: f[nm[f[x]]] == nm[f[x]] and f[ns[f[x]]] == ns[f[x]]),
            ("MVU4", 2, lambda x, y: f[od[f[x]][f[y]]] == od[f[x]][f[y]]),
            ("MVU5", 1, lambda x: f[od[x][x]] == od[f[x]][f[x]]),
            ("MVU6", 1, lambda x: f[op[x][x]] == op[f[x]][f[x]]),
        ]
    elif kind == "existential":
        checks = [
            ("MVE1", 1, lambda x: alg.arrow[x][f[x]] == alg.one),
            ("MVE2", 2, lambda x, y: f[join[x][y]] == join[f[x]][f[y]]),
            ("MVE3", 1, lambda x: f[nm[f[x]]] == nm[f[x]] and f[ns[f[x]]] == ns[f[x]]),
            ("MVE4", 2, lambda x, y: f[od[f[x]][f[y]]] == od[f[x]][f[y]]),
            ("MVE5", 1, lambda x: f[od[x][x]] == od[f[x]][f[x]]),
            ("MVE6", 1, lambda x: f[op[x][x]] == op[f[x]][f[x]]),
        ]
    else:
        raise ValueError("kind must be 'universal' or 'existential'")

    for name, arity, pred in checks:
        for tup in product(range(n), repeat=arity):
            if not pred(*tup):
                return Verdict.fails(name, tup)
    return Verdict.holds(f"mv_{kind}")


def pair_from_unary_blocks(alg: FiniteAlgebra, prefix: str) -> MonadicPair:
    """Read `unary <prefix>_exists` / `unary <prefix>_forall` blocks.

    The bare names `exists` / `forall` are used when prefix is empty."""
    e_key = f"{prefix}_exists" if prefix else "exists"
    f_key = f"{prefix}_forall" if prefix else "forall"
    # fixture convention: exists2/forall2 style names (suffix, no underscore)
    if e_key not in alg.unary and f"exists{prefix}" in alg.unary:
        e_key, f_key = f"exists{prefix}", f"forall{prefix}"
    if e_key not in alg.unary or f_key not in alg.unary:
        raise KeyError(f"no unary blocks {e_key!r}/{f_key!r} in {alg.name}")
    return MonadicPair(alg.unary[e_key], alg.unary[f_key])
