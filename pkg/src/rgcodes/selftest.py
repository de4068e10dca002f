"""Acceptance suite: nine end-to-end checks with per-check time limits.

Each criterion function is self-contained and returns a CriterionResult;
``run_all`` executes them in order and prints one pass/fail line per
criterion.  The pytest acceptance module wraps the same functions, so
``rgcodes selftest`` and the test suite agree by construction.
"""

from __future__ import annotations

import io
import json
import random
import time
from contextlib import redirect_stdout
from dataclasses import dataclass
from itertools import product

from .arith import GroupSpec, euler_phi, factorize, mult_ord, parse_group
from .chain_ring import F2, parse_ring
from .codes import CodeComponent, analyze_code, enumerate_codewords, code_size_formula
from .f2_oracle import component_count_formula, primitive_idempotents_f2
from .group_algebra import GroupAlgebra
from .idempotents import (
    block_idempotent,
    lift_idempotent,
    primitive_family,
    split_block_2,
    split_block_3,
    u_product_pair,
    verify_family,
)

SPEC_LIST = [
    GroupSpec((3,), (1,)),
    GroupSpec((5,), (1,)),
    GroupSpec((11,), (1,)),
    GroupSpec((3,), (2,)),
    GroupSpec((3, 5), (1, 1)),
    GroupSpec((3, 11), (1, 1)),
    GroupSpec((5, 11), (1, 1)),
    GroupSpec((3, 5), (2, 1)),
    GroupSpec((3, 5, 11), (1, 1, 1)),
]

LIFT_SPECS = [
    GroupSpec((3,), (1,)),
    GroupSpec((3, 5), (1, 1)),
    GroupSpec((3, 5), (2, 1)),
    GroupSpec((3, 5, 11), (1, 1, 1)),
]

LIFT_RINGS = ["z4", "z8", "f2u2", "f2u3"]


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float
    limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        timing = f"[{self.seconds:.1f}s" + (f" < {self.limit:.0f}s]" if self.limit else "]")
        return f"{status} {self.name}: {self.detail} {timing}"


def _timed(name, limit, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a criterion must never take down the suite
        ok, detail = False, f"exception: {exc!r}"
    seconds = time.perf_counter() - t0
    if ok and limit is not None and seconds >= limit:
        ok, detail = False, detail + f" (over the {limit:.0f}s limit)"
    return CriterionResult(name, ok, detail, seconds, limit)


def criterion_component_counts():
    """Oracle family size equals the closed-form count; families complete."""

    def run():
        counts = []
        for spec in SPEC_LIST:
            prims = primitive_idempotents_f2(spec)
            want = component_count_formula(spec)
            if len(prims) != want:
                return False, f"{spec}: oracle {len(prims)} != formula {want}"
            alg = GroupAlgebra(F2, spec)
            if not all(e.is_idempotent() for e in prims):
                return False, f"{spec}: non-idempotent member"
            if not all(
                (prims[i] * prims[j]).is_zero()
                for i in range(len(prims))
                for j in range(i + 1, len(prims))
            ):
                return False, f"{spec}: family not orthogonal"
            total = alg.zero()
            for e in prims:
                total = total + e
            if total != alg.one():
                return False, f"{spec}: family does not sum to 1"
            counts.append(f"{spec}:{want}")
        return True, "counts " + " ".join(counts)

    return _timed("component-counts", 5.0, run)


def criterion_lifting():
    """f^(2^(t-1)) is idempotent, reduces back to f; lifted family complete."""

    def run():
        cases = 0
        for spec in LIFT_SPECS:
            prims = primitive_idempotents_f2(spec)
            for rname in LIFT_RINGS:
                ring = parse_ring(rname)
                lifted = [lift_idempotent(f, ring) for f in prims]
                for f, e in zip(prims, lifted):
                    if not e.is_idempotent() or e.reduce_f2() != f:
                        return False, f"{spec}/{rname}: bad lift"
                    cases += 1
                alg = GroupAlgebra(ring, spec)
                total = alg.zero()
                for e in lifted:
                    total = total + e
                if total != alg.one():
                    return False, f"{spec}/{rname}: lifts do not sum to 1"
                if not all(
                    (lifted[i] * lifted[j]).is_zero()
                    for i in range(len(lifted))
                    for j in range(i + 1, len(lifted))
                ):
                    return False, f"{spec}/{rname}: lifts not orthogonal"
        return True, f"{cases} lifts over {len(LIFT_RINGS)} rings verified"

    return _timed("idempotent-lifting", 30.0, run)


def criterion_formula_vs_oracle():
    """Closed-form idempotents are members of the lifted oracle family."""

    def run():
        ring = parse_ring("z4")
        verified = 0
        for spec in [GroupSpec((3, 5), (1, 1)), GroupSpec((3, 5, 11), (1, 1, 1))]:
            alg = GroupAlgebra(ring, spec)
            family = [r.element for r in primitive_family(spec, ring)]

            def member(e):
                return any(e == f for f in family)

            # whole-group hat and the single-index block idempotents
            candidates = [block_idempotent(alg, (0,) * spec.r)]
            for i in range(spec.r):
                for j in range(1, spec.exponents[i] + 1):
                    blk = tuple(j if m == i else 0 for m in range(spec.r))
                    candidates.append(block_idempotent(alg, blk))
            # both summands of every two-index block
            for block in product(*(range(n + 1) for n in spec.exponents)):
                if sum(1 for j in block if j) == 2:
                    candidates.extend(split_block_2(alg, block))
            # the leading summand of the all-index block: for r = 2 the bare
            # u-product pair, for r = 3 the block-plus-pair form (the bare
            # pair is then a proper sum of members, checked in the suite)
            full = tuple(spec.exponents)
            if spec.r == 2:
                candidates.append(u_product_pair(alg, full))
            else:
                candidates.append(split_block_3(alg, full)[0])
            for e in candidates:
                if not member(e):
                    return False, f"{spec}: closed form not in the family"
                verified += 1
        return True, f"{verified} closed forms matched"

    return _timed("formula-vs-oracle", 10.0, run)


def criterion_word_counts(budget):
    """Enumerated cardinality equals 2^((t-k) d) at n = 15 over z4."""

    def run():
        spec = GroupSpec((3, 5), (1, 1))
        ring = parse_ring("z4")
        alg = GroupAlgebra(ring, spec)
        sizes = []
        for rec in primitive_family(spec, ring):
            for k in (0, 1):
                comp = CodeComponent(rec.element, rec.block, rec.split, k)
                want = code_size_formula(spec, ring, rec.block, k)
                got = len(enumerate_codewords(alg, [comp], budget))
                if got != want:
                    return False, f"block {rec.block} k={k}: {got} != {want}"
                sizes.append(want)
        return True, f"10 codes enumerated, sizes {sorted(set(sizes))}"

    return _timed("word-counts", 60.0, lambda: run())


def criterion_min_weights(budget):
    """Enumerated minimum weights 15/10/6 at n = 15, equal for k = 0 and 1."""

    def run():
        spec = GroupSpec((3, 5), (1, 1))
        ring = parse_ring("z4")
        alg = GroupAlgebra(ring, spec)
        fam = {r.block: r for r in primitive_family(spec, ring) if r.split is None}
        want = {(0, 0): 15, (1, 0): 10, (0, 1): 6}
        for block, expected in want.items():
            rec = fam[block]
            per_k = []
            for k in (0, 1):
                comp = CodeComponent(rec.element, rec.block, rec.split, k)
                got = enumerate_codewords(alg, [comp], budget).min_nonzero()
                if got is None or got[0] != expected:
                    return False, f"block {block} k={k}: weight {got} != {expected}"
                per_k.append(got[0])
            if per_k[0] != per_k[1]:
                return False, f"block {block}: weight depends on k"
        return True, "weights 15/10/6 for k in {0,1}"

    return _timed("min-weights", None, run)


def criterion_bound_sandwich(budget):
    """Split code at n = 15: lower bound 4 <= enumerated weight <= probe bound."""

    def run():
        spec = GroupSpec((3, 5), (1, 1))
        ring = parse_ring("z4")
        alg = GroupAlgebra(ring, spec)
        rec = next(
            r for r in primitive_family(spec, ring)
            if r.block == (1, 1) and r.split == "(1)"
        )
        comp = CodeComponent(rec.element, rec.block, rec.split, 0)
        rep = analyze_code(alg, [comp], budget)
        if rep.lower_bound != 4:
            return False, f"lower bound {rep.lower_bound} != 4"
        if rep.min_weight is None or rep.weight_method != "enumeration":
            return False, "exact weight missing"
        if not rep.min_weight >= rep.lower_bound:
            return False, "sandwich violated below"
        if rep.upper_bound is None or not rep.min_weight <= rep.upper_bound:
            return False, "sandwich violated above"
        if rep.lower_bound_attained is None:
            return False, "attainment flag missing"
        return True, (
            f"4 <= {rep.min_weight} <= {rep.upper_bound}, "
            f"lower bound attained: {rep.lower_bound_attained}"
        )

    return _timed("bound-sandwich", None, run)


def criterion_order_identity():
    """ord_m(2) = phi(m)/2^(r-1) for the six supported moduli."""

    def run():
        want = {15: 4, 33: 10, 55: 20, 165: 20, 45: 12, 99: 30}
        for m, expected in want.items():
            r = len(factorize(m))
            identity = euler_phi(m) >> (r - 1)
            got = mult_ord(2, m)
            if got != identity or got != expected:
                return False, f"m={m}: ord {got}, phi/2^(r-1) {identity}, expected {expected}"
        return True, "ord_m(2) matches phi(m)/2^(r-1) for m in {15,33,55,165,45,99}"

    return _timed("order-identity", None, run)


def criterion_example_table(budget):
    """The table command reproduces the frozen counts and fills the blank cells."""

    def run():
        from .cli import main as cli_main

        buf = io.StringIO()
        with redirect_stdout(buf):
            rc = cli_main([
                "table", "--ring", "z4", "--group", "3^1,5^1,11^1",
                "--k", "1", "--budget", str(budget),
            ])
        if rc != 0:
            return False, f"table command exited {rc}"
        rows = json.loads(buf.getvalue())["rows"]
        want_words = [2, 4, 16, 1024]
        want_weights = [165, 110, 66, 30]
        for row, words, weight in zip(rows[:4], want_words, want_weights):
            if row["words"] != words or row["weight"] != weight:
                return False, f"row {row['code']}: {row['words']}/{row['weight']}"
            if row["paper_blank"]:
                return False, "populated row flagged blank"
        for row in rows[4:]:
            if not row["paper_blank"]:
                return False, "blank row not flagged"
            filled = row["weight"] is not None or (
                row["lower_bound"] is not None and row["upper_bound"] is not None
            )
            if not filled:
                return False, f"row {row['code']}: weight cell not filled"
        blanks = [(r["weight"], r["weight_method"]) for r in rows[4:]]
        return True, f"4 rows reproduced; blank cells filled {blanks}"

    return _timed("example-table", 300.0, run)


def criterion_properties(budget):
    """Hats idempotent, ring axioms (randomized), Frobenius fixing, determinism."""

    def run():
        # hat idempotency for every subgroup of a few valid specs
        hat_checks = 0
        for spec in [GroupSpec((3,), (1,)), GroupSpec((3,), (2,)),
                     GroupSpec((3, 5), (1, 1)), GroupSpec((3, 5), (2, 1)),
                     GroupSpec((3, 5, 11), (1, 1, 1))]:
            for rname in ("z4", "f2u2"):
                alg = GroupAlgebra(parse_ring(rname), spec)
                for levels in product(*(range(n + 1) for n in spec.exponents)):
                    h = alg.hat(levels)
                    if not h.is_idempotent():
                        return False, f"hat {levels} not idempotent over {rname}[{spec}]"
                    hat_checks += 1

        # randomized ring axioms: associativity, commutativity, distributivity,
        # and the identity, over a few (ring, group) contexts
        rng = random.Random(20260823)
        contexts = [
            (parse_ring("z4"), GroupSpec((3, 5), (1, 1))),
            (parse_ring("z8"), GroupSpec((3,), (2,))),
            (parse_ring("f2u2"), GroupSpec((3, 5), (1, 1))),
            (parse_ring("f2u3"), GroupSpec((5,), (1,))),
        ]
        cases = 0
        for ring, spec in contexts:
            alg = GroupAlgebra(ring, spec)
            one = alg.one()

            def rand_elem():
                return alg.element([rng.randrange(ring.size) for _ in range(alg.n)])

            for _ in range(90):
                x, y, z = rand_elem(), rand_elem(), rand_elem()
                if (x * y) * z != x * (y * z):
                    return False, f"associativity fails over {ring.designator()}"
                if x * y != y * x:
                    return False, f"commutativity fails over {ring.designator()}"
                if x * (y + z) != x * y + x * z:
                    return False, f"distributivity fails over {ring.designator()}"
                if x * one != x:
                    return False, f"identity fails over {ring.designator()}"
                cases += 4

        # Frobenius: doubling the exponents fixes every F2 idempotent
        frob = 0
        for spec in SPEC_LIST:
            for e in primitive_idempotents_f2(spec):
                if e.scale_exponents(2) != e:
                    return False, f"{spec}: idempotent moved by exponent doubling"
                frob += 1

        # byte determinism of the serialized family across two runs
        from .cli import main as cli_main

        outs = []
        for _ in range(2):
            buf = io.StringIO()
            with redirect_stdout(buf):
                rc = cli_main(["idempotents", "--ring", "z4", "--group", "3^1,5^1"])
            if rc != 0:
                return False, "idempotents command failed"
            outs.append(buf.getvalue())
        if outs[0] != outs[1]:
            return False, "JSON output not byte-identical across runs"

        return True, (
            f"{hat_checks} hats, {cases} axiom cases, {frob} Frobenius checks, "
            "deterministic JSON"
        )

    return _timed("property-suite", None, run)


def run_all(budget=1 << 20, print_fn=print):
    results = [
        criterion_component_counts(),
        criterion_lifting(),
        criterion_formula_vs_oracle(),
        criterion_word_counts(budget),
        criterion_min_weights(budget),
        criterion_bound_sandwich(budget),
        criterion_order_identity(),
        criterion_example_table(budget),
        criterion_properties(budget),
    ]
    for res in results:
        print_fn(res.line())
    passed = sum(r.ok for r in results)
    print_fn(f"{passed}/{len(results)} criteria passed")
    return results
