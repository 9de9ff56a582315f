"""Fiber products of ideals, their power filtration, and claim checks.

For ideals I inside m^2 and J inside n^2 (m, n the graded maximal ideals
of two polynomial rings R, S) the fiber product of R/I and S/J is
presented by F = I + J + m*n inside the tensor ring T.  The powers of F
carry a filtration H^s = G_0 <= G_1 <= ... <= G_s = F^s with
G_t = G_(t-1) + (mn)^(s-t) J^t whose steps are Betti splittings; the
regularity, depth, and componentwise-linearity checks in this module all
ride on that structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import betti_table
from .config import DEFAULT_CAPS, Caps
from .core import Ring, tensor_ring
from .errors import DomainError, RingMismatchError
from .ideals import MonomialIdeal, maxideal_power, star_derivative, tensor_embed
from .invariants import invariants_of, is_componentwise_linear, reg_of
from .koszul import tor_vanishing
from .reports import Report, Stopwatch, make_report

INFINITE_DEPTH = None  # depth of the zero module: dropped from minima


@dataclass(frozen=True)
class FiberSetup:
    """Tensor ring with both factors' data and the fiber product ideal."""

    T: Ring
    left: Ring
    right: Ring
    I_left: MonomialIdeal   # over the left factor ring
    J_right: MonomialIdeal  # over the right factor ring
    I: MonomialIdeal        # embedded in T
    J: MonomialIdeal
    mm: MonomialIdeal       # maximal ideal of the left block, in T
    nn: MonomialIdeal
    F: MonomialIdeal        # I + J + mm*nn
    H: MonomialIdeal        # I + mm*nn


def fiber_product(
    left_ideal: MonomialIdeal, right_ideal: MonomialIdeal, name: str | None = None
) -> FiberSetup:
    """Build the fiber product setup of two ideals over disjoint rings."""
    R, S = left_ideal.ring, right_ideal.ring
    if R.characteristic != S.characteristic:
        raise RingMismatchError("factor rings have different characteristics")
    for ideal, ring in ((left_ideal, R), (right_ideal, S)):
        if not ideal.is_zero() and ideal.indeg() < 2:
            raise DomainError(
                f"ideal over {ring.name!r} must sit inside the square of the "
                "maximal ideal (no generators of degree < 2)"
            )
    T = tensor_ring(name or f"{R.name}x{S.name}", R, S)
    I = tensor_embed(left_ideal, T)
    J = tensor_embed(right_ideal, T)
    mm = maxideal_power(T, R.name, 1)
    nn = maxideal_power(T, S.name, 1)
    mixed = mm * nn
    return FiberSetup(
        T=T, left=R, right=S,
        I_left=left_ideal, J_right=right_ideal,
        I=I, J=J, mm=mm, nn=nn,
        F=I + J + mixed, H=I + mixed,
    )


@dataclass(frozen=True)
class Filtration:
    """The chain G_0 = H^s <= ... <= G_s = F^s with verified step identities."""

    setup: FiberSetup
    s: int
    stages: tuple[MonomialIdeal, ...]           # G_0 .. G_s
    added: tuple[MonomialIdeal, ...]            # (mn)^(s-t) J^t for t = 1..s
    intersections: tuple[MonomialIdeal, ...]    # G_(t-1) & added_t
    intersection_ok: tuple[bool, ...]           # == m^(s-t+1) n^(s-t) J^t
    sum_ok: bool                                # G_s == F^s


def filtration(setup: FiberSetup, s: int) -> Filtration:
    if s < 1:
        raise DomainError("filtration needs s >= 1")
    mn = setup.mm * setup.nn
    stages = [setup.H ** s]
    added, inters, flags = [], [], []
    for t in range(1, s + 1):
        piece = (mn ** (s - t)) * (setup.J ** t)
        added.append(piece)
        meet = stages[-1] & piece
        inters.append(meet)
        expected = (setup.mm ** (s - t + 1)) * (setup.nn ** (s - t)) * (setup.J ** t)
        flags.append(meet == expected)
        stages.append(stages[-1] + piece)
    sum_ok = stages[-1] == setup.F ** s
    result = Filtration(
        setup, s, tuple(stages), tuple(added), tuple(inters), tuple(flags), sum_ok
    )
    if not (sum_ok and all(flags)):
        # these identities are unconditional; a failure falsifies the engine
        raise RuntimeError(f"filtration identity failed at s={s}: {flags}, sum={sum_ok}")
    return result


# -- Betti splittings ---------------------------------------------------------


def verify_betti_splitting(
    total: MonomialIdeal,
    part_a: MonomialIdeal,
    part_b: MonomialIdeal,
    characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS,
    threads: int | None = None,
    claim: str = "betti-splitting",
    params: dict | None = None,
) -> Report:
    """Check beta_i,b(P) = beta_i,b(A) + beta_i,b(B) + beta_(i-1),b(A&B)."""
    if total != part_a + part_b:
        raise DomainError("decomposition does not sum to the total ideal")
    with Stopwatch() as sw:
        meet = part_a & part_b
        tables = {}
        for key, ideal in (("P", total), ("A", part_a), ("B", part_b), ("C", meet)):
            tables[key] = (
                {} if ideal.is_zero()
                else betti_table(ideal, characteristic, caps, threads).multigraded()
            )
        mismatches = []
        keys = set(tables["P"]) | set(tables["A"]) | set(tables["B"])
        keys |= {(i + 1, b) for i, b in tables["C"]}
        for i, b in keys:
            lhs = tables["P"].get((i, b), 0)
            rhs = (
                tables["A"].get((i, b), 0)
                + tables["B"].get((i, b), 0)
                + tables["C"].get((i - 1, b), 0)
            )
            if lhs != rhs:
                mismatches.append({"i": i, "b": list(b), "total": lhs, "split": rhs})
        coarse_p: dict[int, int] = {}
        for (i, _), d in tables["P"].items():
            coarse_p[i] = coarse_p.get(i, 0) + d
    return make_report(
        claim,
        params or {},
        computed={
            "mismatches": len(mismatches),
            "firstMismatches": sorted(
                mismatches, key=lambda m: (m["i"], m["b"])
            )[:5],
            "bettiTotals": [coarse_p.get(i, 0) for i in range(max(coarse_p, default=0) + 1)],
        },
        expected={"mismatches": 0},
        ms=sw.ms,
        compare_keys=("mismatches",),
    )


def verify_tor_vanishing_lemma(
    ideal: MonomialIdeal,
    s: int,
    mode: str = "certificate",
    characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> Report:
    """Tor-vanishing of m^(s-t) I^t -> m^(s-t+1) I^(t-1) for t = 1..s.

    Certificate mode checks the star-derivative containment
    d*(m^(s-t) I^t) <= m^(s-t+1) I^(t-1), which implies Tor-vanishing for
    monomial ideals; exact mode computes the induced Tor maps.
    """
    if ideal.is_zero() or ideal.indeg() < 2:
        raise DomainError("lemma requires a nonzero ideal inside the maximal ideal squared")
    if mode not in ("certificate", "exact"):
        raise DomainError(f"unknown mode {mode!r}")
    ring = ideal.ring
    results = {}
    with Stopwatch() as sw:
        powers = {0: MonomialIdeal.unit(ring)}
        for t in range(1, s + 1):
            powers[t] = powers[t - 1] * ideal
        for t in range(1, s + 1):
            small = maxideal_power(ring, None, s - t) * powers[t]
            big = maxideal_power(ring, None, s - t + 1) * powers[t - 1]
            if mode == "certificate":
                ok = big.contains(star_derivative(small))
            else:
                ok, _ = tor_vanishing(small, big, characteristic, caps=caps)
            results[f"t={t}"] = ok
    return make_report(
        f"tor-vanishing-{mode}",
        {"s": s, "ideal": str(ideal)},
        computed={"allVanishing": all(results.values()), "perStep": results},
        expected={"allVanishing": True},
        ms=sw.ms,
        compare_keys=("allVanishing",), provenance="lemma 4.1",
    )


# -- regularity / depth / linearity checks -----------------------------------


def _depth(ideal: MonomialIdeal, characteristic, caps, threads):
    if ideal.is_zero():
        return INFINITE_DEPTH
    return invariants_of(ideal, characteristic, caps=caps, threads=threads).depth


def _min_depth(*values: int | None) -> int:
    finite = [v for v in values if v is not None]
    return min(finite)


def reg_power_formula_terms(
    setup: FiberSetup, s: int, characteristic: int | None,
    caps: Caps = DEFAULT_CAPS, threads: int | None = None,
) -> dict:
    """Right-hand sides of the power regularity formulas.

    The general form takes the maximum of reg(m^(s-i) I^i) + s - i over
    both factors and i = 1..s; a factor that is the zero ideal contributes
    only the pure mixed-power term reg((mn)^s) = 2s.  The equigenerated
    form replaces reg(m^(s-i) I^i) by reg(I^i).
    """
    terms = []
    eq_terms = []
    equigenerated = True
    nonzero_seen = False
    for factor_ideal, ring in ((setup.I_left, setup.left), (setup.J_right, setup.right)):
        if factor_ideal.is_zero():
            terms.append(2 * s)
            eq_terms.append(2 * s)
            continue
        nonzero_seen = True
        equigenerated = equigenerated and factor_ideal.is_equigenerated()
        power = MonomialIdeal.unit(ring)
        for i in range(1, s + 1):
            power = power * factor_ideal
            reg_power = reg_of(power, characteristic, caps, threads)
            eq_terms.append(reg_power + s - i)
            shifted = maxideal_power(ring, None, s - i) * power
            terms.append(reg_of(shifted, characteristic, caps, threads) + s - i)
    return {
        "general": max(terms),
        "equigenerated": max(eq_terms),
        "bothEquigenerated": equigenerated and nonzero_seen,
    }


def check_reg_formula(
    setup: FiberSetup, s: int, characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS, threads: int | None = None,
) -> Report:
    """Direct reg F^s against the general power regularity formula."""
    with Stopwatch() as sw:
        direct = reg_of(setup.F ** s, characteristic, caps, threads)
        rhs = reg_power_formula_terms(setup, s, characteristic, caps, threads)
        computed = {"regFs": direct, "formula": rhs["general"]}
        expected = {"regFs": rhs["general"]}
        if rhs["bothEquigenerated"]:
            computed["equigeneratedFormula"] = rhs["equigenerated"]
            expected["equigeneratedFormula"] = direct
    return make_report(
        "thm-5.1", {"s": s}, computed, expected, sw.ms,
        compare_keys=tuple(expected), provenance="theorem 5.1",
    )


def check_reg_formula_equigenerated(
    setup: FiberSetup, s: int, characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS, threads: int | None = None,
) -> Report:
    """Equigenerated shortcut reg F^s = max(reg I^i + s - i, reg J^i + s - i).

    This equality can genuinely fail when a factor is not equigenerated;
    the verdict reports whether it held.
    """
    with Stopwatch() as sw:
        direct = reg_of(setup.F ** s, characteristic, caps, threads)
        rhs = reg_power_formula_terms(setup, s, characteristic, caps, threads)
    return make_report(
        "cor-5.2", {"s": s},
        computed={"regFs": direct, "formula": rhs["equigenerated"]},
        expected={"formula": direct},
        ms=sw.ms,
        compare_keys=("formula",), provenance="corollary 5.2",
    )


def check_depth_formula(
    setup: FiberSetup, s: int, characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS, threads: int | None = None,
) -> Report:
    """Depth of F^s: the fiber-product formula at s = 1, depth 1 for s >= 2."""
    both_zero = setup.I_left.is_zero() and setup.J_right.is_zero()
    with Stopwatch() as sw:
        fs = setup.F ** s
        inv = invariants_of(fs, characteristic, caps=caps, threads=threads)
        if s == 1:
            depth_i = _depth(setup.I_left, characteristic, caps, threads)
            depth_j = _depth(setup.J_right, characteristic, caps, threads)
            expected_depth = _min_depth(2, depth_i, depth_j)
            quotient_rhs = _min_depth(
                1,
                setup.left.nvars if setup.I_left.is_zero()
                else depth_i - 1,
                setup.right.nvars if setup.J_right.is_zero()
                else depth_j - 1,
            )
            computed = {"depthF": inv.depth, "depthQuotient": inv.depth_quotient}
            expected = {"depthF": expected_depth, "depthQuotient": quotient_rhs}
            claim = "prop-3.4"
        elif both_zero:
            # excluded from the depth-1 statement: F = mn has depth 2
            computed = {"depthFs": inv.depth}
            expected = {"depthFs": 2}
            claim = "thm-6.1"
        else:
            computed = {"depthFs": inv.depth, "depthQuotient": inv.depth_quotient}
            expected = {"depthFs": 1, "depthQuotient": 0}
            claim = "thm-6.1"
    return make_report(claim, {"s": s}, computed, expected, sw.ms,
                       provenance="proposition 3.4(i)" if claim == "prop-3.4" else "theorem 6.1")


def check_componentwise(
    setup: FiberSetup, s: int, characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS, threads: int | None = None,
) -> Report:
    """Componentwise linearity transfers between F^i and the pair (I^i, J^i).

    For each i up to s: all of F^1..F^i are componentwise linear iff all of
    I^1..I^i and J^1..J^i are.  Zero factors are skipped (vacuously linear).
    """
    with Stopwatch() as sw:
        flags = {}
        ok = True
        factor_lin: list[bool] = []
        fiber_lin: list[bool] = []
        for i in range(1, s + 1):
            lin_i = True
            for factor_ideal in (setup.I_left, setup.J_right):
                if factor_ideal.is_zero():
                    continue
                lin_i = lin_i and is_componentwise_linear(
                    factor_ideal ** i, characteristic, caps, threads
                )
            factor_lin.append(lin_i)
            fiber_lin.append(
                is_componentwise_linear(setup.F ** i, characteristic, caps, threads)
            )
            lhs = all(fiber_lin)
            rhs = all(factor_lin)
            flags[f"i={i}"] = {"fiber": lhs, "factors": rhs}
            ok = ok and (lhs == rhs)
    return make_report(
        "cor-7.2", {"s": s},
        computed={"biconditional": ok, "perPower": flags},
        expected={"biconditional": True},
        ms=sw.ms,
        compare_keys=("biconditional",), provenance="corollary 7.2",
    )


def check_reg_increasing(
    setup: FiberSetup, s_cap: int, characteristic: int | None = None,
    caps: Caps = DEFAULT_CAPS, threads: int | None = None,
    claim: str = "cor-8.1",
) -> Report:
    """reg F^s strictly increases for s = 1..s_cap."""
    with Stopwatch() as sw:
        regs = []
        power = MonomialIdeal.unit(setup.T)
        for _ in range(s_cap):
            power = power * setup.F
            regs.append(reg_of(power, characteristic, caps, threads))
        increasing = all(a < b for a, b in zip(regs, regs[1:]))
    return make_report(
        claim, {"sCap": s_cap},
        computed={"regs": regs, "strictlyIncreasing": increasing},
        expected={"strictlyIncreasing": True},
        ms=sw.ms,
        compare_keys=("strictlyIncreasing",), provenance="corollary 8.1",
    )
