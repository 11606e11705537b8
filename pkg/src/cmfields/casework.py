"""Exhaustive verification of the per-group sextic case analysis.

Each admissible label gets a *model*: a permutation group carrying the
structure the argument is phrased in (a direct product written on disjoint
point sets, the dihedral group with named ``r`` and ``s``, and so on).  The
field ``F`` corresponds to ``H`` and its embeddings to ``G/H``, so the model
need not act on six points itself; every configuration is checked to give
the expected label on ``G/H``.

Fixed names in ``S_4`` (points 0..3):

* ``D4^1 = <(0 1 2 3), (0 2)>``, ``C4^1 = <(0 1 2 3)>``, ``V4^1 = <(0 2), (1 3)>``
* ``D4^2 = <(0 2 1 3), (0 1)>``, ``C4^2 = <(0 2 1 3)>``, ``V4^2 = <(0 1), (2 3)>``
* ``D4^3 = <(0 1 3 2), (0 3)>``, ``C4^3 = <(0 1 3 2)>``, ``V4^3 = <(0 3), (1 2)>``
* ``C2^{j1}`` is generated by the square of the 4-cycle of ``C4^j``
* ``C2^1..C2^6`` are ``(0 2), (1 3), (0 1), (2 3), (0 3), (1 2)``
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable

from .classifier import (
    Category,
    GroupConfiguration,
    InadmissibleLabel,
    classify_configuration,
    classify_sextic,
    cubic_signature_of,
    needs_cubic_signature,
    subfield_signature,
    valid_configurations,
)
from .permgroup import (
    Permutation,
    PermutationGroup,
    core,
    cyclic_group,
    dihedral_group,
    fixed_cosets,
    generate,
    intermediate_subgroups,
    maximal_subgroup_classes,
    all_subgroups,
    symmetric_group,
    alternating_group,
)
from .transitive import ADMISSIBLE_SEXTIC, TransitiveLabel, label as _label


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    observed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected), "observed": _jsonable(self.observed), "pass": self.passed}


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted((_jsonable(v) for v in x), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (Permutation, TransitiveLabel, Category)):
        return str(x)
    if isinstance(x, PermutationGroup):
        return {"order": x.order, "generators": [str(g) for g in x.generators]}
    return x


@dataclass
class VerificationReport:
    label: TransitiveLabel
    checks: list[Check] = field(default_factory=list)
    configurations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str, expected, observed) -> Check:
        c = Check(name, expected, observed)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        return {
            "label": self.label.code,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "configurations": self.configurations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# --------------------------------------------------------------------------
# helpers


def _perm(cycles, n: int = 6) -> Permutation:
    return Permutation.from_cycles(cycles, n)


def _sub(G: PermutationGroup, gens) -> PermutationGroup:
    t = G.table
    return t.subgroup(t.closure([t.element_index(g) for g in gens]))


def _proper_overgroups(G: PermutationGroup, H: PermutationGroup) -> list[PermutationGroup]:
    return [k.group for k in intermediate_subgroups(G, H) if k.proper]


def _involutions(G: PermutationGroup) -> list[Permutation]:
    return [g for g in G if not g.is_identity() and (g * g).is_identity()]


def _normalizes(gens, A: PermutationGroup) -> bool:
    return all(g * a * g.inverse() in A for g in gens for a in A.generators)


def _common_checks(report: VerificationReport, G: PermutationGroup, configs: list[GroupConfiguration]) -> None:
    lab = report.label
    labels = set()
    disagreements = 0
    imaginary = True
    monotone = True
    for cfg in configs:
        labels.add(cfg.transitive_label())
        v = classify_configuration(cfg)
        sig = cubic_signature_of(v)
        table = classify_sextic(lab, sig if needs_cubic_signature(lab) else None)
        if v.category is not table.category:
            disagreements += 1
        if subfield_signature(G, cfg.H, cfg.c) != (0, lab.degree // 2):
            imaginary = False
        if v.category is Category.CM_FIELD and v.witness.K1 != cfg.H:
            monotone = False
        if v.category is Category.CM_TYPE_NOT_CM and v.witness.K1 == cfg.H:
            monotone = False
        report.configurations.append(
            {
                "H_order": cfg.H.order,
                "H_generators": [str(g) for g in cfg.H.generators],
                "c": str(cfg.c),
                "oracle": v.category.value,
                "table": table.category.value,
                "cubic_signature": list(sig) if sig else None,
                "subfields": [s.to_dict() for s in v.subfields],
            }
        )
    report.check("at least one valid configuration", True, len(configs) > 0)
    report.check("coset action realizes the label", {lab}, labels)
    report.check("oracle/table disagreements", 0, disagreements)
    report.check("c fixes no coset of G/H in every configuration", True, imaginary)
    report.check("CM_FIELD witnesses use K1 = H, others K1 > H", True, monotone)


def _model_configurations(G: PermutationGroup, lab: TransitiveLabel) -> list[GroupConfiguration]:
    return valid_configurations(G, lab.degree)


# --------------------------------------------------------------------------
# per-label models and checks


def _c6(report: VerificationReport) -> list[GroupConfiguration]:
    G = cyclic_group(6)
    configs = _model_configurations(G, report.label)
    ok = True
    for cfg in configs:
        v = classify_configuration(cfg)
        kinds = sorted((s.degree, s.kind) for s in v.subfields)
        ok &= kinds == [(2, "totally_imaginary"), (3, "totally_real")]
    report.check("subfields: imaginary quadratic and totally real cubic", True, ok)
    _common_checks(report, G, configs)
    return configs


def _s3(report: VerificationReport) -> list[GroupConfiguration]:
    G = symmetric_group(3)
    configs = _model_configurations(G, report.label)
    real_cubic = any(s.degree == 3 and s.kind == "totally_real" for cfg in configs for s in classify_configuration(cfg).subfields)
    quad = all(any(s.degree == 2 and s.kind == "totally_imaginary" for s in classify_configuration(cfg).subfields) for cfg in configs)
    report.check("no totally real cubic subfield", False, real_cubic)
    report.check("imaginary quadratic subfield present", True, quad)
    _common_checks(report, G, configs)
    return configs


def _d6(report: VerificationReport) -> list[GroupConfiguration]:
    G = dihedral_group(6)
    r, s = G.generators
    H = _sub(G, [s])
    Hc = _sub(G, [s, r**3])
    Hq = _sub(G, [s, r**2])
    report.check("proper overgroups of <s> are <s,r^3> and <s,r^2>", {Hc, Hq}, set(_proper_overgroups(G, H)))
    cands = {c for c in _involutions(G) if c not in H and c not in Hq}
    report.check(
        "order-2 candidates outside H and H_q",
        {r**3, s * r, s * r**3, s * r**5},
        cands,
    )
    core_c = core(G, Hc)
    report.check("candidates with c in core(G, H_c)", {r**3}, {c for c in cands if c in core_c})
    report.check("r^3 fixes all 3 cosets of <s,r^3>", 3, len(fixed_cosets(G, Hc, r**3)))
    report.check("signature of F^<s,r^2> under r^3", (0, 1), subfield_signature(G, Hq, r**3))
    report.check("signature of F^<s,r^3> under r^3", (3, 0), subfield_signature(G, Hc, r**3))
    center = G.center()
    report.check("r^3 is the only central involution", {r**3}, {c for c in _involutions(G) if c in center})
    configs = _model_configurations(G, report.label)
    rule = all(
        (classify_configuration(cfg).category is Category.CM_FIELD) == (cfg.c in center) for cfg in configs
    )
    report.check("CM field iff c central, over all configurations", True, rule)
    report.check(
        "both cubic signatures occur",
        {(3, 0), (1, 1)},
        {cubic_signature_of(classify_configuration(cfg)) for cfg in configs},
    )
    _common_checks(report, G, configs)
    return configs


def _s3xc3(report: VerificationReport) -> list[GroupConfiguration]:
    G = generate([_perm([(0, 1, 2)]), _perm([(0, 1)]), _perm([(3, 4, 5)])], 6)
    A3xC3 = _sub(G, [_perm([(0, 1, 2)]), _perm([(3, 4, 5)])])
    configs = _model_configurations(G, report.label)
    ok = all(_proper_overgroups(G, cfg.H) == [A3xC3] for cfg in configs)
    report.check("unique intermediate group is A3 x C3 (index 2)", True, ok)
    report.check("[G : A3 x C3]", 2, G.order // A3xC3.order)
    _common_checks(report, G, configs)
    return configs


def _a4xc2(report: VerificationReport) -> list[GroupConfiguration]:
    G = generate([_perm([(0, 1, 2)]), _perm([(0, 1), (2, 3)]), _perm([(4, 5)])], 6)
    V4xC2 = _sub(G, [_perm([(0, 1), (2, 3)]), _perm([(0, 2), (1, 3)]), _perm([(4, 5)])])
    configs = _model_configurations(G, report.label)
    report.check("V4 x C2 is normal of index 3", (True, 3), (V4xC2.is_normal_in(G), G.order // V4xC2.order))
    ok = all(_proper_overgroups(G, cfg.H) == [V4xC2] for cfg in configs)
    report.check("unique intermediate group is V4 x C2", True, ok)
    galois_real = all(
        all(s.is_galois_over_Q and s.kind == "totally_real" for s in classify_configuration(cfg).cubic_subfields())
        for cfg in configs
    )
    report.check("cubic subfield is Galois and totally real", True, galois_real)
    _common_checks(report, G, configs)
    return configs


# S4 names, 0-based
def _s4_names() -> dict[str, PermutationGroup]:
    S4 = symmetric_group(4)
    p = lambda *c: Permutation.from_cycles(c, 4)  # noqa: E731
    names = {
        "D4^1": [p((0, 1, 2, 3)), p((0, 2))],
        "C4^1": [p((0, 1, 2, 3))],
        "V4^1": [p((0, 2)), p((1, 3))],
        "D4^2": [p((0, 2, 1, 3)), p((0, 1))],
        "C4^2": [p((0, 2, 1, 3))],
        "V4^2": [p((0, 1)), p((2, 3))],
        "D4^3": [p((0, 1, 3, 2)), p((0, 3))],
        "C4^3": [p((0, 1, 3, 2))],
        "V4^3": [p((0, 3)), p((1, 2))],
        "V4^n": [p((0, 1), (2, 3)), p((0, 2), (1, 3))],
        "A4": [p((0, 1, 2)), p((0, 1), (2, 3))],
        "C2^11": [p((0, 2), (1, 3))],
        "C2^21": [p((0, 1), (2, 3))],
        "C2^31": [p((0, 3), (1, 2))],
        "C2^1": [p((0, 2))],
        "C2^2": [p((1, 3))],
        "C2^3": [p((0, 1))],
        "C2^4": [p((2, 3))],
        "C2^5": [p((0, 3))],
        "C2^6": [p((1, 2))],
    }
    return {k: _sub(S4, v) for k, v in names.items()} | {"S4": S4}


def s4_subgroup_names() -> dict[str, PermutationGroup]:
    """The named subgroups of ``S_4`` used in the ``S_4`` and ``S_4 x C_2`` checks."""
    return _s4_names()


def _s4(report: VerificationReport) -> list[GroupConfiguration]:
    n = _s4_names()
    G = n["S4"]
    p = lambda *c: Permutation.from_cycles(c, 4)  # noqa: E731
    report.check("core(S4, D4^1) = V4^n", n["V4^n"], core(G, n["D4^1"]))
    report.check("D4^1 & D4^2 & D4^3 = V4^n", n["V4^n"].images, n["D4^1"].images & n["D4^2"].images & n["D4^3"].images)
    # the two explicit stabilizers, written on points 0..3
    Hc4 = n["C4^1"]
    Hv4 = n["V4^2"]
    for H, name in ((Hc4, "C4^1"), (Hv4, "V4^2")):
        over = _proper_overgroups(G, H)
        report.check(f"{name}: unique proper overgroup is a D4", [8], [K.order for K in over])
    coset_claims = [
        (Hc4, "C4^1", p((0, 1), (2, 3)), p((0, 3))),
        (Hc4, "C4^1", p((0, 2), (1, 3)), Permutation.identity(4)),
        (Hc4, "C4^1", p((0, 3), (1, 2)), p((0, 1))),
        (Hv4, "V4^2", p((0, 1), (2, 3)), Permutation.identity(4)),
        (Hv4, "V4^2", p((0, 2), (1, 3)), p((1, 2))),
        (Hv4, "V4^2", p((0, 3), (1, 2)), p((1, 3))),
    ]
    for H, name, c, g in coset_claims:
        fixed = fixed_cosets(G, H, c)
        report.check(f"{c} fixes the coset {g}H for H = {name}", True, any(g in cs for cs in fixed))
    configs = _model_configurations(G, report.label)
    never_real = all(cubic_signature_of(classify_configuration(cfg)) == (1, 1) for cfg in configs)
    report.check("unique cubic subfield is never totally real", True, never_real)
    report.check(
        "no valid c lies in V4^n",
        False,
        any(cfg.c in n["V4^n"] for cfg in configs),
    )
    _common_checks(report, G, configs)
    return configs


def _s3xs3(report: VerificationReport) -> list[GroupConfiguration]:
    G = generate([_perm([(0, 1, 2)]), _perm([(0, 1)]), _perm([(3, 4, 5)]), _perm([(3, 4)])], 6)
    kernel = _sub(G, [g for g in G if g.sign == 1])
    configs = _model_configurations(G, report.label)
    report.check("ker(sgn x sgn) has order 18", 18, kernel.order)
    ok = all(_proper_overgroups(G, cfg.H) == [kernel] for cfg in configs)
    report.check("ker(sgn x sgn) is the only proper overgroup of H", True, ok)
    diag = _sub(G, [_perm([(0, 1, 2), (3, 4, 5)]), _perm([(0, 1), (3, 4)])])
    report.check("diagonal S3 is among the stabilizers", True, any(_conj(G, cfg.H, diag) for cfg in configs))
    report.check("no overgroup of order 12 over the diagonal", [], [K for K in _proper_overgroups(G, diag) if K.order == 12])
    _common_checks(report, G, configs)
    return configs


def _conj(G, A, B) -> bool:
    from .permgroup import are_conjugate

    return are_conjugate(G, A, B)


# --- S4 x C2 -----------------------------------------------------------------


def _s4xc2_embed(x: Permutation, e2: int) -> Permutation:
    imgs = list(x.images) + ([5, 4] if e2 == -1 else [4, 5])
    return Permutation(imgs)


def _pi1(g: Permutation) -> Permutation:
    return Permutation(g.images[:4])


def _pi2(g: Permutation) -> int:
    return -1 if g.images[4] == 5 else 1


def _graph_subgroup(G: PermutationGroup, D: PermutationGroup, kernel: PermutationGroup) -> PermutationGroup:
    return _sub(G, [_s4xc2_embed(x, 1 if x in kernel else -1) for x in D.generators] + [_s4xc2_embed(x, 1) for x in kernel.generators])


def _element_name(x: Permutation, e2: int) -> str:
    return f"({x if not x.is_identity() else '1'}, {e2:+d})"


def _s4xc2(report: VerificationReport) -> list[GroupConfiguration]:
    n = _s4_names()
    S4 = n["S4"]
    G = generate([_s4xc2_embed(g, 1) for g in S4.generators] + [_s4xc2_embed(Permutation.identity(4), -1)], 6)
    z = _s4xc2_embed(Permutation.identity(4), -1)
    lift = lambda K: _sub(G, [_s4xc2_embed(x, 1) for x in K.generators] + [z])  # noqa: E731

    # every admissible H is a graph (D4^j, f) with ker f = C4^j or V4^j
    t = G.table
    trivial = 1 << t.identity
    admissible = [K for K in all_subgroups(G) if K.order == 8 and t.core_mask(t.mask_of(K)) == trivial]
    data = set()
    for K in admissible:
        image = frozenset(_pi1(g).images for g in K)
        kernel = frozenset(_pi1(g).images for g in K if _pi2(g) == 1)
        jname = next((j for j in (1, 2, 3) if n[f"D4^{j}"].images == image), None)
        kname = next((nm for nm in ("C4", "V4") if jname and n[f"{nm}^{jname}"].images == kernel), None)
        data.add((jname, kname))
    report.check(
        "index-6 core-free subgroups are the six graphs (D4^j, f)",
        {(j, k) for j in (1, 2, 3) for k in ("C4", "V4")},
        data,
    )
    report.check("number of such subgroups", 6, len(admissible))

    configs_all: list[GroupConfiguration] = []
    for kname in ("C4", "V4"):
        D, Ker = n["D4^1"], n[f"{kname}^1"]
        H = _graph_subgroup(G, D, Ker)
        Hc = lift(D)
        over = _proper_overgroups(G, H)
        report.check(f"ker f = {kname}^1: proper overgroups", [Hc], over)
        report.check(f"ker f = {kname}^1: no quadratic subfield", [], [K for K in over if G.order // K.order == 2])
        report.check(f"ker f = {kname}^1: core(G, D4^1 x C2) = V4^n x C2", lift(n["V4^n"]), core(G, Hc))

        def elems(names, signs):
            out = set()
            for nm in names:
                for x in n[nm]:
                    if x.is_identity():
                        continue
                    for e2 in signs:
                        out.add(_s4xc2_embed(x, e2))
            return out

        lists = {
            "i": elems(["C2^11"], [-1]),
            "ii": elems(["C2^21", "C2^31"], [1]),
            "iii": elems(["C2^1", "C2^2"], [1 if kname == "C4" else -1]),
            "iv": elems(["C2^3", "C2^4", "C2^5", "C2^6"], [1, -1]),
        }
        listed = set().union(*lists.values())
        star = {c for c in _involutions(G) if c not in H}
        report.check(f"ker f = {kname}^1: every listed c satisfies c not in H", set(), {str(c) for c in listed - star})
        report.check(
            f"ker f = {kname}^1: elements with c not in H beyond cases (i)-(iv)",
            {_element_name(Permutation.identity(4), -1)},
            {_element_name(_pi1(c), _pi2(c)) for c in star - listed},
        )
        core_c = core(G, Hc)
        for case, cs in lists.items():
            report.check(
                f"ker f = {kname}^1: case ({case}) satisfies c in core(D4^1 x C2)",
                case in ("i", "ii"),
                all(c in core_c for c in cs),
            )
        valid = sorted(c for c in star if GroupConfiguration(G, H, c).is_valid)
        summary = lambda c: (_pi2(c) == -1 and _pi1(c) in n["C2^11"]) or (  # noqa: E731
            _pi2(c) == 1 and (_pi1(c) in n["C2^21"] or _pi1(c) in n["C2^31"]) and not _pi1(c).is_identity()
        )
        rule_ok = all(
            (classify_configuration(GroupConfiguration(G, H, c)).category is Category.CM_FIELD) == summary(c)
            for c in valid
        )
        report.check(f"ker f = {kname}^1: CM field iff summary rule, over fixed-point-free c", True, rule_ok)
        report.check(
            f"ker f = {kname}^1: fixed-point-free choices of c",
            _S4XC2_VALID[kname],
            sorted(_element_name(_pi1(c), _pi2(c)) for c in valid),
        )
        configs_all.extend(GroupConfiguration(G, H, c) for c in valid)

    configs = _model_configurations(G, report.label)
    report.check(
        "both cubic signatures occur",
        {(3, 0), (1, 1)},
        {cubic_signature_of(classify_configuration(cfg)) for cfg in configs},
    )
    _common_checks(report, G, configs)
    return configs


# Involutions of S4 x C2 fixing no coset of G/H, for H = (D4^1, f).
_S4XC2_VALID = {
    "C4": sorted(["(1, -1)", "((0 2), +1)", "((1 3), +1)"] + [f"({t}, +1)" for t in ("(0 1)", "(2 3)", "(0 3)", "(1 2)")]),
    "V4": sorted(["(1, -1)", "((0 2), -1)", "((1 3), -1)"] + [f"({t}, -1)" for t in ("(0 1)", "(2 3)", "(0 3)", "(1 2)")]),
}


# --- C3^2 : D4 -----------------------------------------------------------------


def c3sq_d4_model() -> dict[str, Any]:
    """The order-72 group on letters ``1,2,3,a,b,c`` (points 0..5) with named parts."""
    lab = "123abc"
    P = lambda *cyc: Permutation.from_cycles(cyc, 6, lab)  # noqa: E731
    alpha, beta = P("123"), P("abc")
    r, s = P("1a2b", "3c"), P("ab")
    G = generate([alpha, beta, r, s], 6)
    return {"G": G, "alpha": alpha, "beta": beta, "r": r, "s": s}


def _c3sq_d4(report: VerificationReport) -> list[GroupConfiguration]:
    m = c3sq_d4_model()
    G, alpha, beta, r, s = m["G"], m["alpha"], m["beta"], m["r"], m["s"]
    inv = lambda g: g.inverse()  # noqa: E731
    report.check("r alpha r^-1 = beta", beta, r * alpha * inv(r))
    report.check("r beta r^-1 = alpha^2", alpha**2, r * beta * inv(r))
    report.check("s alpha s = alpha", alpha, s * alpha * s)
    report.check("s beta s = beta^2", beta**2, s * beta * s)
    N = _sub(G, [alpha, beta])
    As = {
        "C3 x 1": _sub(G, [alpha]),
        "1 x C3": _sub(G, [beta]),
        "diag f1": _sub(G, [alpha * beta]),
        "diag f2": _sub(G, [alpha * beta**2]),
    }
    Ks = {"<r>": [r], "V1": [r * r, s], "V2": [r * r, s * r]}
    feasible = {(a, k) for a, A in As.items() for k, gens in Ks.items() if _normalizes(gens, A)}
    report.check(
        "feasible (A, K) table",
        {("C3 x 1", "V1"), ("1 x C3", "V1"), ("diag f1", "V2"), ("diag f2", "V2")},
        feasible,
    )
    # squares (x sr)^2 and (x s)^2
    squares = {
        "(alpha sr)^2": ((alpha * s * r) ** 2, alpha * beta**2),
        "(alpha^2 sr)^2": ((alpha**2 * s * r) ** 2, alpha**2 * beta),
        "(beta sr)^2": ((beta * s * r) ** 2, beta * alpha**2),
        "(beta^2 sr)^2": ((beta**2 * s * r) ** 2, beta**2 * alpha),
        "(alpha beta s)^2": ((alpha * beta * s) ** 2, alpha**2),
        "(alpha^2 beta^2 s)^2": ((alpha**2 * beta**2 * s) ** 2, alpha),
        "(alpha beta^2 s)^2": ((alpha * beta**2 * s) ** 2, alpha**2),
        "(alpha^2 beta s)^2": ((alpha**2 * beta * s) ** 2, alpha),
    }
    for name, (obs, exp) in squares.items():
        report.check(name, exp, obs)
    quotients = {k: _sub(G, [alpha, beta] + gens) for k, gens in Ks.items()}
    order12 = [K for K in all_subgroups(G) if K.order == 12]
    pairs = set()
    for H in order12:
        A = next((a for a, grp in As.items() if grp.images == (H.images & N.images)), None)
        joined = _sub(G, list(H.generators) + [alpha, beta])
        K = next((k for k, q in quotients.items() if q == joined), None)
        pairs.add((A, K))
    report.check("order-12 subgroups realize exactly the feasible pairs", feasible, pairs)
    report.check("order-12 subgroups all have trivial core", True, all(core(G, H).order == 1 for H in order12))
    over_ok = all(
        [q.order for q in _proper_overgroups(G, H)] == [36] and _proper_overgroups(G, H)[0] in quotients.values()
        for H in order12
    )
    report.check("unique proper overgroup is C3^2 : K of index 2", True, over_ok)
    report.check(
        "no cubic subfield ([L:H] = 2 never occurs)",
        0,
        sum(1 for H in order12 for L in _proper_overgroups(G, H) if L.order == 24),
    )
    report.check("D4 normalizes no A", [], [a for a, A in As.items() if _normalizes([r, s], A)])
    configs = _model_configurations(G, report.label)
    _common_checks(report, G, configs)
    return configs


# --- primitive cases -------------------------------------------------------------


def _primitive(report: VerificationReport, G: PermutationGroup, H_order: int, max_orders: set[int], bad_double: int, An) -> list[GroupConfiguration]:
    orders = {K.order for K in maximal_subgroup_classes(G)}
    report.check("maximal subgroup orders", max_orders, orders)
    report.check(f"a subgroup of order {bad_double} exists", False, any(K.order == bad_double for K in all_subgroups(G)))
    report.check(f"A_n has a subgroup of order {H_order}", False, any(K.order == H_order for K in all_subgroups(An)))
    configs = _model_configurations(G, report.label)
    maxes = maximal_subgroup_classes(G)
    report.check(
        f"every order-{H_order} stabilizer is maximal",
        True,
        all(any(_conj(G, cfg.H, M) for M in maxes) for cfg in configs),
    )
    report.check("no proper intermediate subgroups", True, all(not _proper_overgroups(G, cfg.H) for cfg in configs))
    _common_checks(report, G, configs)
    return configs


def _s5(report: VerificationReport):
    return _primitive(report, symmetric_group(5), 20, {12, 20, 24, 60}, 40, alternating_group(5))


def _s6(report: VerificationReport):
    return _primitive(report, symmetric_group(6), 120, {48, 72, 120, 360}, 240, alternating_group(6))


_CASES: dict[int, Callable[[VerificationReport], list]] = {
    1: _c6,
    2: _s3,
    3: _d6,
    5: _s3xc3,
    6: _a4xc2,
    8: _s4,
    9: _s3xs3,
    11: _s4xc2,
    13: _c3sq_d4,
    14: _s5,
    16: _s6,
}


def verify_case_analysis(code) -> VerificationReport:
    lab = _label(code)
    if lab.degree != 6 or lab.index not in ADMISSIBLE_SEXTIC:
        raise InadmissibleLabel(f"{lab} is not an admissible sextic label")
    report = VerificationReport(lab)
    _CASES[lab.index](report)
    return report


def verify_all() -> list[VerificationReport]:
    return [verify_case_analysis(f"6T{k}") for k in ADMISSIBLE_SEXTIC]
