"""Hecke action on V^{(x)m}, images of idempotents, and the duality audit."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from gmpy2 import mpq

from .exactring import Params
from .fusion import fused_idempotent
from .hecke import HeckeElement, jm_idempotent
from .linalg import (
    Echelon,
    LinOp,
    TensorSpace,
    Vector,
    combine,
    identity_on,
    image_basis,
    nullspace,
    rank,
)
from .qalgebra import coproduct_action, generator_labels, rcheck_at, tensor_rep, weight_eigenvalues
from .tableaux import (
    Partition,
    StandardTableau,
    all_permutations,
    all_standard_tableaux,
    compositions,
    hook_content_dim,
    kostka,
    num_standard,
    partitions,
    reduced_word,
    times_simple,
)

__all__ = [
    "ModuleReport",
    "commutes_with_u_action",
    "hecke_action",
    "highest_weight_vectors",
    "image_basis",
    "module_of",
    "perm_operators",
    "schur_weyl_audit",
    "weight_multiplicities",
]


@lru_cache(maxsize=None)
def perm_operators(n: int, m: int, params: Params) -> dict[tuple, LinOp]:
    """rho(T_sigma) for every sigma in S_m, built along reduced words."""
    ops = {tuple(range(1, m + 1)): identity_on(n, m)}
    for sigma in sorted(all_permutations(m), key=lambda p: len(reduced_word(p))):
        if sigma in ops:
            continue
        i = reduced_word(sigma)[-1]
        ops[sigma] = ops[times_simple(sigma, i)] @ rcheck_at(i, n, m, params)
    return ops


def hecke_action(h: HeckeElement, n: int) -> LinOp:
    """rho(h) with T_i -> R-check acting on factors (i, i+1)."""
    ops = perm_operators(n, h.m, h.params)
    out = LinOp.zero(TensorSpace(n, h.m))
    for sigma, c in h.terms.items():
        out = out + ops[sigma].scale(c)
    return out


def weight_blocks(vectors: list[Vector], space: TensorSpace) -> dict[tuple, list[Vector]]:
    """Project each vector onto the letter-content blocks of the basis."""
    blocks: dict[tuple, list[Vector]] = defaultdict(list)
    for v in vectors:
        parts: dict[tuple, Vector] = defaultdict(dict)
        for i, c in v.items():
            parts[space.content(i)][i] = c
        for mu, part in parts.items():
            blocks[mu].append(part)
    return blocks


def weight_multiplicities(basis: list[Vector], n: int, m: int) -> dict[tuple, int]:
    """Dimension of the projection of span(basis) onto each weight block."""
    space = TensorSpace(n, m)
    out = {}
    for mu, vecs in weight_blocks(basis, space).items():
        k = rank(vecs)
        if k:
            out[mu] = k
    return dict(sorted(out.items(), reverse=True))


@dataclass
class HighestWeightVector:
    vector: Vector
    weight: tuple
    eigenvalues: list  # (omega_i, omega'_i) pairs read off the action


def _eigen_pairs(vec: Vector, n: int, m: int, params: Params) -> list | None:
    """(omega_i, omega'_i) eigenvalues of vec, or None if it is not an eigenvector."""
    pivot = min(vec)
    out = []
    for i in range(1, n):
        pair = []
        for g in (f"w{i}", f"w{i}'"):
            img = coproduct_action(g, n, m, params).apply(vec)
            lam = img.get(pivot, mpq(0)) / vec[pivot]
            if img != {k: v * lam for k, v in vec.items() if v * lam}:
                return None
            pair.append(lam)
        out.append(tuple(pair))
    return out


def highest_weight_vectors(basis: list[Vector], n: int, m: int, params: Params) -> list[HighestWeightVector]:
    """Weight-homogeneous basis of the vectors in span(basis) killed by every e_i."""
    space = TensorSpace(n, m)
    es = [coproduct_action(f"e{i}", n, m, params) for i in range(1, n)]
    out = []
    for mu, vecs in sorted(weight_blocks(basis, space).items(), reverse=True):
        block = image_basis(vecs)
        if not block:
            continue
        # stack e_1 b_j, e_2 b_j, ... into one column per block vector
        cols = []
        for b in block:
            col = {}
            for k, e in enumerate(es):
                for i, v in e.apply(b).items():
                    col[k * space.dim + i] = v
            cols.append(col)
        for coeffs in nullspace(cols):
            vec = combine(coeffs, block)
            out.append(HighestWeightVector(vec, mu, _eigen_pairs(vec, n, m, params)))
    return out


def commutes_with_u_action(op: LinOp, n: int, m: int, params: Params) -> bool:
    return all(op @ g == g @ op for g in tensor_rep(n, m, params).values())


def idempotent(lam, T, params: Params, method: str = "jm") -> HeckeElement:
    if method == "jm":
        return jm_idempotent(lam, T, params)
    if method == "fusion":
        return fused_idempotent(lam, T, params)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class ModuleReport:
    lam: Partition
    tableau: StandardTableau
    n: int
    rank: int
    predicted_dim: int
    weight_multiplicities: dict
    highest_weight: tuple | None
    hw_eigenvalues: list | None
    flags: dict = field(default_factory=dict)
    basis: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def to_dict(self, with_vectors: bool = False) -> dict:
        space = TensorSpace(self.n, self.lam.weight)
        d = {
            "lambda": str(self.lam),
            "tableau": str(self.tableau),
            "n": self.n,
            "rank": self.rank,
            "predicted_dim": self.predicted_dim,
            "weight_multiplicities": {
                ",".join(map(str, mu)): k for mu, k in self.weight_multiplicities.items()
            },
            "highest_weight": None if self.highest_weight is None
            else ",".join(map(str, self.highest_weight)),
            "hw_eigenvalues": None if self.hw_eigenvalues is None
            else [[str(a), str(b)] for a, b in self.hw_eigenvalues],
            "flags": dict(self.flags),
        }
        if with_vectors:
            d["basis"] = [
                {"".join(map(str, space.word(i))): str(c) for i, c in sorted(v.items())}
                for v in self.basis
            ]
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(**kw))

    @classmethod
    def from_dict(cls, d: dict) -> "ModuleReport":
        from .exactring import rational

        def parse_vec(v: dict) -> Vector:
            sp = TensorSpace(d["n"], Partition.parse(d["lambda"]).weight)
            return {sp.index(tuple(int(c) for c in w)): rational(x) for w, x in v.items()}

        return cls(
            lam=Partition.parse(d["lambda"]),
            tableau=StandardTableau.parse(d["tableau"]),
            n=d["n"],
            rank=d["rank"],
            predicted_dim=d["predicted_dim"],
            weight_multiplicities={
                tuple(int(x) for x in k.split(",")): v for k, v in d["weight_multiplicities"].items()
            },
            highest_weight=None if d["highest_weight"] is None
            else tuple(int(x) for x in d["highest_weight"].split(",")),
            hw_eigenvalues=None if d["hw_eigenvalues"] is None
            else [tuple(rational(x) for x in pair) for pair in d["hw_eigenvalues"]],
            flags=dict(d["flags"]),
            basis=[parse_vec(v) for v in d.get("basis", [])],
        )

    def __eq__(self, other):
        if not isinstance(other, ModuleReport):
            return NotImplemented
        return self.to_dict(with_vectors=True) == other.to_dict(with_vectors=True)


def module_of(lam, T, n: int, params: Params, method: str = "jm") -> ModuleReport:
    """Realize E_T(V^{(x)m}) and check it against the predicted irreducible."""
    lam = Partition.coerce(lam)
    T = StandardTableau.coerce(T)
    if T.shape != lam:
        raise ValueError(f"tableau {T} does not have shape {lam}")
    m = lam.weight
    E = idempotent(lam, T, params, method)
    P = hecke_action(E, n)
    basis = image_basis(P)
    predicted = hook_content_dim(lam, n)
    mults = weight_multiplicities(basis, n, m)
    flags = {"rank = hook-content dim": len(basis) == predicted}
    expected = {}
    if len(lam) <= n:
        for mu in compositions(m, n):
            k = kostka(lam, mu)
            if k:
                expected[mu] = k
    flags["weights = Kostka"] = mults == expected
    hw = highest_weight_vectors(basis, n, m, params)
    flags["commutes with U"] = commutes_with_u_action(P, n, m, params)
    if len(lam) > n:
        flags["no highest weight"] = not hw
        return ModuleReport(lam, T, n, len(basis), predicted, mults, None, None, flags, basis)
    flags["unique highest-weight line"] = len(hw) == 1
    weight = eig = None
    if hw:
        weight, eig = hw[0].weight, hw[0].eigenvalues
        flags["highest weight = lambda"] = weight == lam.padded(n)
        flags["eigenvalues match weight formula"] = eig == weight_eigenvalues(lam.padded(n), params)
    return ModuleReport(lam, T, n, len(basis), predicted, mults, weight, eig, flags, basis)


@dataclass
class AuditReport:
    n: int
    m: int
    items: dict = field(default_factory=dict)
    modules: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v["ok"] for v in self.items.values()) and all(r.ok for r in self.modules)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "ok": self.ok, "items": self.items,
                "modules": [r.to_dict() for r in self.modules]}


def schur_weyl_audit(n: int, m: int, params: Params, method: str = "jm") -> AuditReport:
    """Check the tensor-space decomposition against the combinatorial predictions."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    rep = AuditReport(n, m)
    lams = [lam for lam in partitions(m) if len(lam) <= n]
    total = sum(num_standard(lam) * hook_content_dim(lam, n) for lam in lams)
    rep.items["dimension count"] = {"value": total, "expected": n ** m, "ok": total == n ** m}

    family = {(lam, T): hecke_action(idempotent(lam, T, params, method), n)
              for lam, T in all_standard_tableaux(m)}
    acc = LinOp.zero(TensorSpace(n, m))
    for P in family.values():
        acc = acc + P
    rep.items["sum of projectors = Id"] = {"ok": acc == identity_on(n, m)}

    ortho = True
    keys = list(family)
    for a in keys:
        for b in keys:
            prod = family[a] @ family[b]
            if a == b:
                ortho &= prod == family[a]
            else:
                ortho &= prod.is_zero()
    rep.items["orthogonal projectors"] = {"ok": ortho}

    rank_sum = 0
    ranks_ok = True
    for (lam, T), P in family.items():
        k = rank(P)
        rank_sum += k
        ranks_ok &= k == hook_content_dim(lam, n)
    rep.items["ranks = hook-content dims"] = {"ok": ranks_ok}
    rep.items["sum of ranks"] = {"value": rank_sum, "expected": n ** m, "ok": rank_sum == n ** m}

    span = rank(list(op_as_vector(P) for P in perm_operators(n, m, params).values()))
    expected = sum(num_standard(lam) ** 2 for lam in lams)
    rep.items["commutant span"] = {"value": span, "expected": expected, "ok": span == expected}
    if n >= m:
        rep.items["commutant span = m!"] = {"ok": span == factorial(m)}

    for lam, T in all_standard_tableaux(m):
        rep.modules.append(module_of(lam, T, n, params, method))
    return rep


def op_as_vector(op: LinOp) -> Vector:
    d = op.space.dim
    return {j * d + i: v for j, col in op.cols.items() for i, v in col.items()}
