"""U_{r,s}(sl_n) on tensor powers of its defining module, and the R-matrices.

Generator labels: ``e{i}``, ``f{i}``, ``w{i}``, ``w{i}^-1``, ``w{i}'``,
``w{i}'^-1`` for 1 <= i < n (``w`` stands for omega).

On V the grouplike generators are diagonal:
    omega_j  = r E_jj + s E_{j+1,j+1} + sum_{k != j,j+1} E_kk
    omega'_j = s E_jj + r E_{j+1,j+1} + sum_{k != j,j+1} E_kk
The second line is the form compatible with [e_j, f_j] = (omega_j - omega'_j)/(r - s).
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from gmpy2 import mpq

from .exactring import Params, SingularPoint
from .linalg import (
    Echelon,
    LinOp,
    TensorSpace,
    Vector,
    commutator,
    identity_on,
    image_basis,
    kernel_basis,
    kron_all,
    rank,
    same_span,
)


def generator_labels(n: int) -> list[str]:
    out = []
    for i in range(1, n):
        out += [f"e{i}", f"f{i}", f"w{i}", f"w{i}^-1", f"w{i}'", f"w{i}'^-1"]
    return out


def _diag(n: int, values: Sequence) -> LinOp:
    return LinOp(TensorSpace(n, 1), {k: {k: values[k]} for k in range(n)})


@lru_cache(maxsize=None)
def defining_rep(n: int, params: Params) -> dict[str, LinOp]:
    if n < 2:
        raise ValueError("n must be at least 2")
    r, s = params.r, params.s
    ops = {}
    for j in range(1, n):
        ops[f"e{j}"] = LinOp.matrix_unit(n, j, j + 1)
        ops[f"f{j}"] = LinOp.matrix_unit(n, j + 1, j)
        w = [mpq(1)] * n
        w[j - 1], w[j] = r, s
        wp = [mpq(1)] * n
        wp[j - 1], wp[j] = s, r
        ops[f"w{j}"] = _diag(n, w)
        ops[f"w{j}^-1"] = _diag(n, [1 / x for x in w])
        ops[f"w{j}'"] = _diag(n, wp)
        ops[f"w{j}'^-1"] = _diag(n, [1 / x for x in wp])
    return ops


@lru_cache(maxsize=None)
def coproduct_action(gen: str, n: int, m: int, params: Params) -> LinOp:
    """Action of a generator on V^{(x)m} through the iterated coproduct."""
    base = defining_rep(n, params)
    if gen not in base:
        raise KeyError(f"unknown generator {gen!r}")
    if m == 1:
        return base[gen]
    one = identity_on(n, 1)
    if gen.startswith("w"):
        return kron_all([base[gen]] * m)
    i = gen[1:]
    total = LinOp.zero(TensorSpace(n, m))
    for k in range(1, m + 1):
        if gen.startswith("e"):
            factors = [base[f"w{i}"]] * (k - 1) + [base[gen]] + [one] * (m - k)
        else:
            factors = [one] * (k - 1) + [base[gen]] + [base[f"w{i}'"]] * (m - k)
        total = total + kron_all(factors)
    return total


def tensor_rep(n: int, m: int, params: Params) -> dict[str, LinOp]:
    return {g: coproduct_action(g, n, m, params) for g in generator_labels(n)}


def weight_eigenvalues(mu: Sequence[int], params: Params) -> list[tuple[mpq, mpq]]:
    """(omega_i, omega'_i) eigenvalues r^{mu_i} s^{mu_{i+1}}, r^{mu_{i+1}} s^{mu_i}."""
    r, s = params.r, params.s
    return [
        (r ** mu[i] * s ** mu[i + 1], r ** mu[i + 1] * s ** mu[i])
        for i in range(len(mu) - 1)
    ]


def relation_suite(ops: Mapping[str, LinOp], n: int, params: Params) -> dict[str, bool]:
    """Check (R1)-(R7) for a family of operators indexed by generator labels."""
    r, s = params.r, params.s
    space = ops["e1"].space
    one = LinOp.identity(space)
    zero = LinOp.zero(space)
    idx = range(1, n)
    E = {i: ops[f"e{i}"] for i in idx}
    F = {i: ops[f"f{i}"] for i in idx}
    W = {i: ops[f"w{i}"] for i in idx}
    Wi = {i: ops[f"w{i}^-1"] for i in idx}
    Wp = {i: ops[f"w{i}'"] for i in idx}
    Wpi = {i: ops[f"w{i}'^-1"] for i in idx}

    def pair(i, j):
        # <eps_i, alpha_j>
        return (1 if i == j else 0) - (1 if i == j + 1 else 0)

    res = {}
    grouplike = list(W.values()) + list(Wp.values())
    res["R1"] = all(commutator(a, b).is_zero() for a in grouplike for b in grouplike) and all(
        W[i] @ Wi[i] == one and Wp[i] @ Wpi[i] == one for i in idx
    )
    res["R2"] = all(
        W[i] @ E[j] @ Wi[i] == E[j].scale(r ** pair(i, j) * s ** pair(i + 1, j))
        and W[i] @ F[j] @ Wi[i] == F[j].scale(r ** -pair(i, j) * s ** -pair(i + 1, j))
        for i in idx for j in idx
    )
    res["R3"] = all(
        Wp[i] @ E[j] @ Wpi[i] == E[j].scale(s ** pair(i, j) * r ** pair(i + 1, j))
        and Wp[i] @ F[j] @ Wpi[i] == F[j].scale(s ** -pair(i, j) * r ** -pair(i + 1, j))
        for i in idx for j in idx
    )
    res["R4"] = all(
        commutator(E[i], F[j]) == ((W[i] - Wp[i]).scale(1 / (r - s)) if i == j else zero)
        for i in idx for j in idx
    )
    res["R5"] = all(
        commutator(E[i], E[j]).is_zero() and commutator(F[i], F[j]).is_zero()
        for i in idx for j in idx if abs(i - j) > 1
    )
    ok6 = ok7 = True
    for i in range(1, n - 1):
        a, b = E[i], E[i + 1]
        ok6 &= (a @ a @ b - (a @ b @ a).scale(r + s) + (b @ a @ a).scale(r * s)).is_zero()
        ok6 &= (a @ b @ b - (b @ a @ b).scale(r + s) + (b @ b @ a).scale(r * s)).is_zero()
        a, b = F[i], F[i + 1]
        c, d = 1 / r + 1 / s, 1 / (r * s)
        ok7 &= (a @ a @ b - (a @ b @ a).scale(c) + (b @ a @ a).scale(d)).is_zero()
        ok7 &= (a @ b @ b - (b @ a @ b).scale(c) + (b @ b @ a).scale(d)).is_zero()
    res["R6"] = ok6
    res["R7"] = ok7
    return res


# ---------------------------------------------------------------------------
# R-matrices on V (x) V


def _unit2(n: int, i: int, j: int, k: int, l: int):
    """Entry triplet for E_ij (x) E_kl: v_j (x) v_l -> v_i (x) v_k."""
    return ((i - 1) * n + (k - 1), (j - 1) * n + (l - 1))


def _build(n: int, terms) -> LinOp:
    """terms: iterable of (coefficient, i, j, k, l) for coefficient * E_ij (x) E_kl."""
    entries = []
    for c, i, j, k, l in terms:
        row, col = _unit2(n, i, j, k, l)
        entries.append((row, col, c))
    return LinOp.from_entries(TensorSpace(n, 2), entries)


@lru_cache(maxsize=None)
def rcheck(n: int, params: Params) -> LinOp:
    r, s = params.r, params.s
    terms = [(1, i, i, i, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            terms.append((r, j, i, i, j))
            terms.append((1 / s, i, j, j, i))
            terms.append((1 - r / s, j, j, i, i))
    return _build(n, terms)


def rcheck_z(n: int, z, params: Params) -> LinOp:
    """Baxterized R-matrix with one multiplicative spectral parameter."""
    z = mpq(z)
    r, s = params.r, params.s
    q = r / s
    terms = [(1 - z * q, i, i, i, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i > j:
                terms.append(((1 - z) * r, i, j, j, i))
                terms.append((1 - q, i, i, j, j))
            elif i < j:
                terms.append(((1 - z) / s, i, j, j, i))
                terms.append((z * (1 - q), i, i, j, j))
    return _build(n, terms)


def jimbo_rcheck(n: int, z, q) -> LinOp:
    """The one-parameter trigonometric R-matrix in its standard display form."""
    z, q = mpq(z), mpq(q)
    terms = [(1 - z * q * q, i, i, i, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                terms.append(((1 - z) * q, i, j, j, i))
            if i > j:
                terms.append((1 - q * q, i, i, j, j))
            elif i < j:
                terms.append((z * (1 - q * q), i, i, j, j))
    return _build(n, terms)


def rcheck_xy(n: int, x, y, params: Params) -> LinOp:
    """R(x, y) = s y R(x/y) / (y - x)."""
    x, y = mpq(x), mpq(y)
    if x == y:
        raise SingularPoint("R(x, y) is singular at x = y")
    if y == 0:
        raise SingularPoint("R(x, y) needs y != 0")
    return rcheck_z(n, x / y, params).scale(params.s * y / (y - x))


def rcheck_xy_display(n: int, x, y, params: Params) -> LinOp:
    """The expanded four-term display of R(x, y), transcribed literally.

    Kept only to document that it disagrees with s y R(x/y)/(y - x).
    """
    x, y = mpq(x), mpq(y)
    r, s = params.r, params.s
    terms = [((s * y - r * x) / (y - x), i, i, i, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i > j:
                terms.append((s * r, i, j, j, i))
                terms.append(((s - r) / (y - x), i, i, j, j))
            elif i < j:
                terms.append((mpq(1), i, j, j, i))
                terms.append(((s - r * x) / (y - x), i, i, j, j))
    return _build(n, terms)


def embed_at(op: LinOp, i: int, m: int) -> LinOp:
    """op acting on tensor factors (i, i+1) of V^{(x)m}."""
    if op.space.m != 2:
        raise ValueError("embed_at expects an operator on V (x) V")
    if not 1 <= i < m:
        raise ValueError(f"position {i} out of range for m={m}")
    n = op.space.n
    parts = []
    if i > 1:
        parts.append(identity_on(n, i - 1))
    parts.append(op)
    if m - i - 1 > 0:
        parts.append(identity_on(n, m - i - 1))
    return kron_all(parts)


@lru_cache(maxsize=None)
def rcheck_at(i: int, n: int, m: int, params: Params) -> LinOp:
    return embed_at(rcheck(n, params), i, m)


def braid_checks(n: int, m: int, params: Params) -> dict[str, bool]:
    R = [rcheck_at(i, n, m, params) for i in range(1, m)]
    one = identity_on(n, m)
    q = params.q
    return {
        "braid": all(R[i] @ R[i + 1] @ R[i] == R[i + 1] @ R[i] @ R[i + 1] for i in range(m - 2)),
        "far commutation": all(
            R[i] @ R[j] == R[j] @ R[i] for i in range(m - 1) for j in range(i + 2, m - 1)
        ),
        "quadratic": all(R_i @ R_i == R_i.scale(1 - q) + one.scale(q) for R_i in R),
    }


def spectral_ybe(n: int, z, w, params: Params) -> bool:
    """R_1(z) R_2(zw) R_1(w) == R_2(w) R_1(zw) R_2(z) on V^{(x)3}."""
    z, w = mpq(z), mpq(w)
    A = lambda t: embed_at(rcheck_z(n, t, params), 1, 3)  # noqa: E731
    B = lambda t: embed_at(rcheck_z(n, t, params), 2, 3)  # noqa: E731
    return A(z) @ B(z * w) @ A(w) == B(w) @ A(z * w) @ B(z)


def two_parameter_ybe(n: int, x, y, z, params: Params) -> bool:
    """R_1(x,y) R_2(x,z) R_1(y,z) == R_2(y,z) R_1(x,z) R_2(x,y) on V^{(x)3}."""
    A = lambda a, b: embed_at(rcheck_xy(n, a, b, params), 1, 3)  # noqa: E731
    B = lambda a, b: embed_at(rcheck_xy(n, a, b, params), 2, 3)  # noqa: E731
    return A(x, y) @ B(x, z) @ A(y, z) == B(y, z) @ A(x, z) @ B(x, y)


# ---------------------------------------------------------------------------
# symmetric and exterior squares


def sym2_basis(n: int, params: Params) -> list[Vector]:
    """v_i (x) v_i, and v_i (x) v_j + s v_j (x) v_i for i < j."""
    sp = TensorSpace(n, 2)
    out = [{sp.index((i, i)): mpq(1)} for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append({sp.index((i, j)): mpq(1), sp.index((j, i)): params.s})
    return out


def wedge2_basis(n: int, params: Params) -> list[Vector]:
    """v_i (x) v_j - r v_j (x) v_i for i < j."""
    sp = TensorSpace(n, 2)
    return [
        {sp.index((i, j)): mpq(1), sp.index((j, i)): -params.r}
        for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ]


def is_invariant(vectors: list[Vector], ops: Mapping[str, LinOp]) -> bool:
    """True if span(vectors) is stable under every operator."""
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    base = ech.rank
    for op in ops.values():
        for v in vectors:
            img = op.apply(v)
            if img and ech.reduce(img):
                return False
    return ech.rank == base


def special_point_identification(n: int, params: Params) -> dict:
    """Identify the images and kernels of R(1, s/r) and R(1, r/s).

    Returns which of S^2, Lambda^2 each image equals, and whether the image
    at one point equals the kernel at the other.
    """
    S2, L2 = sym2_basis(n, params), wedge2_basis(n, params)
    out = {}
    ops = {"1,s/r": rcheck_xy(n, 1, params.ratio, params),
           "1,r/s": rcheck_xy(n, 1, params.q, params)}
    images = {k: image_basis(op) for k, op in ops.items()}
    kernels = {k: kernel_basis(op) for k, op in ops.items()}
    for k in ops:
        label = None
        if same_span(images[k], S2):
            label = "S2"
        elif same_span(images[k], L2):
            label = "L2"
        out[f"image({k})"] = label
    out["image(1,s/r) == kernel(1,r/s)"] = same_span(images["1,s/r"], kernels["1,r/s"])
    out["image(1,r/s) == kernel(1,s/r)"] = same_span(images["1,r/s"], kernels["1,s/r"])
    out["as set"] = {out["image(1,s/r)"], out["image(1,r/s)"]} == {"S2", "L2"}
    reps = tensor_rep(n, 2, params)
    out["S2 invariant"] = is_invariant(S2, reps)
    out["L2 invariant"] = is_invariant(L2, reps)
    out["S2 at (1,r/s)"] = (
        out["image(1,r/s)"] == "S2" and out["image(1,s/r)"] == "L2"
    )
    return out


def fundamental_module_dim(n: int, k: int, params: Params) -> int:
    """n^k minus the dimension of sum_i V^{(x)i} (x) S^2 (x) V^{(x)(k-i-2)}."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if k == 1:
        return n
    sp = TensorSpace(n, k)
    S2 = sym2_basis(n, params)
    sp2 = TensorSpace(n, 2)
    ech = Echelon()
    for i in range(k - 1):
        pre = TensorSpace(n, i).words() if i else [()]
        post = TensorSpace(n, k - i - 2).words() if k - i - 2 else [()]
        for a in pre:
            for b in post:
                for v in S2:
                    vec = {sp.index(a + sp2.word(j) + b): c for j, c in v.items()}
                    ech.add(vec)
    return n ** k - ech.rank


def fundamental_dims(n_max: int, params: Params) -> dict[tuple[int, int], tuple[int, int]]:
    return {(n, k): (fundamental_module_dim(n, k, params), comb(n, k))
            for n in range(2, n_max + 1) for k in range(1, n + 1)}
