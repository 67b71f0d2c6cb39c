"""Quantum Koszul complex machinery: the dual differentials d_m*, extraction
of constant Hochschild 2-cocycles as kernels of d_3*, twisted G-invariance via
the Reynolds projector, evaluation of the induced Hochschild cocycle on pairs
of variables, quantum skew-symmetrization, and the resulting cohomological
computation of the parameter space.

Cochains are elements of S_q(V) t_g (x) Lambda^m_{q^-1}(V*): finite sums of
(monomial exponent gamma, group element g, wedge index beta) with scalar
coefficients.  The group acts by the linear action on polynomial parts, by
twisted conjugation t_g -> t_h t_g t_h^-1 on group parts, and by the
inverse-transpose (contragredient) action on dual wedges.
"""

from __future__ import annotations

from .groups import Cocycle2, GroupAlgebraElement, twisted_conjugate
from .linalg import ExactMatrix, RowReducer, kernel_basis
from .pbw import ExtensionError, KappaMap, check_pbw_conditions
from .quantum import (
    GroupAction,
    QMatrix,
    act_monomial,
    check_action_extends,
    mono_times_variable,
    variable_times_mono,
)
from .scalars import MINUS_ONE, ONE, ZERO, rational


class Cochain:
    """Element of (+)_g S_q(V) t_g (x) Lambda^m_{q^-1}(V*), all wedge indices
    of the same weight m; keys are (gamma, g, beta)."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs=None):
        self.n = n
        self.degree = degree
        clean = {}
        for (gamma, g, beta), c in (coeffs or {}).items():
            if sum(beta) != degree:
                raise ValueError(f"wedge weight {sum(beta)} does not match degree {degree}")
            if not c.is_zero():
                clean[(tuple(gamma), g, tuple(beta))] = c
        self.coeffs = clean

    @staticmethod
    def constant_two(n: int, g: int, r: int, s: int, coeff=ONE) -> "Cochain":
        """t_g (x) v_r* ^ v_s* with r < s."""
        beta = tuple(1 if t in (r, s) else 0 for t in range(n))
        return Cochain(n, 2, {((0,) * n, g, beta): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(not any(gamma) for (gamma, _, _) in self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc = out.get(k)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(k, None)
            else:
                out[k] = acc
        res = Cochain.__new__(Cochain)
        res.n, res.degree, res.coeffs = self.n, self.degree, out
        return res

    def __sub__(self, other):
        return self + other.scale(MINUS_ONE)

    def scale(self, s) -> "Cochain":
        if s.is_zero():
            return Cochain(self.n, self.degree)
        res = Cochain.__new__(Cochain)
        res.n, res.degree = self.n, self.degree
        res.coeffs = {k: s * c for k, c in self.coeffs.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    def wedge_value(self, r: int, s: int) -> GroupAlgebraElement:
        """For constant degree-2 cochains: the C^alpha G value on v_r ^ v_s
        (r < s), i.e. sum_g coeff(g, r, s) t_g."""
        coeffs = {}
        for (gamma, g, beta), c in self.coeffs.items():
            if any(gamma):
                raise ValueError("wedge_value needs a constant cochain")
            if beta[r] and beta[s]:
                coeffs[g] = coeffs.get(g, ZERO) + c
        return GroupAlgebraElement(coeffs)

    def __repr__(self):
        parts = []
        for (gamma, g, beta), c in sorted(self.coeffs.items()):
            mono = "".join(f"v{i}^{e}" for i, e in enumerate(gamma) if e) or "1"
            wedge = "^".join(f"v{i}*" for i, b in enumerate(beta) if b) or "1"
            parts.append(f"({c.serialize()}){mono}.t{g}(x){wedge}")
        return "<" + (" + ".join(parts) or "0") + ">"


def apply_dm_star(x: Cochain, action: GroupAction, q: QMatrix) -> Cochain:
    """The dual Koszul differential: a term a t_g (x) (v*)^beta of degree m-1
    maps to

      sum_{i: beta_i = 0} (-1)^(beta_0+..+beta_i)
        [ (prod_{s<=i} q_si^beta_s) v_i a
          - (prod_{s>=i} q_is^beta_s) a g(v_i) ] t_g (x) (v*)^(beta+[i]).
    """
    n = x.n
    out: dict = {}

    def bump(key, val):
        if val.is_zero():
            return
        acc = out.get(key)
        acc = val if acc is None else acc + val
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc

    for (gamma, g, beta), c in x.coeffs.items():
        for i in range(n):
            if beta[i]:
                continue
            sign = MINUS_ONE if (sum(beta[: i + 1]) & 1) else ONE
            newbeta = tuple(b + (1 if t == i else 0) for t, b in enumerate(beta))
            left = ONE
            for s in range(i + 1):
                if beta[s]:
                    left = left * q(s, i)
            right = ONE
            for s in range(i, n):
                if beta[s]:
                    right = right * q(i, s)
            # v_i * v^gamma
            f, gam1 = variable_times_mono(i, gamma, q)
            bump((gam1, g, newbeta), c * sign * left * f)
            # v^gamma * g(v_i)
            for k, m in action.rows_nz[g][i]:
                f2, gam2 = mono_times_variable(gamma, k, q)
                bump((gam2, g, newbeta), -(c * sign * right * m * f2))
    return Cochain(n, x.degree + 1, out)


def _wedge_index(n: int, positions) -> tuple:
    return tuple(1 if t in positions else 0 for t in range(n))


def constant_cocycle_basis(action: GroupAction, q: QMatrix, alpha=None) -> list[Cochain]:
    """Per group element g, a kernel basis of d_3* restricted to the constant
    cochains span{t_g (x) v_j* ^ v_k*}; the union over g spans all constant
    Hochschild 2-cocycles (the constant part of the image of d_2* is zero, so
    kernel elements represent distinct classes).  The 2-cocycle alpha plays no
    role here: the S_q(V)-bimodule structure does not depend on it.
    """
    rep = check_action_extends(action, q)
    if not rep["symmetric"] or not rep["exterior"]:
        raise ExtensionError("action must extend to S_q(V) and Lambda_q(V)")
    n = action.n
    G = action.group
    pairs = [(j, k) for j in range(n) for k in range(j + 1, n)]
    basis: list[Cochain] = []
    for g in range(G.size):
        images = [
            apply_dm_star(Cochain.constant_two(n, g, j, k), action, q) for (j, k) in pairs
        ]
        coords = sorted({key for img in images for key in img.coeffs})
        coord_index = {key: r for r, key in enumerate(coords)}
        entries = {}
        for col, img in enumerate(images):
            for key, c in img.coeffs.items():
                entries[(coord_index[key], col)] = c
        mat = ExactMatrix(len(coords), len(pairs), entries)
        for vec in kernel_basis(mat):
            coeffs = {}
            for col, c in enumerate(vec):
                if not c.is_zero():
                    j, k = pairs[col]
                    coeffs[((0,) * n, g, _wedge_index(n, (j, k)))] = c
            basis.append(Cochain(n, 2, coeffs))
    return basis


# ---------------------------------------------------------------------------
# G-action on cochains and the Reynolds projector
# ---------------------------------------------------------------------------


def _contragredient_wedge2(action: GroupAction, q: QMatrix, h: int, r: int, s: int):
    """h(v_r* ^ v_s*) expanded on the wedge basis: the coefficient of
    v_k* ^ v_l* (k < l) is B[k][r] B[l][s] - q_kl B[l][r] B[k][s], where B is
    the matrix of h^-1 (inverse-transpose action on V*)."""
    hinv = action.group.inv[h]
    colr = action.cols_nz[hinv][r]
    cols = action.cols_nz[hinv][s]
    out = {}
    for k, bkr in colr:
        for l, bls in cols:
            if k == l:
                continue
            if k < l:
                key, val = (k, l), bkr * bls
            else:
                key, val = (l, k), -(q(l, k) * bkr * bls)
            acc = out.get(key)
            acc = val if acc is None else acc + val
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def act_on_cochain(h: int, x: Cochain, action: GroupAction, q: QMatrix, alpha: Cocycle2) -> Cochain:
    """The twisted action of h: linear action on the polynomial part, twisted
    conjugation on t_g, contragredient action on the dual wedge (degree 2)."""
    if x.degree != 2:
        raise ValueError("the cochain action is implemented in degree 2")
    n = x.n
    G = action.group
    out: dict = {}

    def bump(key, val):
        acc = out.get(key)
        acc = val if acc is None else acc + val
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc

    for (gamma, g, beta), c in x.coeffs.items():
        ratio = alpha.conj_ratio(h, g)
        gc = G.conjugate(h, g)
        r, s = [t for t in range(n) if beta[t]]
        wedges = _contragredient_wedge2(action, q, h, r, s)
        if any(gamma):
            polys = act_monomial(action, q, h, gamma)
        else:
            polys = {gamma: ONE}
        for (k, l), wv in wedges.items():
            nb = _wedge_index(n, (k, l))
            for gam, pv in polys.items():
                bump((gam, gc, nb), c * ratio * wv * pv)
    return Cochain(n, 2, out)


def reynolds_project(x, action: GroupAction, q: QMatrix, alpha: Cocycle2):
    """Average over the twisted G-action: (1/|G|) sum_h h(x).  Idempotent;
    accepts a degree-2 Cochain or a map on variable pairs
    {(i, j): GroupAlgebraElement}."""
    G = action.group
    inv_order = rational(1) / rational(G.size)
    if isinstance(x, Cochain):
        total = Cochain(x.n, x.degree)
        for h in range(G.size):
            total = total + act_on_cochain(h, x, action, q, alpha)
        return total.scale(inv_order)
    # map on variable pairs: (h . mu)(v_i, v_j) =
    #   sum_{k,l} (h^-1)^i_k (h^-1)^j_l  h(mu(v_k, v_l))
    n = action.n
    out = {}
    for (i, j) in x:
        acc = GroupAlgebraElement.zero()
        for h in range(G.size):
            hinv = G.inv[h]
            rows = action.rows_nz[hinv]
            for k, aik in rows[i]:
                for l, ajl in rows[j]:
                    base = x.get((k, l))
                    if base is None or base.is_zero():
                        continue
                    acc = acc + twisted_conjugate(h, base, alpha).scale(aik * ajl)
        out[(i, j)] = acc.scale(inv_order)
    return out


# ---------------------------------------------------------------------------
# the induced Hochschild cocycle on pairs of variables
# ---------------------------------------------------------------------------


def composition_image(
    eta: Cochain, i: int, j: int, action: GroupAction, q: QMatrix, alpha: Cocycle2
) -> GroupAlgebraElement:
    """[Theta_2* R_2 Psi_2*(eta)](v_i (x) v_j) for a constant degree-2 eta:

        (1/|G|) sum_g  g( eta( Psi_2(1 (x) g^-1(v_i) (x) g^-1(v_j) (x) 1) ) )

    with Psi_2 keeping only tensor factors v_k (x) v_l with k < l.
    """
    if not eta.is_constant():
        raise ValueError("the induced cocycle is defined for constant cochains")
    G = action.group
    values: dict = {}
    for (gamma, g, beta), c in eta.coeffs.items():
        r, s = [t for t in range(eta.n) if beta[t]]
        values.setdefault((r, s), {})
        values[(r, s)][g] = values[(r, s)].get(g, ZERO) + c
    pair_elts = {k: GroupAlgebraElement(v) for k, v in values.items()}
    acc = GroupAlgebraElement.zero()
    for g in range(G.size):
        ginv = G.inv[g]
        rows = action.rows_nz[ginv]
        for k, aik in rows[i]:
            for l, ajl in rows[j]:
                if k >= l:
                    continue
                base = pair_elts.get((k, l))
                if base is None:
                    continue
                acc = acc + twisted_conjugate(g, base, alpha).scale(aik * ajl)
    return acc.scale(rational(1) / rational(G.size))


def induced_cocycle_eval(
    eta: Cochain, i: int, j: int, action: GroupAction, q: QMatrix, alpha: Cocycle2,
    require_invariant: bool = True,
) -> GroupAlgebraElement:
    """mu_1(v_i, v_j) for an invariant constant 2-cochain eta.  The formula is
    the same averaged composition as composition_image; the invariance
    precondition is what ties its skew-symmetrization back to eta itself."""
    if require_invariant:
        if reynolds_project(eta, action, q, alpha) != eta:
            raise ValueError("eta is not G-invariant")
    return composition_image(eta, i, j, action, q, alpha)


def skew_symmetrize(mu_pairs: dict, q: QMatrix, group, n: int) -> KappaMap:
    """kappa(v_i, v_j) = mu_1(v_i, v_j) - q_ij mu_1(v_j, v_i) on pairs i < j;
    the result automatically satisfies the quantum antisymmetry."""
    values = {}
    for i in range(n):
        for j in range(i + 1, n):
            a = mu_pairs.get((i, j), GroupAlgebraElement.zero())
            b = mu_pairs.get((j, i), GroupAlgebraElement.zero())
            values[(i, j)] = a - b.scale(q(i, j))
    return KappaMap(group, n, q, values)


def cohomological_parameter_space(
    action: GroupAction, q: QMatrix, alpha: Cocycle2, recheck: bool = True
) -> list[KappaMap]:
    """Parameter space through cohomology: constant 2-cocycle kernel, Reynolds
    projection, rank filtering to an independent invariant spanning set, then
    the induced Hochschild cocycle and its quantum skew-symmetrization.

    For each invariant representative eta the computed kappa must agree with
    the direct pairing kappa(v_i, v_j) = eta(v_i ^ v_j); that identity is
    asserted, as an internal consistency check of the whole chain.
    """
    n = action.n
    G = action.group
    kernel = constant_cocycle_basis(action, q, alpha)
    projected = [reynolds_project(c, action, q, alpha) for c in kernel]
    red = RowReducer()
    npairs = n * (n - 1) // 2
    pair_rank = {
        (r, s): idx
        for idx, (r, s) in enumerate((r, s) for r in range(n) for s in range(r + 1, n))
    }
    invariants = []
    for eta in projected:
        if eta.is_zero():
            continue
        row = {}
        for (gamma, g, beta), c in eta.coeffs.items():
            r, s = [t for t in range(n) if beta[t]]
            row[g * npairs + pair_rank[(r, s)]] = c
        if red.insert(row) is not None:
            invariants.append(eta)
    basis = []
    for eta in invariants:
        mu = {}
        for i in range(n):
            for j in range(n):
                if i != j:
                    mu[(i, j)] = composition_image(eta, i, j, action, q, alpha)
        kappa = skew_symmetrize(mu, q, G, n)
        for i in range(n):
            for j in range(i + 1, n):
                if kappa.value(i, j) != eta.wedge_value(i, j):
                    raise ArithmeticError(
                        "skew-symmetrized induced cocycle disagrees with the "
                        f"wedge pairing at ({i}, {j}); engine inconsistency"
                    )
        basis.append(kappa)
    if recheck:
        for kappa in basis:
            rep = check_pbw_conditions(kappa, action, q, alpha)
            if not rep["passed"]:
                raise ArithmeticError(
                    "cohomological pipeline produced a kappa failing the PBW "
                    f"checker; violations {rep['violations'][:3]}"
                )
    return basis
