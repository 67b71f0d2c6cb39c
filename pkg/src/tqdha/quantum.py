"""The quantum symmetric algebra S_q(V), the twisted skew group algebra
S_q(V) #_a G, linear group actions on them, and quantum minor determinants.

Conventions.  Variables are 0-based.  A monomial exponent is a tuple gamma of
n nonnegative integers standing for v_0^g0 ... v_{n-1}^g(n-1); normally
ordered monomials v^gamma t_g form the canonical basis of the skew algebra.
Action matrices follow the row convention g(v_i) = sum_k M[g][i][k] v_k, so
matrices compose as M[gh] = M[h] . M[g].
"""

from __future__ import annotations

from .groups import Cocycle2, FiniteGroup
from .scalars import MINUS_ONE, ONE, ZERO, CyclotomicScalar, parse_scalar, rational


class ActionError(ValueError):
    """A group action table is inconsistent or does not extend."""


class QMatrixError(ValueError):
    """A quantum parameter matrix violates q_ii = 1 or q_ji = q_ij^-1."""


class QMatrix:
    """Tuple of nonzero scalars q_ij with q_ii = 1 and q_ji = q_ij^-1."""

    def __init__(self, entries):
        self.n = len(entries)
        self.q = tuple(tuple(row) for row in entries)
        for i in range(self.n):
            if len(self.q[i]) != self.n:
                raise QMatrixError("q matrix must be square")
            if not self.q[i][i].is_one():
                raise QMatrixError(f"q[{i}][{i}] must be 1")
            for j in range(self.n):
                if self.q[i][j].is_zero():
                    raise QMatrixError(f"q[{i}][{j}] is zero")
                if not (self.q[i][j] * self.q[j][i]).is_one():
                    raise QMatrixError(f"q[{j}][{i}] is not the inverse of q[{i}][{j}]")

    def __call__(self, i: int, j: int) -> CyclotomicScalar:
        return self.q[i][j]

    @staticmethod
    def uniform(n: int, value) -> "QMatrix":
        """All off-diagonal entries equal to value (which must be +-1 to keep
        q_ji = q_ij^-1 automatic; other constants are rejected by validation
        unless self-inverse)."""
        v = value if isinstance(value, CyclotomicScalar) else rational(value)
        rows = [[ONE if i == j else v for j in range(n)] for i in range(n)]
        return QMatrix(rows)

    @staticmethod
    def from_strings(rows) -> "QMatrix":
        return QMatrix([[parse_scalar(s) for s in row] for row in rows])

    def serialize(self):
        return [[self.q[i][j].serialize() for j in range(self.n)] for i in range(self.n)]


class GroupAction:
    """A linear action of a finite group on V, one n x n matrix per element."""

    def __init__(self, group: FiniteGroup, matrices, validate: bool = True):
        self.group = group
        self.n = len(matrices[0])
        self.mats = tuple(tuple(tuple(row) for row in m) for m in matrices)
        if len(self.mats) != group.size:
            raise ActionError("need one matrix per group element")
        if validate:
            ident = self.mats[0]
            for i in range(self.n):
                for k in range(self.n):
                    expect_one = i == k
                    if expect_one != ident[i][k].is_one() and not (
                        not expect_one and ident[i][k].is_zero()
                    ):
                        raise ActionError("identity element must act as the identity matrix")
            self._validate_composition()
        # sparse access caches
        self.rows_nz = tuple(
            tuple(
                tuple((k, m[i][k]) for k in range(self.n) if not m[i][k].is_zero())
                for i in range(self.n)
            )
            for m in self.mats
        )
        self.cols_nz = tuple(
            tuple(
                tuple((i, m[i][k]) for i in range(self.n) if not m[i][k].is_zero())
                for k in range(self.n)
            )
            for m in self.mats
        )

    def _validate_composition(self):
        # (gh)^i_l = sum_k h^i_k g^k_l, checked against every generator (or
        # every element when the group records no generators)
        G = self.group
        gens = G.generator_indices or tuple(range(G.size))
        for s in gens:
            ms = self.mats[s]
            for g in range(G.size):
                mg = self.mats[g]
                target = self.mats[G.mult[s][g]]
                for i in range(self.n):
                    for l in range(self.n):
                        acc = ZERO
                        for k in range(self.n):
                            if not mg[i][k].is_zero() and not ms[k][l].is_zero():
                                acc = acc + mg[i][k] * ms[k][l]
                        if acc != target[i][l]:
                            raise ActionError(
                                f"matrices violate the composition law at (s={s}, g={g})"
                            )

    def matrix(self, g: int):
        return self.mats[g]

    def entry(self, g: int, i: int, k: int) -> CyclotomicScalar:
        return self.mats[g][i][k]

    def is_diagonal(self) -> bool:
        return all(
            self.mats[g][i][k].is_zero()
            for g in range(self.group.size)
            for i in range(self.n)
            for k in range(self.n)
            if i != k
        )

    def eigenvalue_table(self):
        """lambda[g][i] with g(v_i) = lambda[g][i] v_i, for diagonal actions."""
        if not self.is_diagonal():
            raise ActionError("action is not diagonal on the chosen basis")
        return tuple(tuple(self.mats[g][i][i] for i in range(self.n)) for g in range(self.group.size))


def natural_permutation_action(group: FiniteGroup) -> GroupAction:
    """sigma(v_i) = v_sigma(i) for a permutation group."""
    if group.perms is None:
        raise ActionError("group carries no permutation labels")
    n = len(group.perms[0])
    mats = []
    for p in group.perms:
        m = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            m[i][p[i]] = ONE
        mats.append(m)
    return GroupAction(group, mats, validate=False)


def diagonal_action(group: FiniteGroup, lam) -> GroupAction:
    """Action with common eigenvectors: g(v_i) = lam[g][i] v_i."""
    n = len(lam[0])
    mats = []
    for row in lam:
        m = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = row[i]
        mats.append(m)
    action = GroupAction(group, mats, validate=False)
    # validate the character property directly (cheaper than matrix products)
    G = group
    for g in range(G.size):
        for h in range(G.size):
            gh = G.mult[g][h]
            for i in range(n):
                if lam[g][i] * lam[h][i] != lam[gh][i]:
                    raise ActionError(f"eigenvalue table is not multiplicative at ({g}, {h})")
    for i in range(n):
        if not lam[0][i].is_one():
            raise ActionError("identity must act trivially")
    return action


def action_from_generator_matrices(group: FiniteGroup, gen_matrices) -> GroupAction:
    """Extend matrices given on the group's generators to all elements along
    the Cayley graph, then validate the composition law."""
    gens = group.generator_indices
    if len(gens) != len(gen_matrices):
        raise ActionError(
            f"group has {len(gens)} generators but {len(gen_matrices)} matrices were given"
        )
    n = len(gen_matrices[0])
    mats: list = [None] * group.size
    ident = [[ONE if i == k else ZERO for k in range(n)] for i in range(n)]
    mats[0] = ident
    for s, m in zip(gens, gen_matrices):
        mats[s] = [list(row) for row in m]
    frontier = [0] + [s for s in dict.fromkeys(gens) if s != 0]
    while frontier:
        nxt = []
        for g in frontier:
            for s, ms in zip(gens, gen_matrices):
                sg = group.mult[s][g]
                if mats[sg] is None:
                    # M[sg] = M[g] . M[s]
                    mg = mats[g]
                    prod = [
                        [
                            sum((mg[i][k] * ms[k][l] for k in range(n)), ZERO)
                            for l in range(n)
                        ]
                        for i in range(n)
                    ]
                    mats[sg] = prod
                    nxt.append(sg)
        frontier = nxt
    if any(m is None for m in mats):
        raise ActionError("generators do not generate the whole group")
    return GroupAction(group, mats, validate=True)


# ---------------------------------------------------------------------------
# the skew group algebra
# ---------------------------------------------------------------------------


class SkewElement:
    """Element of S_q(V) #_a G: finite sum of normally ordered monomials
    v^gamma t_g with scalar coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def monomial(gamma, g: int, coeff=ONE) -> "SkewElement":
        return SkewElement({(tuple(gamma), g): coeff})

    @staticmethod
    def variable(i: int, n: int, g: int = 0) -> "SkewElement":
        gamma = tuple(1 if j == i else 0 for j in range(n))
        return SkewElement({(gamma, g): ONE})

    @staticmethod
    def group_unit(g: int, n: int) -> "SkewElement":
        return SkewElement({((0,) * n, g): ONE})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc = out.get(k)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(k, None)
            else:
                out[k] = acc
        res = SkewElement.__new__(SkewElement)
        res.coeffs = out
        return res

    def __sub__(self, other):
        return self + other.scale(MINUS_ONE)

    def scale(self, s) -> "SkewElement":
        if s.is_zero():
            return SkewElement()
        res = SkewElement.__new__(SkewElement)
        res.coeffs = {k: s * c for k, c in self.coeffs.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, SkewElement):
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "<0>"
        parts = []
        for (gamma, g), c in sorted(self.coeffs.items()):
            mono = "".join(f"v{i}^{e}" for i, e in enumerate(gamma) if e)
            parts.append(f"({c.serialize()}){mono or '1'}t{g}")
        return "<" + " + ".join(parts) + ">"


def reorder_factor(gamma, delta, q: QMatrix) -> CyclotomicScalar:
    """Scalar picked up normal-ordering v^gamma . v^delta in S_q(V):
    prod over j > i of q(j, i)^(gamma_j * delta_i)."""
    f = ONE
    for j, gj in enumerate(gamma):
        if gj:
            for i in range(j):
                di = delta[i]
                if di:
                    f = f * q(j, i) ** (gj * di)
    return f


def mono_times_variable(gamma, k: int, q: QMatrix):
    """(v^gamma . v_k) = factor * v^(gamma + e_k)."""
    f = ONE
    for j in range(k + 1, len(gamma)):
        if gamma[j]:
            f = f * q(j, k) ** gamma[j]
    new = list(gamma)
    new[k] += 1
    return f, tuple(new)


def variable_times_mono(i: int, gamma, q: QMatrix):
    """(v_i . v^gamma) = factor * v^(gamma + e_i)."""
    f = ONE
    for j in range(i):
        if gamma[j]:
            f = f * q(i, j) ** gamma[j]
    new = list(gamma)
    new[i] += 1
    return f, tuple(new)


def qsym_multiply(a: SkewElement, b: SkewElement, q: QMatrix) -> SkewElement:
    """Product in S_q(V); both operands must have trivial group part."""
    out: dict = {}
    for (ga, gca), ca in a.coeffs.items():
        if gca != 0:
            raise ValueError("qsym_multiply expects elements of S_q(V) (group part t_1)")
        for (gb, gcb), cb in b.coeffs.items():
            if gcb != 0:
                raise ValueError("qsym_multiply expects elements of S_q(V) (group part t_1)")
            f = reorder_factor(ga, gb, q)
            key = (tuple(x + y for x, y in zip(ga, gb)), 0)
            v = ca * cb * f
            acc = out.get(key)
            acc = v if acc is None else acc + v
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    res = SkewElement.__new__(SkewElement)
    res.coeffs = out
    return res


def act_monomial(action: GroupAction, q: QMatrix, g: int, gamma) -> dict:
    """g(v^gamma) expanded and normally ordered in S_q(V); returns a dict
    mapping exponent tuples to scalars."""
    n = action.n
    acc: dict = {(0,) * n: ONE}
    for i, e in enumerate(gamma):
        for _ in range(e):
            nxt: dict = {}
            for gam, c in acc.items():
                for k, m in action.rows_nz[g][i]:
                    f, newgam = mono_times_variable(gam, k, q)
                    v = c * m * f
                    prev = nxt.get(newgam)
                    prev = v if prev is None else prev + v
                    if prev.is_zero():
                        nxt.pop(newgam, None)
                    else:
                        nxt[newgam] = prev
            acc = nxt
    return acc


def skew_multiply(
    a: SkewElement, b: SkewElement, action: GroupAction, q: QMatrix, alpha: Cocycle2
) -> SkewElement:
    """(x t_g)(y t_h) = alpha(g, h) x . g(y) t_{gh}, normally ordered."""
    G = action.group
    out: dict = {}
    for (ga, g), ca in a.coeffs.items():
        for (gb, h), cb in b.coeffs.items():
            scale = ca * cb * alpha(g, h)
            gh = G.mult[g][h]
            acted = act_monomial(action, q, g, gb)
            for gam, c in acted.items():
                f = reorder_factor(ga, gam, q)
                key = (tuple(x + y for x, y in zip(ga, gam)), gh)
                v = scale * c * f
                acc = out.get(key)
                acc = v if acc is None else acc + v
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
    res = SkewElement.__new__(SkewElement)
    res.coeffs = out
    return res


def quantum_minor(g: int, action: GroupAction, q: QMatrix, i: int, j: int, k: int, l: int) -> CyclotomicScalar:
    """ddet_ijkl(g) = g^j_l g^i_k - q(j, i) g^i_l g^j_k (0-based indices)."""
    m = action.mats[g]
    return m[j][l] * m[i][k] - q(j, i) * m[i][l] * m[j][k]


def check_action_extends(action: GroupAction, q: QMatrix, max_witnesses: int = 5) -> dict:
    """Whether the linear action extends to S_q(V) and to the quantum
    exterior algebra Lambda_q(V) by automorphisms.

    The symmetric check normalizes g(v_i) g(v_j) - q_ij g(v_j) g(v_i)
    directly; the exterior check evaluates the scalar identity
    (1 - q_ij q_lk) g^i_k g^j_l + (q_ij - q_lk) g^i_l g^j_k = 0.
    """
    n = action.n
    G = action.group
    report = {"symmetric": True, "exterior": True, "symmetric_witnesses": [], "exterior_witnesses": []}
    for g in range(G.size):
        rows = action.rows_nz[g]
        for i in range(n):
            for j in range(i + 1, n):
                # normalize g(v_i) g(v_j) - q_ij g(v_j) g(v_i)
                acc: dict = {}
                for k, mik in rows[i]:
                    for l, mjl in rows[j]:
                        f, gam = mono_times_variable(
                            tuple(1 if t == k else 0 for t in range(n)), l, q
                        )
                        v = mik * mjl * f
                        prev = acc.get(gam)
                        acc[gam] = v if prev is None else prev + v
                qij = q(i, j)
                for k, mjk in rows[j]:
                    for l, mil in rows[i]:
                        f, gam = mono_times_variable(
                            tuple(1 if t == k else 0 for t in range(n)), l, q
                        )
                        v = qij * mjk * mil * f
                        prev = acc.get(gam)
                        acc[gam] = -v if prev is None else prev - v
                if any(not c.is_zero() for c in acc.values()):
                    report["symmetric"] = False
                    if len(report["symmetric_witnesses"]) < max_witnesses:
                        report["symmetric_witnesses"].append((g, i, j))
    for g in range(G.size):
        m = action.mats[g]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for k in range(n):
                    for l in range(k + 1, n):
                        lhs = (ONE - q(i, j) * q(l, k)) * m[i][k] * m[j][l] + (
                            q(i, j) - q(l, k)
                        ) * m[i][l] * m[j][k]
                        if not lhs.is_zero():
                            report["exterior"] = False
                            if len(report["exterior_witnesses"]) < max_witnesses:
                                report["exterior_witnesses"].append((g, i, j, k, l))
    return report
