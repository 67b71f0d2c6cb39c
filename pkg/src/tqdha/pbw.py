"""PBW condition checker, exact parameter-space solver, and an independent
Diamond-Lemma rewriting oracle for the filtered quotients H_{q,kappa,alpha}.

The two PBW conditions are linear in kappa, so the space of all valid maps is
the kernel of an explicit sparse system over the unknowns kappa_g(v_i, v_j),
g in G, i < j.  The rewriting oracle never looks at the conditions: it reduces
the four families of overlap words both ways and compares normal forms, which
is what makes the pair a genuine dual check.
"""

from __future__ import annotations

from .groups import Cocycle2, FiniteGroup, GroupAlgebraElement
from .linalg import RowReducer
from .quantum import GroupAction, QMatrix, check_action_extends
from .scalars import ONE, ZERO, CyclotomicScalar, parse_scalar


class ExtensionError(ValueError):
    """The group action does not extend to S_q(V), so the PBW machinery
    does not apply."""


class KappaMap:
    """A bilinear map kappa: V x V -> C^alpha G with the quantum antisymmetry
    kappa(v_i, v_j) = -q_ij kappa(v_j, v_i), stored on pairs i < j."""

    def __init__(self, group: FiniteGroup, n: int, q: QMatrix, values=None):
        self.group = group
        self.n = n
        self.q = q
        vals = {}
        for (i, j), elt in (values or {}).items():
            if not (0 <= i < j < n):
                raise ValueError(f"kappa values must be keyed on pairs i < j, got ({i}, {j})")
            if not elt.is_zero():
                vals[(i, j)] = elt
        self.values = vals

    @staticmethod
    def zero(group: FiniteGroup, n: int, q: QMatrix) -> "KappaMap":
        return KappaMap(group, n, q)

    def value(self, i: int, j: int) -> GroupAlgebraElement:
        """kappa(v_i, v_j) for any i, j (the reversal rule fills in j < i)."""
        if i == j:
            return GroupAlgebraElement.zero()
        if i < j:
            return self.values.get((i, j), GroupAlgebraElement.zero())
        base = self.values.get((j, i))
        if base is None:
            return GroupAlgebraElement.zero()
        return base.scale(-self.q(i, j))

    def component(self, g: int, i: int, j: int) -> CyclotomicScalar:
        """kappa_g(v_i, v_j)."""
        return self.value(i, j).coefficient(g)

    def is_zero(self) -> bool:
        return not self.values

    def coordinates(self) -> dict:
        """Sparse coordinates {(g, i, j): scalar} over pairs i < j."""
        out = {}
        for (i, j), elt in self.values.items():
            for g, c in elt.coeffs.items():
                out[(g, i, j)] = c
        return out

    def coordinate_row(self) -> dict:
        """Same data keyed by a flat integer index (for rank computations)."""
        npairs = self.n * (self.n - 1) // 2
        out = {}
        for (g, i, j), c in self.coordinates().items():
            out[g * npairs + _pair_index(i, j, self.n)] = c
        return out

    @staticmethod
    def from_coordinates(group, n, q, coords) -> "KappaMap":
        values: dict = {}
        for (g, i, j), c in coords.items():
            if c.is_zero():
                continue
            values.setdefault((i, j), {})[g] = c
        return KappaMap(
            group, n, q, {k: GroupAlgebraElement(v) for k, v in values.items()}
        )

    def add(self, other: "KappaMap") -> "KappaMap":
        vals = dict(self.values)
        for k, elt in other.values.items():
            vals[k] = vals[k] + elt if k in vals else elt
        return KappaMap(self.group, self.n, self.q, vals)

    def scale(self, s) -> "KappaMap":
        return KappaMap(self.group, self.n, self.q, {k: v.scale(s) for k, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, KappaMap):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self.value(i, j) == other.value(i, j) for (i, j) in keys)

    def to_records(self) -> list:
        """Serialization: one record per stored pair, 1-based indices."""
        recs = []
        for (i, j) in sorted(self.values):
            recs.append(
                {"i": i + 1, "j": j + 1, "coefficients": self.values[(i, j)].serialize()}
            )
        return recs

    @staticmethod
    def from_records(group, n, q, records) -> "KappaMap":
        values = {}
        for rec in records:
            i, j = rec["i"] - 1, rec["j"] - 1
            coeffs = {int(g): parse_scalar(s) for g, s in rec["coefficients"].items()}
            for g in coeffs:
                if not (0 <= g < group.size):
                    raise ValueError(f"group element index {g} out of range")
            values[(i, j)] = GroupAlgebraElement(coeffs)
        return KappaMap(group, n, q, values)


def _pair_index(i: int, j: int, n: int) -> int:
    # lexicographic rank of the pair (i, j), i < j
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _require_extension(action: GroupAction, q: QMatrix):
    rep = check_action_extends(action, q)
    if not rep["symmetric"]:
        raise ExtensionError(
            f"action does not extend to S_q(V); witnesses {rep['symmetric_witnesses']}"
        )
    return rep


def check_pbw_conditions(
    kappa: KappaMap, action: GroupAction, q: QMatrix, alpha: Cocycle2, max_witnesses: int = 10
) -> dict:
    """Evaluate both PBW conditions exactly.

    Condition (1), for all g, h and i < j:
        alpha(h,g)/alpha(hgh^-1,h) kappa_g(v_j,v_i)
            = sum_{k<l} ddet_ijkl(h) kappa_{hgh^-1}(v_l,v_k).
    Condition (2), for all g and i < j < k, as an equation in V:
        kappa_g(v_k,v_j)(g(v_i) - q_ji q_ki v_i)
      + kappa_g(v_k,v_i)(q_kj v_j - q_ji g(v_j))
      + kappa_g(v_j,v_i)(q_kj q_ki g(v_k) - v_k) = 0.
    """
    _require_extension(action, q)
    G = action.group
    n = action.n
    report = {"condition1": True, "condition2": True, "violations": []}

    for h in range(G.size):
        rows = action.rows_nz[h]
        for g in range(G.size):
            gc = G.conjugate(h, g)
            ratio = alpha.conj_ratio(h, g)
            for i in range(n):
                for j in range(i + 1, n):
                    lhs = ratio * kappa.component(g, j, i)
                    rhs = ZERO
                    for k, hik in rows[i]:
                        for l, hjl in rows[j]:
                            if k < l:
                                # ddet contribution h^j_l h^i_k at (k, l)
                                rhs = rhs + hjl * hik * kappa.component(gc, l, k)
                    qji = q(j, i)
                    for l, hil in rows[i]:
                        for k, hjk in rows[j]:
                            if k < l:
                                rhs = rhs - qji * hil * hjk * kappa.component(gc, l, k)
                    if lhs != rhs:
                        report["condition1"] = False
                        if len(report["violations"]) < max_witnesses:
                            report["violations"].append(
                                {"condition": 1, "g": g, "h": h, "i": i, "j": j,
                                 "defect": (lhs - rhs).serialize()}
                            )

    for g in range(G.size):
        m = action.mats[g]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    ckj = kappa.component(g, k, j)
                    cki = kappa.component(g, k, i)
                    cji = kappa.component(g, j, i)
                    if ckj.is_zero() and cki.is_zero() and cji.is_zero():
                        continue
                    qji, qki, qkj = q(j, i), q(k, i), q(k, j)
                    for t in range(n):
                        val = ckj * (m[i][t] - (qji * qki if t == i else ZERO))
                        val = val + cki * ((qkj if t == j else ZERO) - qji * m[j][t])
                        val = val + cji * (qkj * qki * m[k][t] - (ONE if t == k else ZERO))
                        if not val.is_zero():
                            report["condition2"] = False
                            if len(report["violations"]) < max_witnesses:
                                report["violations"].append(
                                    {"condition": 2, "g": g, "i": i, "j": j, "k": k,
                                     "coefficient_of": t, "defect": val.serialize()}
                                )
    report["passed"] = report["condition1"] and report["condition2"]
    return report


def parameter_space_rows(action: GroupAction, q: QMatrix, alpha: Cocycle2):
    """The homogeneous linear system whose kernel is the parameter space, as
    sparse rows over the unknowns x[(g, i, j)] = kappa_g(v_i, v_j), i < j."""
    G = action.group
    n = action.n
    npairs = n * (n - 1) // 2

    def unknown(g, i, j):
        return g * npairs + _pair_index(i, j, n)

    rows = []
    # condition (1): ratio * (-q_ji) x[g,i,j] - sum_{k<l} ddet_ijkl(h) (-q_lk) x[gc,k,l] = 0
    for h in range(G.size):
        hrows = action.rows_nz[h]
        for g in range(G.size):
            gc = G.conjugate(h, g)
            ratio = alpha.conj_ratio(h, g)
            for i in range(n):
                for j in range(i + 1, n):
                    row: dict = {}

                    def bump(col, val):
                        acc = row.get(col)
                        acc = val if acc is None else acc + val
                        if acc.is_zero():
                            row.pop(col, None)
                        else:
                            row[col] = acc

                    bump(unknown(g, i, j), ratio * (-q(j, i)))
                    qji = q(j, i)
                    for k, hik in hrows[i]:
                        for l, hjl in hrows[j]:
                            if k < l:
                                bump(unknown(gc, k, l), hjl * hik * q(l, k))
                    for l, hil in hrows[i]:
                        for k, hjk in hrows[j]:
                            if k < l:
                                bump(unknown(gc, k, l), -qji * hil * hjk * q(l, k))
                    if row:
                        rows.append(row)
    # condition (2): n coefficient equations per (g, i<j<k)
    for g in range(G.size):
        m = action.mats[g]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    qji, qki, qkj = q(j, i), q(k, i), q(k, j)
                    for t in range(n):
                        row = {}
                        a = (-qkj) * (m[i][t] - (qji * qki if t == i else ZERO))
                        b = (-qki) * ((qkj if t == j else ZERO) - qji * m[j][t])
                        c = (-qji) * (qkj * qki * m[k][t] - (ONE if t == k else ZERO))
                        if not a.is_zero():
                            row[unknown(g, j, k)] = a
                        if not b.is_zero():
                            row[unknown(g, i, k)] = row.get(unknown(g, i, k), ZERO) + b
                            if row[unknown(g, i, k)].is_zero():
                                del row[unknown(g, i, k)]
                        if not c.is_zero():
                            row[unknown(g, i, j)] = row.get(unknown(g, i, j), ZERO) + c
                            if row[unknown(g, i, j)].is_zero():
                                del row[unknown(g, i, j)]
                        if row:
                            rows.append(row)
    return rows, G.size * npairs


def solve_parameter_space(
    action: GroupAction, q: QMatrix, alpha: Cocycle2, recheck: bool = True
) -> list[KappaMap]:
    """Kernel basis of the PBW condition system, as KappaMaps.  Every basis
    element is re-verified against check_pbw_conditions unless disabled."""
    _require_extension(action, q)
    G = action.group
    n = action.n
    npairs = n * (n - 1) // 2
    rows, ncols = parameter_space_rows(action, q, alpha)
    red = RowReducer()
    seen = set()
    for row in rows:
        key = tuple(sorted((c, v.serialize()) for c, v in row.items()))
        if key in seen:
            continue
        seen.add(key)
        red.insert(row)
    basis = []
    for vec in red.kernel(ncols):
        coords = {}
        for idx, c in enumerate(vec):
            if not c.is_zero():
                g, rem = divmod(idx, npairs)
                i, j = _pair_from_index(rem, n)
                coords[(g, i, j)] = c
        basis.append(KappaMap.from_coordinates(G, n, q, coords))
    if recheck:
        for kappa in basis:
            rep = check_pbw_conditions(kappa, action, q, alpha)
            if not rep["passed"]:
                raise ArithmeticError(
                    "solver produced a kappa failing the PBW checker; "
                    f"violations {rep['violations'][:3]}"
                )
    return basis


def _pair_from_index(r: int, n: int):
    for i in range(n):
        cnt = n - i - 1
        if r < cnt:
            return i, i + 1 + r
        r -= cnt
    raise IndexError("pair index out of range")


# ---------------------------------------------------------------------------
# Diamond-Lemma rewriting oracle
# ---------------------------------------------------------------------------
#
# Words live in the free algebra on {v_0..v_{n-1}} u {t_g | g in G}; a letter
# is an int: 0 <= x < n is the variable v_x, and n + g is t_g.  The three
# reduction families are
#     t_g v_i  ->  g(v_i) t_g
#     t_g t_h  ->  alpha(g, h) t_{gh}
#     v_j v_i  ->  q_ji v_i v_j + kappa(v_j, v_i)      (j > i)
# applied leftmost-outermost.  Irreducible words are ascending variable runs
# followed by at most one group letter; words that never contained a group
# letter normalize with group component None.


def word_letters(word, n: int):
    """Public word format: sequence of ('v', i) / ('t', g) pairs -> ints."""
    out = []
    for kind, idx in word:
        if kind == "v":
            if not (0 <= idx < n):
                raise ValueError(f"variable index {idx} out of range")
            out.append(idx)
        elif kind == "t":
            out.append(n + idx)
        else:
            raise ValueError(f"unknown letter kind {kind!r}")
    return tuple(out)


def _first_redex(letters, n: int):
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if a >= n:
            return p  # t v or t t
        if b < n and a > b:
            return p  # v_j v_i with j > i
    return None


def _apply_rule(letters, p: int, n: int, kappa, action, q, alpha):
    """Rewrite the pair at position p; returns a list of (coeff, letters)."""
    a, b = letters[p], letters[p + 1]
    head, tail = letters[:p], letters[p + 2 :]
    out = []
    if a >= n and b >= n:
        g, h = a - n, b - n
        out.append((alpha(g, h), head + (n + action.group.mult[g][h],) + tail))
    elif a >= n:
        g, i = a - n, b
        for k, c in action.rows_nz[g][i]:
            out.append((c, head + (k, a) + tail))
    else:
        j, i = a, b
        out.append((q(j, i), head + (i, j) + tail))
        if kappa is not None:
            for g, c in kappa.value(j, i).coeffs.items():
                out.append((c, head + (n + g,) + tail))
    return out


def normal_form_reduce(word, kappa, action: GroupAction, q: QMatrix, alpha: Cocycle2):
    """Reduce a word (or list of (coeff, word) pairs) to its normal form.

    Returns a dict {(gamma, g_or_None): scalar}: gamma is the exponent tuple
    of the ascending variable run and g the trailing group letter, or None if
    the word carries no group letter.  Each kappa-rule application drops the
    variable degree by two, so the implicit deformation-parameter exponent of
    a term is (input degree - |gamma|) / 2.
    """
    n = action.n
    if not word:
        return {((0,) * n, None): ONE}
    if isinstance(word[0], tuple) and len(word[0]) == 2 and isinstance(word[0][0], str):
        work = [(ONE, word_letters(word, n))]
    else:
        work = [(c, word_letters(w, n)) for c, w in word]
    out: dict = {}
    while work:
        coeff, letters = work.pop()
        p = _first_redex(letters, n)
        if p is None:
            gamma = [0] * n
            gpart = None
            for x in letters:
                if x < n:
                    gamma[x] += 1
                else:
                    gpart = x - n
            key = (tuple(gamma), gpart)
            acc = out.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
            continue
        for c, w in _apply_rule(letters, p, n, kappa, action, q, alpha):
            v = coeff * c
            if not v.is_zero():
                work.append((v, w))
    return out


def _reduce_letter_terms(terms, n, kappa, action, q, alpha):
    out: dict = {}
    work = list(terms)
    while work:
        coeff, letters = work.pop()
        p = _first_redex(letters, n)
        if p is None:
            acc = out.get(letters)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                out.pop(letters, None)
            else:
                out[letters] = acc
            continue
        for c, w in _apply_rule(letters, p, n, kappa, action, q, alpha):
            v = coeff * c
            if not v.is_zero():
                work.append((v, w))
    return out


def verify_ambiguities(
    kappa, action: GroupAction, q: QMatrix, alpha: Cocycle2, families=None, max_witnesses: int = 5
) -> dict:
    """Resolve every overlap ambiguity of the reduction system both ways and
    compare normal forms.  The overlap words are t_g t_h t_k, t_g t_h v_i,
    t_h v_j v_i (j > i) and v_k v_j v_i (k > j > i), each reduced once
    starting at the left overlap and once at the right.
    """
    G = action.group
    n = action.n
    families = families or ("ttt", "ttv", "tvv", "vvv")
    report = {"resolvable": True, "checked": 0, "witnesses": []}

    def check(letters, tag):
        left = _reduce_letter_terms(
            [(c, w) for c, w in _apply_rule(letters, 0, n, kappa, action, q, alpha)],
            n, kappa, action, q, alpha,
        )
        right = _reduce_letter_terms(
            [(c, w) for c, w in _apply_rule(letters, 1, n, kappa, action, q, alpha)],
            n, kappa, action, q, alpha,
        )
        report["checked"] += 1
        if left != right:
            report["resolvable"] = False
            if len(report["witnesses"]) < max_witnesses:
                report["witnesses"].append(tag)

    if "ttt" in families:
        for g in range(G.size):
            for h in range(G.size):
                for k in range(G.size):
                    check((n + g, n + h, n + k), ("ttt", g, h, k))
    if "ttv" in families:
        for g in range(G.size):
            for h in range(G.size):
                for i in range(n):
                    check((n + g, n + h, i), ("ttv", g, h, i))
    if "tvv" in families:
        for h in range(G.size):
            for i in range(n):
                for j in range(i + 1, n):
                    check((n + h, j, i), ("tvv", h, j, i))
    if "vvv" in families:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    check((k, j, i), ("vvv", k, j, i))
    return report
