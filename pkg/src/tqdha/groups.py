"""Finite groups, normalized 2-cocycles, and the twisted group algebra C^a G.

Groups are index tables: elements are integers 0..size-1 with 0 the identity,
multiplication is a dense table, and mult[g][h] is the product g*h (for
permutation groups this is function composition, h applied first).
Permutations are stored as 0-based image tuples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .scalars import MINUS_ONE, ONE, ZERO, CyclotomicScalar, root_of_unity


class GroupConstructionError(ValueError):
    """The input data does not describe a valid finite group."""


class CocycleError(ValueError):
    """A 2-cocycle table is malformed or fails its defining identities."""


# ---------------------------------------------------------------------------
# permutation helpers (0-based image tuples)
# ---------------------------------------------------------------------------


def perm_compose(a: tuple, b: tuple) -> tuple:
    """a after b: (a o b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def perm_inverse(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def perm_sign(a: tuple) -> int:
    """Parity of the permutation: 0 for even, 1 for odd."""
    n = len(a)
    seen = [False] * n
    sign = 0
    for i in range(n):
        if not seen[i]:
            j = i
            clen = 0
            while not seen[j]:
                seen[j] = True
                j = a[j]
                clen += 1
            sign ^= (clen - 1) & 1
    return sign


def perm_cycles(a: tuple) -> list[tuple]:
    """Disjoint cycles (fixed points omitted), each starting at its smallest
    element, ordered by smallest element."""
    n = len(a)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if not seen[i] and a[i] != i:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = a[j]
            cycles.append(tuple(cyc))
        seen[i] = True
    return cycles


def perm_from_cycles(n: int, cycles) -> tuple:
    """Permutation of 0..n-1 from a list of cycles (0-based entries)."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
            img[a] = b
    return tuple(img)


# ---------------------------------------------------------------------------
# finite groups
# ---------------------------------------------------------------------------


class FiniteGroup:
    """A finite group on indices 0..size-1 with 0 the identity."""

    def __init__(self, mult, name="group", perms=None, labels=None, generator_indices=None):
        self.size = len(mult)
        self.mult = tuple(tuple(row) for row in mult)
        self.name = name
        self.perms = tuple(perms) if perms is not None else None
        self.labels = tuple(labels) if labels is not None else None
        self.generator_indices = tuple(generator_indices) if generator_indices else ()
        for g in range(self.size):
            if self.mult[0][g] != g or self.mult[g][0] != g:
                raise GroupConstructionError("index 0 is not a two-sided identity")
        inv = [None] * self.size
        for g in range(self.size):
            for h in range(self.size):
                if self.mult[g][h] == 0:
                    if self.mult[h][g] != 0:
                        raise GroupConstructionError(f"one-sided inverse at element {g}")
                    inv[g] = h
                    break
            if inv[g] is None:
                raise GroupConstructionError(f"element {g} has no inverse")
        self.inv = tuple(inv)

    def __repr__(self):
        return f"FiniteGroup({self.name}, size={self.size})"

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mult[self.mult[h][g]][self.inv[h]]

    def commute(self, g: int, h: int) -> bool:
        return self.mult[g][h] == self.mult[h][g]

    def is_abelian(self) -> bool:
        return all(self.commute(g, h) for g in range(self.size) for h in range(g))

    def validate_associativity(self):
        for a in range(self.size):
            ma = self.mult[a]
            for b in range(self.size):
                mab = self.mult[ma[b]]
                mb = self.mult[b]
                for c in range(self.size):
                    if mab[c] != ma[mb[c]]:
                        raise GroupConstructionError(
                            f"associativity fails on triple ({a}, {b}, {c})"
                        )

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes as sorted tuples, ordered by least element."""
        seen = [False] * self.size
        classes = []
        for a in range(self.size):
            if not seen[a]:
                cls = sorted({self.conjugate(h, a) for h in range(self.size)})
                for x in cls:
                    seen[x] = True
                classes.append(tuple(cls))
        return classes

    def centralizer(self, a: int) -> tuple[int, ...]:
        return tuple(h for h in range(self.size) if self.commute(h, a))

    def coset_reps_mod_centralizer(self, a: int) -> tuple[int, ...]:
        """Minimal representatives of left cosets of the centralizer of a;
        g and g' represent the same coset iff g a g^-1 = g' a g'^-1."""
        reps = []
        seen = set()
        for g in range(self.size):
            c = self.conjugate(g, a)
            if c not in seen:
                seen.add(c)
                reps.append(g)
        return tuple(reps)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], name="trivial")


def group_from_table(table, name="table-group") -> FiniteGroup:
    size = len(table)
    for i, row in enumerate(table):
        if len(row) != size:
            raise GroupConstructionError(f"row {i} has length {len(row)}, expected {size}")
        if sorted(row) != list(range(size)):
            raise GroupConstructionError(f"row {i} is not a permutation of 0..{size - 1}")
    g = FiniteGroup(table, name=name)
    g.validate_associativity()
    return g


def group_from_permutations(generators, degree=None, size_cap=20000, name=None) -> FiniteGroup:
    """Closure of permutation generators, canonically ordered: identity first,
    then sorted by image tuple.  Associativity is structural."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise GroupConstructionError("need a degree for an empty generator list")
        degree = len(gens[0])
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupConstructionError(f"generator {g} is not a permutation of 0..{degree - 1}")
    identity = tuple(range(degree))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = perm_compose(g, p)
                if q not in elements:
                    if len(elements) >= size_cap:
                        raise GroupConstructionError(f"closure exceeds size cap {size_cap}")
                    elements.add(q)
                    nxt.append(q)
        frontier = nxt
    ordered = sorted(elements)  # identity is lexicographically least
    index = {p: i for i, p in enumerate(ordered)}
    mult = [[index[perm_compose(a, b)] for b in ordered] for a in ordered]
    return FiniteGroup(
        mult,
        name=name or f"perm-group(deg {degree}, order {len(ordered)})",
        perms=ordered,
        generator_indices=[index[g] for g in gens],
    )


def group_from_cyclic_orders(orders, name=None) -> FiniteGroup:
    """Direct product Z/c1 x ... x Z/ck; elements are exponent tuples in
    mixed-radix order with the identity (0, ..., 0) first."""
    orders = tuple(int(c) for c in orders)
    if any(c < 1 for c in orders):
        raise GroupConstructionError("cyclic orders must be positive")
    labels = list(product(*[range(c) for c in orders]))
    index = {lab: i for i, lab in enumerate(labels)}

    def add(a, b):
        return tuple((x + y) % c for x, y, c in zip(a, b, orders))

    mult = [[index[add(a, b)] for b in labels] for a in labels]
    gen_indices = []
    for i in range(len(orders)):
        if orders[i] > 1:
            unit = tuple(1 if j == i else 0 for j in range(len(orders)))
            gen_indices.append(index[unit])
    return FiniteGroup(
        mult,
        name=name or ("Z/" + "xZ/".join(str(c) for c in orders) if orders else "trivial"),
        labels=labels,
        generator_indices=gen_indices,
    )


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> FiniteGroup:
    """S_n acting on {0..n-1}, canonically ordered by image tuple."""
    if n < 1:
        raise GroupConstructionError("n must be at least 1")
    if n == 1:
        return FiniteGroup([[0]], name="S1", perms=[(0,)])
    gens = [perm_from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(perm_from_cycles(n, [tuple(range(n))]))
    return group_from_permutations(gens, degree=n, name=f"S{n}")


def build_group(spec) -> FiniteGroup:
    """Build a group from one of the supported descriptions:
    a multiplication table, permutation generators, or cyclic orders."""
    if isinstance(spec, FiniteGroup):
        return spec
    if spec == "trivial":
        return trivial_group()
    if isinstance(spec, dict):
        if "table" in spec:
            return group_from_table(spec["table"])
        if "permutation_generators" in spec:
            return group_from_permutations(
                spec["permutation_generators"],
                degree=spec.get("degree"),
                size_cap=spec.get("size_cap", 20000),
            )
        if "cyclic_product" in spec:
            return group_from_cyclic_orders(spec["cyclic_product"])
    raise GroupConstructionError(f"unrecognized group description: {spec!r}")


# ---------------------------------------------------------------------------
# 2-cocycles
# ---------------------------------------------------------------------------


class Cocycle2:
    """A normalized 2-cocycle on a finite group, stored as a dense table of
    nonzero scalars."""

    def __init__(self, group: FiniteGroup, values, name="cocycle"):
        self.group = group
        self.values = tuple(tuple(row) for row in values)
        self.name = name
        if len(self.values) != group.size or any(len(r) != group.size for r in self.values):
            raise CocycleError("cocycle table dimensions do not match the group")
        for g in range(group.size):
            for h in range(group.size):
                if self.values[g][h].is_zero():
                    raise CocycleError(f"cocycle value at ({g}, {h}) is zero")
        self._conj_ratio = None

    def __call__(self, g: int, h: int) -> CyclotomicScalar:
        return self.values[g][h]

    def conj_ratio(self, h: int, g: int) -> CyclotomicScalar:
        """alpha(h, g) / alpha(h g h^-1, h) -- the scalar in t_h t_g t_h^-1."""
        if self._conj_ratio is None:
            G = self.group
            self._conj_ratio = tuple(
                tuple(
                    self.values[hh][gg] / self.values[G.conjugate(hh, gg)][hh]
                    for gg in range(G.size)
                )
                for hh in range(G.size)
            )
        return self._conj_ratio[h][g]

    def tg_inverse_coeff(self, g: int) -> CyclotomicScalar:
        """(t_g)^-1 = coeff * t_{g^-1}."""
        return self.values[g][self.group.inv[g]].inverse()


def trivial_cocycle(group: FiniteGroup) -> Cocycle2:
    row = tuple(ONE for _ in range(group.size))
    return Cocycle2(group, [row] * group.size, name="trivial")


def bicharacter_cocycle(group: FiniteGroup, exponents, root_order: int = 2) -> Cocycle2:
    """alpha(a, b) = zeta_m^(sum_ij E[i][j] a_i b_j) on a product of cyclic
    groups carrying exponent-tuple labels.  The exponent a_i b_j is only
    defined modulo the coordinate orders, so E[i][j] * c_i and E[i][j] * c_j
    must both vanish mod m; anything else is rejected."""
    if group.labels is None:
        raise CocycleError("bicharacter cocycles need a cyclic-product group")
    k = len(group.labels[0])
    if len(exponents) != k or any(len(r) != k for r in exponents):
        raise CocycleError(f"exponent matrix must be {k}x{k}")
    orders = [max(lab[i] for lab in group.labels) + 1 for i in range(k)]
    for i in range(k):
        for j in range(k):
            e = exponents[i][j]
            if (e * orders[i]) % root_order or (e * orders[j]) % root_order:
                raise CocycleError(
                    f"exponent E[{i}][{j}] = {e} is not well-defined on "
                    f"Z/{orders[i]} x Z/{orders[j]} with a root of order {root_order}"
                )
    vals = []
    for a in group.labels:
        row = []
        for b in group.labels:
            e = sum(exponents[i][j] * a[i] * b[j] for i in range(k) for j in range(k))
            row.append(root_of_unity(root_order, e))
        vals.append(row)
    return Cocycle2(group, vals, name=f"bicharacter(z{root_order})")


def validate_cocycle(alpha: Cocycle2, max_witnesses: int = 10) -> dict:
    """Check normalization and the 2-cocycle identity on all triples, and
    report the coboundary-invariant ratios beta(g, h) = alpha(g, h)/alpha(h, g)
    on commuting pairs (these certify nontriviality of the class)."""
    G = alpha.group
    n = G.size
    report = {"normalized": True, "cocycle": True, "failures": []}
    for g in range(n):
        if not alpha(g, 0).is_one() or not alpha(0, g).is_one():
            report["normalized"] = False
            if len(report["failures"]) < max_witnesses:
                report["failures"].append(("normalization", g))
    # cocycle identity alpha(g1,g2) alpha(g1g2,g3) = alpha(g2,g3) alpha(g1,g2g3)
    signs = _as_sign_table(alpha)
    if signs is not None:
        # fast exhaustive path for plus/minus-one valued tables
        mult = G.mult
        for g1 in range(n):
            s1 = signs[g1]
            m1 = mult[g1]
            for g2 in range(n):
                a12 = s1[g2]
                s12 = signs[m1[g2]]
                s2 = signs[g2]
                m2 = mult[g2]
                for g3 in range(n):
                    if (a12 + s12[g3]) & 1 != (s2[g3] + s1[m2[g3]]) & 1:
                        report["cocycle"] = False
                        if len(report["failures"]) < max_witnesses:
                            report["failures"].append(("cocycle", g1, g2, g3))
    else:
        for g1 in range(n):
            for g2 in range(n):
                g12 = G.mult[g1][g2]
                lhs0 = alpha(g1, g2)
                for g3 in range(n):
                    lhs = lhs0 * alpha(g12, g3)
                    rhs = alpha(g2, g3) * alpha(g1, G.mult[g2][g3])
                    if lhs != rhs:
                        report["cocycle"] = False
                        if len(report["failures"]) < max_witnesses:
                            report["failures"].append(("cocycle", g1, g2, g3))
    invariants = {}
    for g in range(n):
        for h in range(n):
            if G.commute(g, h):
                invariants[(g, h)] = alpha(g, h) / alpha(h, g)
    report["commuting_pair_invariants"] = invariants
    return report


def _as_sign_table(alpha: Cocycle2):
    """Exponent table (0 for +1, 1 for -1) if every value is +-1, else None."""
    n = alpha.group.size
    out = []
    for g in range(n):
        row = []
        for h in range(n):
            v = alpha(g, h)
            if v.is_one():
                row.append(0)
            elif v == MINUS_ONE:
                row.append(1)
            else:
                return None
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# twisted group algebra
# ---------------------------------------------------------------------------


class GroupAlgebraElement:
    """Finite scalar combination sum_g c_g t_g; zero coefficients are pruned."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {g: c for g, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def basis(g: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement({g: ONE})

    @staticmethod
    def zero() -> "GroupAlgebraElement":
        return GroupAlgebraElement({})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, g: int) -> CyclotomicScalar:
        return self.coeffs.get(g, ZERO)

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            acc = out.get(g)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(g, None)
            else:
                out[g] = acc
        res = GroupAlgebraElement.__new__(GroupAlgebraElement)
        res.coeffs = out
        return res

    def __sub__(self, other):
        return self + other.scale(MINUS_ONE)

    def scale(self, s: CyclotomicScalar) -> "GroupAlgebraElement":
        if s.is_zero():
            return GroupAlgebraElement.zero()
        res = GroupAlgebraElement.__new__(GroupAlgebraElement)
        res.coeffs = {g: s * c for g, c in self.coeffs.items()}
        return res

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[g] == other.coeffs[g] for g in self.coeffs)

    def __hash__(self):
        return hash(frozenset((g, c) for g, c in self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "<0>"
        parts = [f"({c.serialize()})t{g}" for g, c in sorted(self.coeffs.items())]
        return "<" + " + ".join(parts) + ">"

    def serialize(self) -> dict:
        return {str(g): c.serialize() for g, c in sorted(self.coeffs.items())}


def tga_multiply(x: GroupAlgebraElement, y: GroupAlgebraElement, alpha: Cocycle2) -> GroupAlgebraElement:
    """Bilinear extension of t_g t_h = alpha(g, h) t_{gh}."""
    mult = alpha.group.mult
    out: dict[int, CyclotomicScalar] = {}
    for g, cg in x.coeffs.items():
        for h, ch in y.coeffs.items():
            k = mult[g][h]
            v = cg * ch * alpha(g, h)
            acc = out.get(k)
            acc = v if acc is None else acc + v
            if acc.is_zero():
                out.pop(k, None)
            else:
                out[k] = acc
    res = GroupAlgebraElement.__new__(GroupAlgebraElement)
    res.coeffs = out
    return res


def tga_inverse_of_basis(g: int, alpha: Cocycle2) -> GroupAlgebraElement:
    """(t_g)^-1 = alpha(g, g^-1)^-1 t_{g^-1}."""
    return GroupAlgebraElement({alpha.group.inv[g]: alpha.tg_inverse_coeff(g)})


def twisted_conjugate(h: int, x: GroupAlgebraElement, alpha: Cocycle2) -> GroupAlgebraElement:
    """t_h x (t_h)^-1, i.e. t_g -> (alpha(h,g)/alpha(hgh^-1,h)) t_{hgh^-1}."""
    G = alpha.group
    out: dict[int, CyclotomicScalar] = {}
    for g, c in x.coeffs.items():
        k = G.conjugate(h, g)
        v = c * alpha.conj_ratio(h, g)
        acc = out.get(k)
        acc = v if acc is None else acc + v
        if acc.is_zero():
            out.pop(k, None)
        else:
            out[k] = acc
    res = GroupAlgebraElement.__new__(GroupAlgebraElement)
    res.coeffs = out
    return res
