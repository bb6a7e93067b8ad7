"""Single (ungraded) Hopf quasigroups as structure constants.

A HopfQuasigroup packs a unital, not necessarily associative algebra
(multiplication tensor + unit vector) with a coassociative coalgebra and
an antipode.  The validator decides every axiom as one composed-matrix
identity; associativity is reported but never required, which is the
whole point of the structure.
"""

from __future__ import annotations

from .errors import InvalidLoop, MalformedStructure, NotInvertible
from .exactlin import K_LABELS, LinMap, kron, kron_all, leg_perm, swap_map
from .report import Report
from . import tables


class UnitalAlgebra:
    """dim-dimensional algebra: mult[(i,j,k)] is the e_k coefficient of e_i e_j."""

    __slots__ = ("field", "dim", "labels", "mult", "unit")

    def __init__(self, field, dim, labels, mult, unit):
        self.field = field
        self.dim = dim
        self.labels = tuple(labels)
        if len(self.labels) != dim:
            raise MalformedStructure("label count does not match dimension")
        self.mult = {
            key: value
            for key, value in mult.items()
            if value != field.zero
        }
        for i, j, k in self.mult:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise MalformedStructure(f"mult index {(i, j, k)} outside dimension {dim}")
        self.unit = tuple(unit)
        if len(self.unit) != dim:
            raise MalformedStructure("unit vector length does not match dimension")

    def mult_map(self):
        """Multiplication as a LinMap H (x) H -> H."""
        entries = {
            (k, i * self.dim + j): value for (i, j, k), value in self.mult.items()
        }
        dom = tuple(a + b for a in self.labels for b in self.labels)
        return LinMap(self.field, self.dim, self.dim * self.dim, entries, dom, self.labels)

    def unit_map(self):
        """Unit as a LinMap k -> H."""
        entries = {
            (i, 0): value for i, value in enumerate(self.unit) if value != self.field.zero
        }
        return LinMap(self.field, self.dim, 1, entries, K_LABELS, self.labels)

    def relabeled(self, labels):
        return UnitalAlgebra(self.field, self.dim, labels, self.mult, self.unit)

    def __eq__(self, other):
        if not isinstance(other, UnitalAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.labels == other.labels
            and self.mult == other.mult
            and self.unit == other.unit
        )

    __hash__ = None

    def __repr__(self):
        return f"UnitalAlgebra(dim={self.dim}, {self.field.name})"


class HopfQuasigroup:
    """Algebra + coalgebra + antipode over one based space."""

    __slots__ = ("field", "algebra", "comult", "counit", "antipode")

    def __init__(self, field, algebra, comult, counit, antipode):
        self.field = field
        self.algebra = algebra
        n = algebra.dim
        if comult.cols != n or comult.rows != n * n or comult.dom != algebra.labels:
            raise MalformedStructure("comultiplication has wrong shape or labels")
        if counit.rows != 1 or counit.cols != n or counit.dom != algebra.labels:
            raise MalformedStructure("counit has wrong shape or labels")
        if (
            antipode.rows != n
            or antipode.cols != n
            or antipode.dom != algebra.labels
            or antipode.cod != algebra.labels
        ):
            raise MalformedStructure("antipode has wrong shape or labels")
        expected = tuple(a + b for a in algebra.labels for b in algebra.labels)
        if comult.cod != expected:
            raise MalformedStructure("comultiplication codomain labels are not pairs")
        if counit.cod != K_LABELS:
            raise MalformedStructure("counit must land in the ground field")
        self.comult = comult
        self.counit = counit
        self.antipode = antipode

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    def __eq__(self, other):
        if not isinstance(other, HopfQuasigroup):
            return NotImplemented
        return (
            self.field == other.field
            and self.algebra == other.algebra
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    __hash__ = None

    def __repr__(self):
        return f"HopfQuasigroup(dim={self.dim}, {self.field.name})"


def loop_algebra(t, field, check=True):
    """Group-like structure on the basis of a loop: Dx = x(x)x, eps(x) = 1,
    S(x) = x^-1.  The loop must pass the inverse-property validator unless
    check is disabled (used to probe deliberately broken tables)."""
    if check:
        rep = tables.validate_ip_loop(t)
        if not rep.passed:
            raise InvalidLoop(
                "table is not an inverse-property loop: "
                + ", ".join(rep.failed_ids())
            )
    n = t.order
    labels = tuple((s,) for s in t.labels)
    mult = {(i, j, t.table[i][j]): field.one for i in range(n) for j in range(n)}
    unit = tuple(field.one if i == 0 else field.zero for i in range(n))
    algebra = UnitalAlgebra(field, n, labels, mult, unit)
    pair_labels = tuple(a + b for a in labels for b in labels)
    comult = LinMap(
        field, n * n, n, {(i * n + i, i): field.one for i in range(n)}, labels, pair_labels
    )
    counit = LinMap(field, 1, n, {(0, i): field.one for i in range(n)}, labels, K_LABELS)
    inv = [t.right_inverse[i] for i in range(n)]
    if any(v is None for v in inv):
        raise InvalidLoop("some element has no right inverse; cannot build antipode")
    antipode = LinMap.from_permutation(field, inv, labels)
    return HopfQuasigroup(field, algebra, comult, counit, antipode)


def group_algebra(g, field):
    """Loop algebra of a group table (always a Hopf algebra)."""
    return loop_algebra(tables.LoopTable.from_group(g), field)


def validate_hopf_quasigroup(h):
    """All axioms as exact composed-map identities, with witnesses.

    Associativity (HQ-assoc) is informational; the compensation laws
    HQ-2.5-*/HQ-2.6-* are what the antipode must satisfy instead.
    """
    field = h.field
    rep = Report(f"hopf quasigroup (dim {h.dim}, {field.name})")
    alg = h.algebra
    mu = alg.mult_map()
    eta = alg.unit_map()
    delta = h.comult
    eps = h.counit
    s = h.antipode
    ident = LinMap.identity(field, alg.labels)
    one_k = LinMap.identity(field, K_LABELS)

    # unital algebra
    rep.add_map_equality("HQ-unit-left", mu @ kron(eta, ident), ident)
    rep.add_map_equality("HQ-unit-right", mu @ kron(ident, eta), ident)

    # coalgebra
    rep.add_map_equality("HQ-coassoc", kron(delta, ident) @ delta, kron(ident, delta) @ delta)
    rep.add_map_equality("HQ-counit-left", kron(eps, ident) @ delta, ident)
    rep.add_map_equality("HQ-counit-right", kron(ident, eps) @ delta, ident)

    # comultiplication and counit are unital algebra morphisms
    mu_hh = kron(mu, mu) @ leg_perm(
        field, [alg.labels] * 4, (0, 2, 1, 3)
    )
    rep.add_map_equality("HQ-delta-multiplicative", delta @ mu, mu_hh @ kron(delta, delta))
    rep.add_map_equality("HQ-delta-unit", delta @ eta, kron(eta, eta))
    rep.add_map_equality("HQ-epsilon-multiplicative", eps @ mu, kron(eps, eps))
    rep.add_map_equality("HQ-epsilon-unit", eps @ eta, one_k)

    # antipode compensation identities on H (x) H
    d_i = kron(delta, ident)
    i_d = kron(ident, delta)
    left_shape = mu @ kron(ident, mu)
    right_shape = mu @ kron(mu, ident)
    eps_i = kron(eps, ident)
    i_eps = kron(ident, eps)
    rep.add_map_equality(
        "HQ-2.5-left", left_shape @ kron_all(s, ident, ident) @ d_i, eps_i
    )
    rep.add_map_equality(
        "HQ-2.5-right", left_shape @ kron_all(ident, s, ident) @ d_i, eps_i
    )
    rep.add_map_equality(
        "HQ-2.6-left", right_shape @ kron_all(ident, ident, s) @ i_d, i_eps
    )
    rep.add_map_equality(
        "HQ-2.6-right", right_shape @ kron_all(ident, s, ident) @ i_d, i_eps
    )

    # associativity, reported but not required
    assoc = rep.add_map_equality(
        "HQ-assoc", mu @ kron(mu, ident), mu @ kron(ident, mu), required=False
    )
    if assoc.passed:
        # associative case degenerates to the usual Hopf antipode law
        rep.add_map_equality(
            "HQ-hopf-antipode", mu @ kron(s, ident) @ delta, eta @ eps, required=False
        )
    return rep


def antipode_inverse_laws(h):
    """The compensation identities for the inverse antipode; reports
    HQ-antipode-bijective failed instead of raising when S is singular."""
    field = h.field
    rep = Report(f"antipode inverse laws (dim {h.dim}, {field.name})")
    try:
        s_inv = h.antipode.invert()
    except NotInvertible as exc:
        rep.add(
            "HQ-antipode-bijective",
            False,
            detail=f"antipode not bijective (rank {exc.rank})",
        )
        return rep
    rep.add("HQ-antipode-bijective", True)

    alg = h.algebra
    mu = alg.mult_map()
    delta = h.comult
    eps = h.counit
    ident = LinMap.identity(field, alg.labels)
    flip_first = leg_perm(field, [alg.labels] * 3, (1, 0, 2))
    flip_last = leg_perm(field, [alg.labels] * 3, (0, 2, 1))
    left_shape = mu @ kron(ident, mu)
    right_shape = mu @ kron(mu, ident)
    eps_i = kron(eps, ident)
    i_eps = kron(ident, eps)

    rep.add_map_equality(
        "HQ-2.9-left",
        left_shape @ kron_all(s_inv, ident, ident) @ flip_first @ kron(delta, ident),
        eps_i,
    )
    rep.add_map_equality(
        "HQ-2.9-right",
        left_shape @ kron_all(ident, s_inv, ident) @ flip_first @ kron(delta, ident),
        eps_i,
    )
    rep.add_map_equality(
        "HQ-2.10-left",
        right_shape @ kron_all(ident, s_inv, ident) @ flip_last @ kron(ident, delta),
        i_eps,
    )
    rep.add_map_equality(
        "HQ-2.10-right",
        left_shape @ kron_all(ident, ident, s_inv) @ flip_last @ kron(ident, delta),
        i_eps,
    )
    return rep
