"""Exact scalars and based linear algebra.

Every structure map in this library (multiplication, comultiplication,
counit, antipode, crossing, action, coaction, braiding) is a LinMap: a
sparse exact matrix between based vector spaces.  Axioms are decided by
composing LinMaps and comparing for literal equality, so the arithmetic
must be exact: scalars live in Q (as fractions) or in a prime field
GF(p) (as canonical representatives in [0, p)).

Basis labels are tuples of string atoms.  Tensor products concatenate
label tuples, and the ground field k carries the empty tuple (), so
k (x) V, V (x) k and V have literally identical labels and the monoidal
structure is strict: unitors and associators are identity matrices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import DomainMismatch, FieldError, NotInvertible

#: A basis label: a tuple of atoms. () labels the one-dimensional ground field.
Label = tuple

#: Label list of the ground field k viewed as a based space.
K_LABELS = ((),)


def default_labels(n, prefix=""):
    """Canonical labels ("<prefix>0",), ..., ("<prefix>n-1",)."""
    return tuple((f"{prefix}{i}",) for i in range(n))


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field Q with arbitrary-precision Fraction scalars."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def scalar(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise FieldError("division by zero")
        return a / b

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero")
        return 1 / Fraction(a)

    def parse(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    def fmt(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """GF(p) for prime p; scalars are ints reduced to [0, p)."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"GF modulus must be prime, got {p!r}")
        self.p = p
        self.name = f"GF:{p}"
        self.zero = 0
        self.one = 1 % p

    def scalar(self, value):
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise FieldError("division by zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, text):
        try:
            value = int(text)
        except ValueError as exc:
            raise FieldError(f"bad GF({self.p}) literal {text!r}") from exc
        if not 0 <= value < self.p:
            raise FieldError(f"GF({self.p}) scalar {value} outside [0, {self.p})")
        return value

    def fmt(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def field_from_name(name):
    """Parse a field tag: "Q" or "GF:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("GF:"):
        try:
            return PrimeField(int(name[3:]))
        except ValueError as exc:
            raise FieldError(f"bad field tag {name!r}") from exc
    raise FieldError(f"unknown field tag {name!r}")


class LinMap:
    """Sparse exact matrix with labeled domain and codomain bases.

    rows x cols matrix acting on column vectors; entries holds only the
    nonzero coefficients, keyed by (row, col).  Equality is that of the
    dense matrix together with the basis labels.
    """

    __slots__ = ("field", "rows", "cols", "entries", "dom", "cod")

    def __init__(self, field, rows, cols, entries, dom=None, cod=None):
        dom = default_labels(cols) if dom is None else tuple(dom)
        cod = default_labels(rows) if cod is None else tuple(cod)
        if len(dom) != cols or len(cod) != rows:
            raise DomainMismatch(
                f"label lists ({len(cod)}, {len(dom)}) do not match shape ({rows}, {cols})"
            )
        clean = {}
        for (i, j), value in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DomainMismatch(f"entry index ({i}, {j}) outside {rows}x{cols}")
            if value != field.zero:
                clean[(i, j)] = value
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = clean
        self.dom = dom
        self.cod = cod

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, field, rowdata, dom=None, cod=None):
        """Build from a dense list of rows of scalars."""
        rows = len(rowdata)
        cols = len(rowdata[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rowdata):
            if len(row) != cols:
                raise DomainMismatch("ragged row data")
            for j, value in enumerate(row):
                value = field.scalar(value)
                if value != field.zero:
                    entries[(i, j)] = value
        return cls(field, rows, cols, entries, dom, cod)

    @classmethod
    def identity(cls, field, labels):
        n = len(labels)
        return cls(field, n, n, {(i, i): field.one for i in range(n)}, labels, labels)

    @classmethod
    def zero_map(cls, field, cod, dom):
        return cls(field, len(cod), len(dom), {}, dom, cod)

    @classmethod
    def from_permutation(cls, field, perm, dom, cod=None):
        """Matrix of the basis permutation j -> perm[j]."""
        cod = dom if cod is None else cod
        return cls(
            field,
            len(cod),
            len(dom),
            {(perm[j], j): field.one for j in range(len(dom))},
            dom,
            cod,
        )

    # -- structure ----------------------------------------------------

    def entry(self, i, j):
        return self.entries.get((i, j), self.field.zero)

    def to_dense(self):
        grid = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            grid[i][j] = value
        return grid

    def relabeled(self, dom=None, cod=None):
        return LinMap(
            self.field,
            self.rows,
            self.cols,
            self.entries,
            self.dom if dom is None else dom,
            self.cod if cod is None else cod,
        )

    def column(self, j):
        """Image of the j-th domain basis vector as a sparse dict."""
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def apply(self, vec):
        """Apply to a sparse column vector {index: scalar}."""
        field = self.field
        out = {}
        for (i, j), value in self.entries.items():
            coeff = vec.get(j)
            if coeff is None:
                continue
            acc = field.add(out.get(i, field.zero), field.mul(value, coeff))
            if acc == field.zero:
                out.pop(i, None)
            else:
                out[i] = acc
        return out

    # -- algebra ------------------------------------------------------

    def __matmul__(self, other):
        return compose(self, other)

    def kron(self, other):
        return kron(self, other)

    def __add__(self, other):
        self._require_same_shape(other)
        field = self.field
        entries = dict(self.entries)
        for key, value in other.entries.items():
            acc = field.add(entries.get(key, field.zero), value)
            if acc == field.zero:
                entries.pop(key, None)
            else:
                entries[key] = acc
        return LinMap(field, self.rows, self.cols, entries, self.dom, self.cod)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.field
        entries = {key: field.neg(value) for key, value in self.entries.items()}
        return LinMap(field, self.rows, self.cols, entries, self.dom, self.cod)

    def scale(self, scalar):
        field = self.field
        scalar = field.scalar(scalar)
        entries = {key: field.mul(scalar, value) for key, value in self.entries.items()}
        return LinMap(field, self.rows, self.cols, entries, self.dom, self.cod)

    def transpose(self):
        entries = {(j, i): v for (i, j), v in self.entries.items()}
        return LinMap(self.field, self.cols, self.rows, entries, self.cod, self.dom)

    def invert(self):
        return invert(self)

    # -- comparison ---------------------------------------------------

    def same_entries(self, other):
        """Dense-matrix equality, ignoring basis labels."""
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.same_entries(other)
            and self.dom == other.dom
            and self.cod == other.cod
        )

    __hash__ = None

    def _require_same_shape(self, other):
        if (
            self.field != other.field
            or self.rows != other.rows
            or self.cols != other.cols
            or self.dom != other.dom
            or self.cod != other.cod
        ):
            raise DomainMismatch("maps have different shapes or labels")

    def __repr__(self):
        return f"LinMap({self.rows}x{self.cols}, {len(self.entries)} nonzero, {self.field.name})"


def compose(f, g):
    """The composite f . g (apply g first); needs domain(f) == codomain(g)."""
    if f.field != g.field:
        raise DomainMismatch("maps over different fields")
    if f.cols != g.rows or f.dom != g.cod:
        raise DomainMismatch(
            f"cannot compose {f.rows}x{f.cols} with {g.rows}x{g.cols}: "
            "inner dimensions or basis labels disagree"
        )
    field = f.field
    g_by_row = {}
    for (k, j), value in g.entries.items():
        g_by_row.setdefault(k, []).append((j, value))
    out = {}
    for (i, k), a in f.entries.items():
        row = g_by_row.get(k)
        if not row:
            continue
        for j, b in row:
            key = (i, j)
            acc = out.get(key)
            term = field.mul(a, b)
            out[key] = term if acc is None else field.add(acc, term)
    return LinMap(field, f.rows, g.cols, out, g.dom, f.cod)


def kron(f, g):
    """Kronecker product; left factor index varies slowest, labels concatenate."""
    if f.field != g.field:
        raise DomainMismatch("maps over different fields")
    field = f.field
    entries = {}
    for (i1, j1), a in f.entries.items():
        for (i2, j2), b in g.entries.items():
            entries[(i1 * g.rows + i2, j1 * g.cols + j2)] = field.mul(a, b)
    dom = tuple(la + lb for la in f.dom for lb in g.dom)
    cod = tuple(la + lb for la in f.cod for lb in g.cod)
    return LinMap(field, f.rows * g.rows, f.cols * g.cols, entries, dom, cod)


def kron_all(first, *rest):
    out = first
    for factor in rest:
        out = kron(out, factor)
    return out


def invert(f):
    """Exact inverse by Gauss-Jordan elimination; raises NotInvertible with rank."""
    if f.rows != f.cols:
        raise DomainMismatch("only square maps can be inverted")
    n = f.rows
    field = f.field
    a = f.to_dense()
    b = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, n):
            if a[r][col] != field.zero:
                pivot = r
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        b[rank], b[pivot] = b[pivot], b[rank]
        scale = field.inv(a[rank][col])
        a[rank] = [field.mul(scale, v) for v in a[rank]]
        b[rank] = [field.mul(scale, v) for v in b[rank]]
        for r in range(n):
            if r == rank:
                continue
            factor = a[r][col]
            if factor == field.zero:
                continue
            a[r] = [field.sub(v, field.mul(factor, w)) for v, w in zip(a[r], a[rank])]
            b[r] = [field.sub(v, field.mul(factor, w)) for v, w in zip(b[r], b[rank])]
        rank += 1
    if rank < n:
        raise NotInvertible(f"matrix has rank {rank} < {n}", rank=rank)
    # domain and codomain labels swap on inversion
    return LinMap.from_rows(field, b, dom=f.cod, cod=f.dom)


def swap_map(field, labels_a, labels_b):
    """The flip A (x) B -> B (x) A on based spaces given by their labels."""
    na, nb = len(labels_a), len(labels_b)
    entries = {}
    for i in range(na):
        for j in range(nb):
            entries[(j * na + i, i * nb + j)] = field.one
    dom = tuple(la + lb for la in labels_a for lb in labels_b)
    cod = tuple(lb + la for lb in labels_b for la in labels_a)
    return LinMap(field, na * nb, na * nb, entries, dom, cod)


def leg_perm(field, legs, order):
    """Permutation of tensor legs.

    legs is a sequence of label lists; order[j] names the input leg that
    lands in output slot j.  Returns the permutation matrix
    (x) legs -> (x) [legs[i] for i in order].
    """
    if sorted(order) != list(range(len(legs))):
        raise DomainMismatch(f"{order!r} is not a permutation of the legs")
    dims = [len(labels) for labels in legs]
    out_dims = [dims[i] for i in order]
    entries = {}
    for multi in product(*[range(d) for d in dims]):
        col = 0
        for d, idx in zip(dims, multi):
            col = col * d + idx
        row = 0
        for slot, src in enumerate(order):
            row = row * out_dims[slot] + multi[src]
        entries[(row, col)] = field.one
    dom = tuple(
        _concat_labels(legs, multi)
        for multi in product(*[range(d) for d in dims])
    )
    cod = tuple(
        _concat_labels([legs[i] for i in order], multi)
        for multi in product(*[range(d) for d in out_dims])
    )
    total = 1
    for d in dims:
        total *= d
    return LinMap(field, total, total, entries, dom, cod)


def _concat_labels(legs, multi):
    out = ()
    for labels, idx in zip(legs, multi):
        out = out + labels[idx]
    return out
