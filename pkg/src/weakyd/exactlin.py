"""Exact scalar fields and dense linear algebra over object arrays.

Rational scalars are kept as Python ints whenever they are integral and as
``gmpy2.mpq`` otherwise; prime-field scalars are :class:`Fp` elements.  All
arrays are numpy ``object`` arrays so ``@``, ``np.einsum`` and ``np.kron``
work unchanged.  Division is only ever done through :meth:`Field.div`.

Tensor factors are paired row-major: ``(i, j) -> i * dim_B + j``, the same
pairing used by ``np.kron`` and ``ndarray.reshape``.
"""

from dataclasses import dataclass, field as dc_field

import gmpy2
import numpy as np


class FieldError(ValueError):
    pass


class Fp:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = int(v) % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            return other.v
        return int(other)

    def __add__(self, o):
        return Fp(self.v + self._lift(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Fp(self.v - self._lift(o), self.p)

    def __rsub__(self, o):
        return Fp(self._lift(o) - self.v, self.p)

    def __mul__(self, o):
        return Fp(self.v * self._lift(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        return self * Fp(self._lift(o), self.p).inverse()

    def __rtruediv__(self, o):
        return Fp(self._lift(o), self.p) * self.inverse()

    def __eq__(self, o):
        if isinstance(o, Fp):
            return self.v == o.v
        try:
            return self.v == int(o) % self.p
        except (TypeError, ValueError):
            return NotImplemented

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return "Fp(%d, %d)" % (self.v, self.p)


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Base class; subclasses define scalar coercion, division and printing."""

    name = "field"

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "Field(%r)" % self.name

    # arrays -------------------------------------------------------------
    def array(self, data):
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for i, x in enumerate(flat):
            flat[i] = self.scalar(x)
        return a

    def zeros(self, shape):
        return self.array(np.zeros(shape, dtype=object))

    def eye(self, n):
        a = np.zeros((n, n), dtype=object)
        for i in range(n):
            a[i, i] = 1
        return self.array(a)

    def clean(self, a):
        """Return a copy with every entry in canonical scalar form."""
        return self.array(a)

    def one(self):
        return self.scalar(1)

    def zero(self):
        return self.scalar(0)


class RationalField(Field):
    name = "rational"

    def scalar(self, x):
        if isinstance(x, int) and not isinstance(x, bool):
            return x
        if isinstance(x, float):
            raise FieldError("floats are not exact scalars: %r" % x)
        if isinstance(x, Fp):
            raise FieldError("F_p element in a rational context")
        q = gmpy2.mpq(x)
        return int(q) if q.denominator == 1 else q

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return self.scalar(gmpy2.mpq(a) / gmpy2.mpq(b))

    def inv(self, a):
        return self.div(1, a)

    def parse(self, text):
        text = str(text).strip()
        if "/" in text:
            num, den = text.split("/", 1)
        else:
            num, den = text, "1"
        try:
            num, den = int(num), int(den)
        except ValueError:
            raise FieldError("not an exact fraction: %r" % text) from None
        if den == 0:
            raise FieldError("zero denominator in %r" % text)
        return self.scalar(gmpy2.mpq(num, den))

    def fmt(self, x):
        x = self.scalar(x)
        if isinstance(x, int):
            return str(x)
        return "%d/%d" % (int(x.numerator), int(x.denominator))


class PrimeField(Field):
    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.p = p
        self.name = "prime:%d" % p

    def scalar(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldError("mixed characteristics %d and %d" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, float):
            raise FieldError("floats are not exact scalars: %r" % x)
        q = gmpy2.mpq(x)
        return Fp(int(q.numerator), self.p) / Fp(int(q.denominator), self.p)

    def div(self, a, b):
        return self.scalar(a) / self.scalar(b)

    def inv(self, a):
        return self.scalar(a).inverse()

    def parse(self, text):
        q = RationalField().parse(text)
        q = gmpy2.mpq(q)
        if int(q.denominator) % self.p == 0:
            raise FieldError("denominator of %r vanishes mod %d" % (text, self.p))
        return self.scalar(q)

    def fmt(self, x):
        return str(int(self.scalar(x)))


QQ = RationalField()


def field_from_name(name):
    """``"rational"`` or ``"prime:<p>"``."""
    if name in ("rational", "Q", "QQ"):
        return QQ
    if isinstance(name, str) and name.startswith("prime:"):
        try:
            return PrimeField(int(name.split(":", 1)[1]))
        except ValueError:
            raise FieldError("bad prime in %r" % name) from None
    raise FieldError("unknown field %r" % (name,))


# ---------------------------------------------------------------------------
# contractions


def ein(spec, *ops):
    """Exact ``np.einsum`` on object arrays (greedy contraction order)."""
    out = np.einsum(spec, *ops, optimize="greedy")
    if not isinstance(out, np.ndarray):
        out = np.array(out, dtype=object)
    return out


def kron(A, B):
    """Kronecker product with row-major index pairing."""
    return np.kron(np.asarray(A, dtype=object), np.asarray(B, dtype=object))


def is_zero(a):
    return all(x == 0 for x in np.asarray(a, dtype=object).reshape(-1))


def equal(a, b):
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))


# ---------------------------------------------------------------------------
# row reduction


def rref(M, F):
    """Reduced row echelon form.

    Pivots are chosen leftmost-first, taking the first available row with a
    nonzero entry, and scaled to 1.  Returns ``(R, pivots)`` where ``R`` holds
    only the nonzero rows.
    """
    M = np.asarray(M, dtype=object)
    nrows, ncols = M.shape
    rows = [[F.scalar(x) for x in M[i]] for i in range(nrows)]
    pivots = []
    lead = 0
    for c in range(ncols):
        if lead >= nrows:
            break
        r = next((i for i in range(lead, nrows) if rows[i][c] != 0), None)
        if r is None:
            continue
        rows[lead], rows[r] = rows[r], rows[lead]
        piv = rows[lead]
        s = F.inv(piv[c])
        if s != 1:
            piv = [F.scalar(x * s) for x in piv]
            rows[lead] = piv
        for i in range(nrows):
            if i != lead:
                f = rows[i][c]
                if f != 0:
                    row = rows[i]
                    rows[i] = [F.scalar(row[j] - f * piv[j]) if piv[j] != 0 else row[j]
                               for j in range(ncols)]
        pivots.append(c)
        lead += 1
    R = np.empty((len(pivots), ncols), dtype=object)
    for i in range(len(pivots)):
        R[i, :] = rows[i]
    return R, tuple(pivots)


def _kernel_rows(R, pivots, ncols, F):
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = F.zeros((len(free), ncols))
    for k, f in enumerate(free):
        K[k, f] = F.one()
        for i, pc in enumerate(pivots):
            K[k, pc] = F.scalar(-R[i, f])
    return K


def rref_and_kernel(M, F):
    """Column space and kernel of ``M`` as echelon :class:`Subspace` values."""
    M = np.asarray(M, dtype=object)
    R, piv = rref(M, F)
    image = Subspace.from_rows(M.T, F, M.shape[0])
    kernel = Subspace.from_rows(_kernel_rows(R, piv, M.shape[1], F), F, M.shape[1])
    return image, kernel


def rank(M, F):
    return len(rref(M, F)[1])


@dataclass(frozen=True)
class SolutionSet:
    """Solutions of ``A x = b``: empty, a point, or particular + span(kernel)."""

    particular: object  # vector or None
    kernel: object  # Subspace

    @property
    def empty(self):
        return self.particular is None

    @property
    def unique(self):
        return self.particular is not None and self.kernel.dim == 0

    @property
    def kind(self):
        if self.empty:
            return "empty"
        return "unique" if self.unique else "affine"


def solve_linear(A, b, F):
    A = np.asarray(A, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1)
    if A.shape[0] != b.shape[0]:
        raise ValueError("A has %d rows but b has length %d" % (A.shape[0], b.shape[0]))
    n = A.shape[1]
    aug = np.concatenate([A.reshape(A.shape[0], n), b.reshape(-1, 1)], axis=1)
    R, piv = rref(aug, F)
    RA, pivA = rref(A.reshape(A.shape[0], n), F)
    kernel = Subspace.from_rows(_kernel_rows(RA, pivA, n, F), F, n)
    if n in piv:
        return SolutionSet(None, kernel)
    x = F.zeros(n)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return SolutionSet(x, kernel)


def inverse(A, F):
    """Exact inverse of a square matrix; raises ``ValueError`` if singular."""
    A = np.asarray(A, dtype=object)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("not square")
    R, piv = rref(np.concatenate([A, F.eye(n)], axis=1), F)
    if piv[:n] != tuple(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return R[:, n:]


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of F^n stored as an RREF basis (one row per basis vector)."""

    ambient_dim: int
    basis: object
    pivots: tuple
    field: Field = dc_field(default=QQ)

    @classmethod
    def from_rows(cls, rows, F, ambient_dim):
        rows = np.asarray(rows, dtype=object).reshape(-1, ambient_dim)
        if rows.shape[0] == 0:
            return cls(ambient_dim, np.empty((0, ambient_dim), dtype=object), (), F)
        R, piv = rref(rows, F)
        return cls(ambient_dim, R, piv, F)

    @classmethod
    def from_columns(cls, M, F):
        M = np.asarray(M, dtype=object)
        return cls.from_rows(M.T, F, M.shape[0])

    @classmethod
    def whole(cls, n, F):
        return cls(n, F.eye(n), tuple(range(n)), F)

    @property
    def dim(self):
        return len(self.pivots)

    def contains(self, v):
        v = np.asarray(v, dtype=object).reshape(-1)
        return is_zero(v - self.coords(v) @ self.basis) if self.dim else is_zero(v)

    def contains_space(self, other):
        return all(self.contains(r) for r in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))

    def coords(self, v):
        """Coordinates of a member vector in the echelon basis."""
        v = np.asarray(v, dtype=object)
        return v[..., list(self.pivots)]

    @property
    def incl(self):
        """Matrix (ambient x dim) whose columns are the basis vectors."""
        return self.basis.T

    @property
    def select(self):
        """Matrix (dim x ambient) reading off coordinates of member vectors."""
        S = self.field.zeros((self.dim, self.ambient_dim))
        for i, c in enumerate(self.pivots):
            S[i, c] = self.field.one()
        return S

    def complement_coords(self):
        """Non-pivot coordinates: a basis of the quotient F^n / self."""
        p = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in p)

    def quotient_maps(self):
        """``(Q, L)`` with ``Q`` projecting F^n onto F^n/self and ``L`` a lift.

        Quotient coordinates are the non-pivot coordinates after reducing a
        vector by the echelon basis.
        """
        F = self.field
        free = self.complement_coords()
        n = self.ambient_dim
        # reduce e_c by the basis: e_c - sum_i [c pivot of row i] row_i
        red = F.eye(n)
        for i, pc in enumerate(self.pivots):
            red[:, pc] = red[:, pc] - self.basis[i]
        Q = red[list(free), :] if free else F.zeros((0, n))
        L = F.zeros((n, len(free)))
        for k, c in enumerate(free):
            L[c, k] = F.one()
        return Q, L

    def sum(self, other):
        return Subspace.from_rows(np.concatenate([self.basis, other.basis]), self.field,
                                  self.ambient_dim)

    def image(self, A):
        """Image of the subspace under the matrix ``A``."""
        return Subspace.from_rows((A @ self.incl).T, self.field, A.shape[0])
