"""Exact rank, nullspace and subspace intersection.

Elimination is fraction-free: one step replaces entry m[i][j] by
(piv * m[i][j] - m[i][c] * m[r][j]) / prev, where the division is exact.
Over F_p and Q(zeta_p) the division is field division.  Matrices over a
rational function field are first cleared of denominators row by row,
which leaves the row space unchanged, and eliminated over the polynomial
ring, so no rational function is ever built mid-elimination.
"""

from fractions import Fraction

from .errors import DimensionMismatch
from .funcfield.poly import BiPoly, PolynomialRing
from .funcfield.ratfunc import RatFunc, RationalFunctionField, clear_denominators
from .scalars import CycloNum, CyclotomicField, FpScalar, PrimeField, RationalField


class ExactMatrix:
    """Dense matrix over one declared field (or polynomial ring)."""

    def __init__(self, field, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix dimensions must be positive")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = [[field.convert(x) for x in r] for r in rows]

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self):
        return ExactMatrix(self.field, [list(c) for c in zip(*self.rows)])

    def apply(self, vec):
        """M v, as a list."""
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.ncols} columns")
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, b in zip(row, vec):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {self.nrows}x{self.ncols})"


# ---------------------------------------------------------------------------
# elimination kernels


def _working_rows(field, rows):
    """Rows and the domain to eliminate over (polynomial ring for K(alpha, beta))."""
    if isinstance(field, RationalFunctionField):
        ring = field.ring()
        out = []
        for row in rows:
            if all(x.den.is_one() for x in row):
                out.append([x.num for x in row])
            else:
                out.append(clear_denominators(row)[0])
        return ring, out
    return field, [list(r) for r in rows]


def _pick_pivot(dom, m, r, c):
    best, best_size = None, None
    for i in range(r, len(m)):
        x = m[i][c]
        if dom.is_zero(x):
            continue
        s = dom.size(x)
        if best is None or s < best_size:
            best, best_size = i, s
    return best


def _bareiss_rank(dom, m):
    m = [list(r) for r in m]
    nrows, ncols = len(m), len(m[0])
    prev = dom.one
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = _pick_pivot(dom, m, r, c)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pv = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                a = dom.mul(pv, row[j]) if not dom.is_zero(row[j]) else dom.zero
                if not dom.is_zero(f) and not dom.is_zero(pr[j]):
                    a = dom.sub(a, dom.mul(f, pr[j]))
                row[j] = a if prev == dom.one or dom.is_zero(a) else dom.div(a, prev)
            row[c] = dom.zero
        prev = pv
        r += 1
    return r


def _gauss_jordan(dom, m):
    """Fraction-free reduced echelon form.

    Returns (rows, pivot columns, d): the first len(pivots) rows have d in
    their pivot column and zeros in every other pivot column.
    """
    m = [list(r) for r in m]
    nrows, ncols = len(m), len(m[0])
    prev = dom.one
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = _pick_pivot(dom, m, r, c)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pv = pr[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            for j in range(ncols):
                if j == c:
                    continue
                a = dom.mul(pv, row[j]) if not dom.is_zero(row[j]) else dom.zero
                if not dom.is_zero(f) and not dom.is_zero(pr[j]):
                    a = dom.sub(a, dom.mul(f, pr[j]))
                row[j] = a if prev == dom.one or dom.is_zero(a) else dom.div(a, prev)
            row[c] = dom.zero
        prev = pv
        pivots.append(c)
        r += 1
    return m, pivots, prev


def _normalise(dom, vec):
    if dom.is_field:
        lead = next((x for x in vec if not dom.is_zero(x)), None)
        if lead is None:
            return vec
        inv = dom.inv(lead)
        return [dom.mul(x, inv) for x in vec]
    return dom.normalize_vector(vec)


def _lift(field, dom, vec):
    if dom is field:
        return vec
    return [RatFunc(x) for x in vec]


# ---------------------------------------------------------------------------
# public operations


def rank(M):
    """Rank over the entry field (forward Bareiss elimination)."""
    dom, rows = _working_rows(M.field, M.rows)
    return _bareiss_rank(dom, rows)


def nullspace(M):
    """Basis of the right kernel; each vector is normalised with leading entry monic."""
    dom, rows = _working_rows(M.field, M.rows)
    m, pivots, d = _gauss_jordan(dom, rows)
    ncols = M.ncols
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [dom.zero] * ncols
        v[f] = d
        for r, c in enumerate(pivots):
            x = m[r][f]
            if not dom.is_zero(x):
                v[c] = dom.neg(x)
        basis.append(_lift(M.field, dom, _normalise(dom, v)))
    return basis


def rref(M):
    """Reduced row echelon form over the field: nonzero rows, pivots equal to 1."""
    dom, rows = _working_rows(M.field, M.rows)
    m, pivots, d = _gauss_jordan(dom, rows)
    field = M.field
    out = []
    for r in range(len(pivots)):
        row = m[r]
        if dom is field:
            inv = field.inv(d)
            out.append([field.mul(x, inv) for x in row])
        else:
            out.append([RatFunc(x, d) for x in row])
    return out


def infer_field(x):
    """Field of a sample element, when it is not a bare int."""
    if isinstance(x, RatFunc):
        return RationalFunctionField(x.dom)
    if isinstance(x, BiPoly):
        return PolynomialRing(x.dom)
    if isinstance(x, CycloNum):
        return CyclotomicField(x.p)
    if isinstance(x, FpScalar):
        return PrimeField(x.p)
    if isinstance(x, Fraction):
        return RationalField()
    raise TypeError("cannot infer the field of a plain int; pass field=")


def _field_of(vectors, field):
    if field is not None:
        return field
    for v in vectors:
        for x in v:
            return infer_field(x)
    raise ValueError("cannot infer the field of empty input; pass field=")


def _convert_vectors(field, vectors, dim):
    out = []
    for v in vectors:
        v = list(v)
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {dim}")
        if isinstance(field, PrimeField):
            v = [x.value if isinstance(x, FpScalar) else x for x in v]
        out.append([field.convert(x) for x in v])
    return out


def row_basis(vectors, field=None):
    """Canonical basis (RREF rows) of the span of the given vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    field = _field_of(vectors, field)
    vectors = _convert_vectors(field, vectors, len(vectors[0]))
    return rref(ExactMatrix(field, vectors))


def span_dim(vectors, field=None):
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    field = _field_of(vectors, field)
    return rank(ExactMatrix(field, _convert_vectors(field, vectors, len(vectors[0]))))


def same_span(u, w, field=None):
    """True iff the two families span the same subspace."""
    return row_basis(u, field) == row_basis(w, field)


def in_span(v, basis, field=None):
    field = _field_of([v] + list(basis), field)
    if not basis:
        return all(field.is_zero(x) for x in _convert_vectors(field, [v], len(v))[0])
    return span_dim(list(basis) + [v], field) == span_dim(basis, field)


def subspace_intersection(bases, dim, field=None):
    """Basis of the intersection of the spans, folded left to right.

    Each step takes the kernel of the matrix whose columns are the running
    basis followed by the negated next basis; the first block of each kernel
    vector gives an intersection vector.  Stops early at {0}.
    """
    bases = [[list(v) for v in b] for b in bases]
    if not bases:
        raise ValueError("need at least one subspace")
    field = _field_of([v for b in bases for v in b], field)
    bases = [_convert_vectors(field, b, dim) for b in bases]
    current = rref(ExactMatrix(field, bases[0])) if bases[0] else []
    for nxt in bases[1:]:
        if not current:
            return []
        if not nxt:
            return []
        cols = current + [[field.neg(x) for x in v] for v in nxt]
        M = ExactMatrix(field, [list(r) for r in zip(*cols)])
        k = len(current)
        vecs = []
        for lam in nullspace(M):
            vec = [field.zero] * dim
            for coeff, basis_vec in zip(lam[:k], current):
                if field.is_zero(coeff):
                    continue
                vec = [field.add(a, field.mul(coeff, b)) for a, b in zip(vec, basis_vec)]
            vecs.append(vec)
        current = rref(ExactMatrix(field, vecs)) if vecs else []
    return current
