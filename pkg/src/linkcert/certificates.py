"""The two algebra families and checkable certificates for their properties.

Characteristic p: A_{i,j} = [alpha^i beta^j, beta) for i != 0 and
[beta^j, alpha) for i = 0, indexed by (i, j) != (0, 0).  Each is certified
totally ramified for the rank-2 valuation, and the classes of the
trace-zero monomials modulo the value group of F are computed.

Characteristic 0: A_{i,j} = (alpha - i, beta) for j = 0 and
(alpha^i beta - j, alpha) for j >= 1, over Q(zeta_p)(alpha, beta).  The
residue-level ingredients are certified: the residue of a reduced norm,
the degree of the residue extension, and the trivial intersection of the
spans W_{i,j} in E = F_p(alpha, beta) over E^p.
"""

import random
import time
from dataclasses import dataclass
from enum import Enum

from .algebra import Variant, additive_spec, make_algebra, multiplicative_spec
from .errors import InvalidParameter, NegativeValue, NotCertified, UnsupportedVariant
from .funcfield.frobenius import EP_NAMES, ep_coordinates
from .funcfield.poly import BiPoly
from .funcfield.ratfunc import RatFunc, RationalFunctionField
from .funcfield.valuation import Coset2, gauss_residue, gauss_valuation, rank2_valuation
from .linalg import ExactMatrix, nullspace, rank, same_span, span_dim, subspace_intersection
from .scalars import INFINITY, CycloNum, CyclotomicField, PrimeField, PrimeParam


class CertKind(str, Enum):
    TRACE_FORMULA = "TraceFormula"
    TOTALLY_RAMIFIED = "TotallyRamified"
    COSET_PROFILE = "CosetProfile"
    PROFILE_INTERSECTION = "ProfileIntersection"
    LEMMA_USEFUL_V = "LemmaUsefulV"
    LEMMA_USEFUL_W = "LemmaUsefulW"
    NORM_RESIDUE = "NormResidue"
    RESIDUE_DEGREE = "ResidueDegree"


_SLUG = {
    CertKind.TRACE_FORMULA: "trace-formula",
    CertKind.TOTALLY_RAMIFIED: "totally-ramified",
    CertKind.COSET_PROFILE: "coset-profile",
    CertKind.PROFILE_INTERSECTION: "profile-intersection",
    CertKind.LEMMA_USEFUL_V: "lemma-useful-V",
    CertKind.LEMMA_USEFUL_W: "lemma-useful-W",
    CertKind.NORM_RESIDUE: "norm-residue",
    CertKind.RESIDUE_DEGREE: "residue-degree",
}

VERIFIED = "verified"
FAILED = "failed"


@dataclass(frozen=True, order=True)
class FamilyIndex:
    i: int
    j: int

    def as_list(self):
        return [self.i, self.j]

    def __str__(self):
        return f"A[{self.i},{self.j}]"


@dataclass
class Certificate:
    kind: CertKind
    p: int
    status: str
    witnesses: dict
    index: FamilyIndex = None
    seed: int = None
    elapsed_ms: float = 0.0
    headline: str = ""  # short key=value text for one-line reports

    @property
    def verified(self):
        return self.status == VERIFIED

    def to_json(self, timing=True):
        out = {
            "kind": self.kind.value,
            "p": self.p,
            "index": self.index.as_list() if self.index is not None else None,
            "status": self.status,
            "witnesses": self.witnesses,
            "seed": self.seed,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def summary(self):
        label = str(self.index) if self.index is not None else "-"
        text = f"{label} {_SLUG[self.kind]} {'OK' if self.verified else 'FAIL'}"
        return f"{text} {self.headline}" if self.headline else text


class _Clock:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.t0) * 1000.0
        return False


def _status(ok):
    return VERIFIED if ok else FAILED


def _cls(c):
    return [c.a, c.b]


def _cls_text(c):
    return str(c)


# ---------------------------------------------------------------------------
# families


def charp_family(p):
    """[(FamilyIndex, AlgebraSpec)] for the p^2 - 1 additive algebras."""
    p = int(PrimeParam(p))
    fp = PrimeField(p)
    al, be = RatFunc.alpha(fp), RatFunc.beta(fp)
    out = []
    for i in range(p):
        for j in range(p):
            if i == 0 and j == 0:
                continue
            if i:
                spec = additive_spec(al ** i * be ** j, be, p)
            else:
                spec = additive_spec(be ** j, al, p)
            out.append((FamilyIndex(i, j), spec))
    return out


def char0_family(p):
    """[(FamilyIndex, AlgebraSpec)] for the p^2 multiplicative algebras."""
    p = int(PrimeParam(p))
    cf = CyclotomicField(p)
    al, be = RatFunc.alpha(cf), RatFunc.beta(cf)
    out = []
    for i in range(p):
        for j in range(p):
            if j == 0:
                spec = multiplicative_spec(al - i, be, p)
            else:
                spec = multiplicative_spec(al ** i * be - j, al, p)
            out.append((FamilyIndex(i, j), spec))
    return out


# ---------------------------------------------------------------------------
# characteristic p: ramification and coset profiles


def _require_additive(spec):
    if spec.variant is not Variant.ADDITIVE:
        raise UnsupportedVariant("this certificate is for [a, b) symbols over F_p(alpha, beta)")


def _integral_class(v, p):
    return (int(v.a) % p, int(v.b) % p)


def totally_ramified_certificate(spec, index=None):
    """Negativity and F_p-independence of the classes of v(a), v(b) in Gamma_F / p Gamma_F."""
    _require_additive(spec)
    p = spec.p
    with _Clock() as clock:
        va, vb = rank2_valuation(spec.a), rank2_valuation(spec.b)
        w = {"v_a": va.as_list(), "v_b": vb.as_list()}
        ok = True
        headline = ""
        if va.infinite or vb.infinite or not va.is_negative() or not vb.is_negative():
            ok = False
            w["counterexample"] = {"reason": "value not negative",
                                   "values": {"a": va.as_list(), "b": vb.as_list()}}
        else:
            ca, cb = _integral_class(va, p), _integral_class(vb, p)
            det = (ca[0] * cb[1] - ca[1] * cb[0]) % p
            w.update({"class_a": list(ca), "class_b": list(cb), "det_mod_p": det})
            if det == 0:
                ok = False
                fp = PrimeField(p)
                rel = nullspace(ExactMatrix(fp, [[ca[0], cb[0]], [ca[1], cb[1]]]))[0]
                w["counterexample"] = {"reason": "classes dependent mod p", "relation": list(rel)}
            else:
                missing = ((va / p) * (p - 1)).coset(p)
                w["missing_class"] = _cls(missing)
                headline = f"missing-class={_cls_text(missing)}"
    return Certificate(CertKind.TOTALLY_RAMIFIED, p, _status(ok), w, index,
                       elapsed_ms=clock.ms, headline=headline)


def monomial_values(spec):
    """(v(x), v(y)) = (v(a) / p, v(b) / p) for a certified totally ramified [a, b)."""
    cert = totally_ramified_certificate(spec)
    if not cert.verified:
        raise NotCertified(f"{spec} is not certified totally ramified: {cert.witnesses.get('counterexample')}")
    p = spec.p
    return rank2_valuation(spec.a) / p, rank2_valuation(spec.b) / p


@dataclass(frozen=True)
class CosetProfile:
    """Classes mod Z x Z of the values of x^k y^l, (k, l) != (p - 1, 0)."""

    p: int
    classes: frozenset
    by_monomial: tuple  # ((k, l), Coset2) in index order

    @property
    def distinct(self):
        return len(self.classes) == len(self.by_monomial)

    def missing(self):
        p = self.p
        return [Coset2(p, a, b) for a in range(p) for b in range(p)
                if Coset2(p, a, b) not in self.classes]

    def collisions(self):
        seen = {}
        out = []
        for kl, c in self.by_monomial:
            if c in seen:
                out.append((seen[c], kl))
            else:
                seen[c] = kl
        return out


def coset_profile(spec):
    vx, vy = monomial_values(spec)
    p = spec.p
    items = tuple(((k, l), (vx * k + vy * l).coset(p))
                  for k in range(p) for l in range(p) if (k, l) != (p - 1, 0))
    return CosetProfile(p, frozenset(c for _, c in items), items)


def coset_profile_certificate(spec, index=None):
    """p^2 - 1 distinct classes and one missing class (equal to (i/p, j/p) when indexed)."""
    p = spec.p
    with _Clock() as clock:
        prof = coset_profile(spec)
        missing = prof.missing()
        w = {"denominator": p,
             "classes": sorted(_cls(c) for c in prof.classes),
             "missing": [_cls(c) for c in missing]}
        ok = prof.distinct and len(missing) == 1
        if index is not None:
            w["expected_missing"] = [index.i, index.j]
            ok = ok and missing == [Coset2(p, index.i, index.j)]
        if not ok:
            coll = prof.collisions()
            if coll:
                w["counterexample"] = {"colliding_monomials": [list(map(list, pair)) for pair in coll]}
            else:
                w["counterexample"] = {"missing": w["missing"]}
        headline = "missing-class=" + ",".join(_cls_text(c) for c in missing)
    return Certificate(CertKind.COSET_PROFILE, p, _status(ok), w, index,
                       elapsed_ms=clock.ms, headline=headline)


def profile_intersection(profiles):
    """Verified iff the profiles intersect in exactly the zero class."""
    profiles = list(profiles)
    if not profiles:
        raise ValueError("need at least one profile")
    p = profiles[0].p
    with _Clock() as clock:
        common = set(profiles[0].classes)
        for prof in profiles[1:]:
            common &= prof.classes
        zero = Coset2(p, 0, 0)
        ok = common == {zero}
        w = {"denominator": p, "profiles": len(profiles),
             "intersection": sorted(_cls(c) for c in common)}
        if not ok:
            w["counterexample"] = {"surviving": sorted(_cls(c) for c in common if c != zero)}
    headline = "intersection=" + ",".join(_cls_text(c) for c in sorted(common))
    return Certificate(CertKind.PROFILE_INTERSECTION, p, _status(ok), w,
                       elapsed_ms=clock.ms, headline=headline)


# ---------------------------------------------------------------------------
# Lemma useful: spans over E^p


def _fp_coords_alpha(f, p):
    """Coordinates of f in E^p(alpha) on alpha^0..alpha^(p-1), when they are constants."""
    ev = ep_coordinates(f)
    out = []
    for m in range(p):
        c = ev[m, 0]
        if not c.is_constant():
            raise ValueError(f"{f} has non-constant E^p coordinates")
        out.append(c.num.constant_value())
    if any(ev[m, n] for m in range(p) for n in range(1, p)):
        raise ValueError(f"{f} involves beta")
    return out


def lemma_useful_V(p):
    """V_i = Span{(alpha - i)^k : 1 <= k < p} intersect trivially.

    Each V_i is cross-checked against the kernel of (1, i, ..., i^(p-1)).
    """
    p = int(PrimeParam(p))
    fp = PrimeField(p)
    al = BiPoly.alpha(fp)
    with _Clock() as clock:
        bases, dims, agree = [], [], []
        for i in range(p):
            basis = [_fp_coords_alpha((al - i) ** k, p) for k in range(1, p)]
            bases.append(basis)
            dims.append(span_dim(basis, fp))
            crit = nullspace(ExactMatrix(fp, [[pow(i, m, p) for m in range(p)]]))
            agree.append(same_span(basis, crit, fp))
        inter = subspace_intersection(bases, p, fp)
        ok = not inter and all(d == p - 1 for d in dims) and all(agree)
        w = {"dims": dims, "membership_agrees": agree, "intersection_dim": len(inter)}
        if not ok:
            if inter:
                w["counterexample"] = {"vector": [int(x) for x in inter[0]]}
            else:
                bad = next(i for i in range(p) if dims[i] != p - 1 or not agree[i])
                w["counterexample"] = {"i": bad, "dim": dims[bad], "membership_agrees": agree[bad]}
    return Certificate(CertKind.LEMMA_USEFUL_V, p, _status(ok), w, elapsed_ms=clock.ms,
                       headline=f"dim={len(inter)}")


def _ep_vectors(polys):
    return [ep_coordinates(f).vector() for f in polys]


def w_generators(p, i, j):
    """Polynomials spanning W_{i,j} over E^p."""
    fp = PrimeField(p)
    al, be = BiPoly.alpha(fp), BiPoly.beta(fp)
    if j == 0:
        g, h = al - i, be
    else:
        g, h = al ** i * be - j, None
    out = []
    for m in range(p):
        for n in range(p):
            if (m, n) == (0, 0):
                continue
            if j == 0:
                out.append(g ** m * h ** n)
            else:
                out.append(al ** m * g ** n)
    return out


def lemma_useful_W(p):
    """W_{i,j} intersect trivially; the two intermediate identities hold.

    * intersection over i of W_{i,0} = E^p(alpha)-span of beta^k, 1 <= k < p
    * W_{0,0} intersected with W_{i,j}, 1 <= j < p,
      = E^p(alpha^i beta)-span of alpha^k, 1 <= k < p
    """
    p = int(PrimeParam(p))
    fp = PrimeField(p)
    K = RationalFunctionField(fp)
    dim = p * p
    al, be = BiPoly.alpha(fp), BiPoly.beta(fp)
    with _Clock() as clock:
        spans = {(i, j): _ep_vectors(w_generators(p, i, j)) for i in range(p) for j in range(p)}
        dims = {ij: span_dim(v, K) for ij, v in spans.items()}

        col0 = subspace_intersection([spans[(i, 0)] for i in range(p)], dim, K)
        target0 = _ep_vectors([al ** m * be ** n for m in range(p) for n in range(1, p)])
        first_ok = same_span(col0, target0, K)

        second = []
        for i in range(p):
            inter = subspace_intersection([spans[(0, 0)]] + [spans[(i, j)] for j in range(1, p)], dim, K)
            target = _ep_vectors([al ** k * (al ** i * be) ** n for k in range(1, p) for n in range(p)])
            second.append(same_span(inter, target, K))

        full = subspace_intersection([spans[(i, j)] for i in range(p) for j in range(p)], dim, K)
        ok = not full and all(d == dim - 1 for d in dims.values()) and first_ok and all(second)
        w = {
            "dims": [[i, j, dims[(i, j)]] for i, j in sorted(dims)],
            "intersection_dim": len(full),
            "column_intersection_dim": len(col0),
            "column_identity": first_ok,
            "row_identities": second,
        }
        if not ok:
            if full:
                w["counterexample"] = {"vector": [x.fmt(EP_NAMES) for x in full[0]]}
            elif not first_ok:
                w["counterexample"] = {"column_intersection": [[x.fmt(EP_NAMES) for x in v] for v in col0]}
            elif not all(second):
                w["counterexample"] = {"row_identity_fails_at_i": second.index(False)}
            else:
                bad = next(ij for ij, d in sorted(dims.items()) if d != dim - 1)
                w["counterexample"] = {"index": list(bad), "dim": dims[bad]}
    return Certificate(CertKind.LEMMA_USEFUL_W, p, _status(ok), w, elapsed_ms=clock.ms,
                       headline=f"dim={len(full)}")


# ---------------------------------------------------------------------------
# characteristic 0: residues


def _require_multiplicative(spec):
    if spec.variant is not Variant.MULTIPLICATIVE:
        raise UnsupportedVariant("this certificate is for (a, b) symbols over Q(zeta_p)(alpha, beta)")


def _frobenius(f):
    """f^p for f over F_p: coefficients are fixed, exponents scale by p."""
    return RatFunc(f.num.inflate(f.dom.p), f.den.inflate(f.dom.p))


def expected_norm_residue(spec, t):
    """sum residue(c_{m,n})^p * residue(a)^m * residue(b)^n, by direct expansion."""
    p = spec.p
    g, d = gauss_residue(spec.a), gauss_residue(spec.b)
    g_pows, d_pows = [g ** m for m in range(p)], [d ** n for n in range(p)]
    total = RatFunc.zero(PrimeField(p))
    for m in range(p):
        for n in range(p):
            c = t.coeffs[m][n]
            if c:
                total = total + _frobenius(gauss_residue(c)) * g_pows[m] * d_pows[n]
    return total


def norm_residue_check(spec, t, trace_zero=True, index=None, seed=None):
    """residue(Nrd(t)) equals the direct expansion, for t of value zero."""
    _require_multiplicative(spec)
    p = spec.p
    vals = [gauss_valuation(c) for row in t.coeffs for c in row]
    finite = [v for v in vals if v != INFINITY]
    if not finite or min(finite) < 0:
        raise NegativeValue("t needs coefficients of nonnegative value")
    if min(finite) != 0:
        raise NegativeValue("t must have value zero (some coefficient of value 0)")
    if trace_zero and t.coeffs[0][0]:
        raise InvalidParameter("trace-zero sample needs c_{0,0} = 0")
    with _Clock() as clock:
        alg = t.algebra
        lhs = gauss_residue(alg.reduced_norm(t))
        rhs = expected_norm_residue(spec, t)
        ok = lhs == rhs
        w = {"t": t.fmt(), "residue_norm": lhs.fmt(), "expansion": rhs.fmt()}
        if not ok:
            w["counterexample"] = {"t": t.fmt(), "lhs": lhs.fmt(), "rhs": rhs.fmt()}
    return Certificate(CertKind.NORM_RESIDUE, p, _status(ok), w, index, seed, clock.ms)


def _small_cyclo(p, rng):
    return CycloNum(p, [rng.randint(-2, 2), rng.randint(-2, 2)] + [0] * (p - 3))


def value_zero_element(algebra, rng, trace_zero=True):
    """Random t with polynomial coefficients of degree <= 1 over Z[zeta], Gauss value 0."""
    p = algebra.p
    cf = algebra.base
    coeffs = {}
    for k in range(p):
        for l in range(p):
            if trace_zero and (k, l) == (0, 0):
                continue
            terms = {(m, n): _small_cyclo(p, rng) for m in range(2) for n in range(2 - m)}
            coeffs[(k, l)] = RatFunc(BiPoly(cf, terms))
    if all(gauss_valuation(c) != 0 for c in coeffs.values()):
        coeffs[(1, 0)] = coeffs[(1, 0)] + 1
        if gauss_valuation(coeffs[(1, 0)]) != 0:
            coeffs[(1, 0)] = coeffs[(1, 0)] + 1
    return algebra.element(coeffs)


def norm_residue_certificate(spec, samples=20, seed=42, index=None):
    """norm_residue_check on seeded random trace-zero elements of value zero."""
    _require_multiplicative(spec)
    alg = make_algebra(spec)
    tag = f"{seed}:{index.i},{index.j}" if index is not None else f"{seed}:{spec}"
    rng = random.Random(tag)
    with _Clock() as clock:
        failed = None
        for _ in range(samples):
            cert = norm_residue_check(spec, value_zero_element(alg, rng), index=index)
            if not cert.verified:
                failed = cert
                break
        w = {"samples": samples}
        if failed is not None:
            w["counterexample"] = failed.witnesses["counterexample"]
    return Certificate(CertKind.NORM_RESIDUE, spec.p, _status(failed is None), w, index, seed,
                       clock.ms, headline=f"samples={samples}")


def residue_degree_check(spec, index=None):
    """E^p-span of residue(a)^m residue(b)^n, 0 <= m, n < p, has dimension p^2."""
    _require_multiplicative(spec)
    p = spec.p
    with _Clock() as clock:
        w = {"expected_rank": p * p}
        if gauss_valuation(spec.a) != 0 or gauss_valuation(spec.b) != 0:
            w["counterexample"] = {"reason": "parameters are not of value 0"}
            return Certificate(CertKind.RESIDUE_DEGREE, p, FAILED, w, index, elapsed_ms=0.0)
        g, d = gauss_residue(spec.a), gauss_residue(spec.b)
        vecs = [ep_coordinates(g ** m * d ** n).vector() for m in range(p) for n in range(p)]
        K = RationalFunctionField(PrimeField(p))
        r = rank(ExactMatrix(K, vecs))
        w["rank"] = r
        ok = r == p * p
        if not ok:
            rel = nullspace(ExactMatrix(K, vecs).transpose())[0]
            w["counterexample"] = {"rank": r, "relation": [x.fmt(EP_NAMES) for x in rel]}
    return Certificate(CertKind.RESIDUE_DEGREE, p, _status(ok), w, index, elapsed_ms=clock.ms,
                       headline=f"rank={r}")


# ---------------------------------------------------------------------------
# trace formula


def trace_formula_certificate(p, samples=200, seed=42):
    """Trd(u) = -c_{p-1,0} on random elements of the char-p family, plus monomial traces."""
    p = int(PrimeParam(p))
    rng = random.Random(f"{seed}:trace:{p}")
    family = [make_algebra(spec) for _, spec in charp_family(p)]
    with _Clock() as clock:
        counterexample = None
        for s in range(samples):
            alg = family[s % len(family)]
            u = alg.random_element(rng)
            got = alg.reduced_trace(u)
            want = -u.coeffs[p - 1][0]
            if got != want:
                counterexample = {"algebra": str(alg.spec), "u": u.fmt(),
                                  "trace": got.fmt(), "expected": want.fmt()}
                break
        monomials_ok = True
        if counterexample is None:
            for alg in family:
                for k in range(p):
                    for l in range(p):
                        got = alg.reduced_trace(alg.monomial(k, l))
                        want = p - 1 if (k, l) == (p - 1, 0) else 0
                        if got != want:
                            monomials_ok = False
                            counterexample = {"algebra": str(alg.spec), "u": f"x^{k}*y^{l}",
                                              "trace": got.fmt(), "expected": str(want % p)}
                            break
                    if not monomials_ok:
                        break
                if not monomials_ok:
                    break
        w = {"samples": samples, "algebras": len(family)}
        if counterexample is not None:
            w["counterexample"] = counterexample
    return Certificate(CertKind.TRACE_FORMULA, p, _status(counterexample is None), w,
                       seed=seed, elapsed_ms=clock.ms, headline=f"samples={samples}")
