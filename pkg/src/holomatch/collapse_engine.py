"""Collapsing a large basis to a small one for domains 2 and 4, and the domain-3 classifier.

Given a basis ``M`` (2^l x k) and generators realized through it, the
constructive argument picks a full-rank generator, finds a pair of rows of
its transformed matrix form at minimal Hamming distance, and reads off a
k x k sub-basis ``sub`` from the corresponding rows of ``M``.  The
transducer ``T = M sub^{-1}`` then turns every old realization into a new
one on the small basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

import numpy as np

from .errors import (CollapseCheckFailed, DistanceLemmaViolated, FormViolation, NoFullRankGenerator,
                     NotRealized, RankDeficient, RankMismatch, RankTooLow, ShapeMismatch,
                     SignRelationViolation, SingularMatrix, SingularSubbasis, TransducerNotStandard)
from .holant_engine import holant_network
from .holo_transform import Basis, generator_to_standard, realizable_on
from .scalar_linalg import (ZERO, determinant, identity, inverse, kron_all, kronecker_power,
                            matrices_equal, rank)
from .signature_core import (Parity, Signature, full_rank_slot, is_degenerate, matrix_form,
                             parity_check, verify_standard)


# certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class MinimalPairCertificate:
    """Rows sigma, tau of underG(t) and columns zeta, eta at minimal Hamming distance.

    Patterns are bit strings; ``p`` holds the 1-based positions inside the
    block where sigma and tau differ, ``q`` those inside the complementary
    pattern where zeta and eta differ.
    """

    t: int
    block_len: int
    blocks: int
    sigma: str
    tau: str
    zeta: str
    eta: str

    @property
    def d(self):
        return _distance(self.sigma, self.tau)

    @property
    def d_prime(self):
        return _distance(self.zeta, self.eta)

    @property
    def p(self):
        return tuple(i + 1 for i, (a, b) in enumerate(zip(self.sigma, self.tau)) if a != b)

    @property
    def q(self):
        return tuple(i + 1 for i, (a, b) in enumerate(zip(self.zeta, self.eta)) if a != b)

    def global_position(self, position, in_block):
        """Position among all n*l bits for a block position or a complementary position."""
        before = (self.t - 1) * self.block_len
        if in_block:
            return before + position
        return position if position <= before else position + self.block_len

    def block_rows(self):
        """Row patterns spanned by the differing positions, indexed by their bits in order."""
        sigma = int(self.sigma, 2)
        masks = [1 << (self.block_len - p) for p in self.p]
        return [sigma ^ sum(m for m, b in zip(masks, choice) if b)
                for choice in product((0, 1), repeat=len(masks))]

    def block_columns(self):
        zeta = int(self.zeta, 2)
        width = len(self.zeta)
        masks = [1 << (width - q) for q in self.q]
        return [zeta ^ sum(m for m, b in zip(masks, choice) if b)
                for choice in product((0, 1), repeat=len(masks))]


def _distance(a, b):
    return sum(x != y for x, y in zip(a, b))


def _bits(value, width):
    return format(value, f"0{width}b") if width else ""


def _independent(u, v):
    """True when two vectors are linearly independent."""
    pivot = next((i for i, x in enumerate(u) if x), None)
    if pivot is None or not any(v):
        return False
    ratio = v[pivot] / u[pivot]
    return any(b != ratio * a for a, b in zip(u, v))


def _block_form(underG: Signature, block_len: int, t: int):
    return matrix_form(underG.blocks(block_len).with_role("generator"), t)


def find_minimal_pairs(underG: Signature, block_len: int, t: int, same_parity: bool,
                       check_distances: bool = True) -> MinimalPairCertificate:
    """Lexicographically least minimal pairs (sigma, tau) then (zeta, eta).

    Distances are asserted: 1 and 1 for the two-row case, 2 and 2 when the
    rows must share parity.  A mismatch means the input was not a genuine
    transformed matchgate signature.
    """
    form = _block_form(underG, block_len, t)
    if rank(form) < 2:
        raise RankTooLow(f"matrix form at slot {t} has rank below 2")
    rows = [list(r) for r in form]
    height = len(rows)
    sigma = tau = None
    for dist in range(1, block_len + 1):
        if same_parity and dist % 2:
            continue
        for a in range(height):
            for b in range(a + 1, height):
                if bin(a ^ b).count("1") == dist and _independent(rows[a], rows[b]):
                    sigma, tau = a, b
                    break
            if sigma is not None:
                break
        if sigma is not None:
            break
    if sigma is None:
        raise RankTooLow("no independent row pair with the required parity")
    width = form.shape[1]
    columns = [(rows[sigma][c], rows[tau][c]) for c in range(width)]
    cbits = (underG.arity // block_len - 1) * block_len
    zeta = eta = None
    for dist in range(1, cbits + 1):
        for a in range(width):
            if not any(columns[a]):
                continue
            for b in range(a + 1, width):
                if bin(a ^ b).count("1") == dist and _independent(columns[a], columns[b]):
                    zeta, eta = a, b
                    break
            if zeta is not None:
                break
        if zeta is not None:
            break
    if zeta is None:
        raise RankTooLow("rows sigma and tau admit no independent column pair")
    cert = MinimalPairCertificate(t, block_len, underG.arity // block_len, _bits(sigma, block_len),
                                  _bits(tau, block_len), _bits(zeta, cbits), _bits(eta, cbits))
    if check_distances:
        expected = 2 if same_parity else 1
        if cert.d != expected or cert.d_prime != expected:
            lemma = "same-parity minimal distance is 2" if same_parity else "minimal distance is 1"
            raise DistanceLemmaViolated(
                f"{lemma} violated: d={cert.d}, d'={cert.d_prime} "
                f"(sigma={cert.sigma}, tau={cert.tau}, zeta={cert.zeta}, eta={cert.eta})")
    return cert


def vanishing_violations(underG: Signature, cert: MinimalPairCertificate, same_parity: bool):
    """Rows strictly between sigma and tau, and columns strictly between zeta and eta, that are nonzero."""
    form = _block_form(underG, cert.block_len, cert.t)
    sigma, tau = int(cert.sigma, 2), int(cert.tau, 2)
    zeta, eta = int(cert.zeta, 2), int(cert.eta, 2)
    found = []
    for alpha in range(form.shape[0]):
        if same_parity and bin(alpha ^ sigma).count("1") % 2:
            continue
        if 0 < bin(alpha ^ sigma).count("1") < cert.d and 0 < bin(alpha ^ tau).count("1") < cert.d:
            if any(form[alpha]):
                found.append(("row", _bits(alpha, cert.block_len)))
    for beta in range(form.shape[1]):
        if 0 < bin(beta ^ zeta).count("1") < cert.d_prime and 0 < bin(beta ^ eta).count("1") < cert.d_prime:
            if form[sigma][beta] or form[tau][beta]:
                found.append(("column", _bits(beta, len(cert.zeta))))
    return found


# sub-bases and transducers -------------------------------------------------

def _subbasis(basis: Basis, patterns):
    sub = basis.rows(patterns)
    if determinant(sub) == 0:
        raise SingularSubbasis(f"rows {[_bits(p, basis.block_len) for p in patterns]} of M are dependent")
    return sub


def extract_subbasis_d2(basis: Basis, cert: MinimalPairCertificate):
    """Rows sigma and tau of M."""
    return _subbasis(basis, [int(cert.sigma, 2), int(cert.tau, 2)])


def extract_subbasis_d4(basis: Basis, cert: MinimalPairCertificate):
    """Rows sigma ^ b1 e_p1 ^ b2 e_p2 of M, ordered by the two bits (b1, b2).

    This is sigma, sigma^e_p2, sigma^e_p1, tau: the order in which the
    block bits of the collapsed signature line up with the old block.
    """
    if cert.d != 2:
        raise DistanceLemmaViolated(f"a four-row sub-basis needs d=2, got d={cert.d}")
    return _subbasis(basis, cert.block_rows())


def build_transducer(basis: Basis, sub, input_bits: Optional[int] = None):
    """T = M sub^{-1} as a transducer signature (l outputs, log2 k inputs)."""
    try:
        inv = inverse(sub)
    except SingularMatrix as exc:
        raise SingularSubbasis(str(exc)) from exc
    mat = basis.matrix @ inv
    inputs = input_bits if input_bits is not None else (basis.k - 1).bit_length()
    T = Signature.from_transducer_matrix(mat, basis.block_len, inputs)
    parity, failure = verify_standard(T)
    if not parity or failure is not None:
        detail = f"parity {parity}" if not parity else failure.describe()
        raise TransducerNotStandard(f"T = M sub^-1 fails the matchgate test: {detail}")
    return T


# rank-4 layouts --------------------------------------------------------------

@dataclass(frozen=True)
class Rank4Block:
    matrix: np.ndarray
    rows: tuple
    columns: tuple
    form: str          # "even" or "odd"
    sign: int          # +1 or -1 in the determinant relation

    def relation(self):
        return _relation_sides(self.matrix, self.form)


def _relation_sides(A, form):
    A = np.asarray(A, dtype=object)
    if form == "even":
        return determinant(A[np.ix_([0, 3], [0, 3])]), determinant(A[np.ix_([1, 2], [1, 2])])
    return determinant(A[np.ix_([0, 3], [1, 2])]), determinant(A[np.ix_([1, 2], [0, 3])])


def expected_sign(cert: MinimalPairCertificate) -> int:
    """+1 when q1 < p1 < p2 < q2 among all bit positions, else -1."""
    p1, p2 = (cert.global_position(p, True) for p in cert.p)
    q1, q2 = (cert.global_position(q, False) for q in cert.q)
    return 1 if q1 < p1 < p2 < q2 else -1


def rank4_submatrix(underG: Signature, t: int, cert: MinimalPairCertificate) -> Rank4Block:
    """The 4x4 block of underG(t) on the certificate rows and columns."""
    if cert.d != 2 or cert.d_prime != 2:
        raise RankDeficient("a rank-4 block needs a same-parity certificate with d = d' = 2")
    form = _block_form(underG, cert.block_len, t)
    rows, cols = cert.block_rows(), cert.block_columns()
    A = form[np.ix_(rows, cols)]
    if rank(A) != 4:
        raise RankDeficient(f"block on rows {rows} and columns {cols} has rank {rank(A)}")
    support = 1 if parity_check(underG) == Parity.ODD else 0
    base = (cert.sigma.count("1") + cert.zeta.count("1")) % 2
    layout = "even" if base == support else "odd"
    _check_form(A, layout)
    left, right = _relation_sides(A, layout)
    if left == right and left != -right:
        sign = 1
    elif left == -right:
        sign = -1
    else:
        raise SignRelationViolation(f"determinants {left} and {right} differ by more than a sign")
    return Rank4Block(A, tuple(rows), tuple(cols), layout, sign)


def _check_form(A, form):
    zero_blocks = ([(i, j) for i in (0, 3) for j in (1, 2)] + [(i, j) for i in (1, 2) for j in (0, 3)]
                   if form == "even" else
                   [(i, j) for i in (0, 3) for j in (0, 3)] + [(i, j) for i in (1, 2) for j in (1, 2)])
    bad = [(i, j) for i, j in zero_blocks if A[i, j]]
    if bad:
        raise FormViolation(f"{form} form needs zeros at {bad}")


def group_inverse_arity4(A, sign: int, form: str = "even"):
    """Inverse of a 4x4 matrix in even or odd form through its two 2x2 blocks."""
    A = np.asarray(A, dtype=object)
    if A.shape != (4, 4):
        raise ShapeMismatch("group inverse needs a 4x4 matrix")
    _check_form(A, form)
    left, right = _relation_sides(A, form)
    if left != sign * right:
        raise SignRelationViolation(f"{left} != {'+' if sign > 0 else '-'}{right}")
    out = np.empty((4, 4), dtype=object)
    out.fill(ZERO)
    try:
        if form == "even":
            outer = inverse(A[np.ix_([0, 3], [0, 3])])
            inner = inverse(A[np.ix_([1, 2], [1, 2])])
            out[np.ix_([0, 3], [0, 3])] = outer
            out[np.ix_([1, 2], [1, 2])] = inner
        else:
            upper = inverse(A[np.ix_([0, 3], [1, 2])])
            lower = inverse(A[np.ix_([1, 2], [0, 3])])
            out[np.ix_([1, 2], [0, 3])] = upper
            out[np.ix_([0, 3], [1, 2])] = lower
    except SingularMatrix as exc:
        raise RankDeficient(str(exc)) from exc
    _check_form(out, form)
    left, right = _relation_sides(out, form)
    if left != sign * right:
        raise SignRelationViolation("inverse lost the determinant relation")
    return out


# dual recognizers ------------------------------------------------------------

def dual_recognizer(underG: Signature, t: int, block_len: int):
    """A sparse standard recognizer underR with underG(t) underR(t) = I.

    ``block_len`` is 1 for domain 2 and 2 for domain 4.
    """
    k = 2 ** block_len
    form = _block_form(underG, block_len, t)
    if rank(form) != k:
        raise RankMismatch(f"slot {t} has rank {rank(form)}, expected {k}")
    same_parity = block_len == 2
    cert = find_minimal_pairs(underG, block_len, t, same_parity)
    if block_len == 1:
        cols = [int(cert.zeta, 2), int(cert.eta, 2)]
        rows = [0, 1]
        inv = inverse(form[:, cols])
    else:
        block = rank4_submatrix(underG, t, cert)
        cols, rows = list(block.columns), list(block.rows)
        inv = group_inverse_arity4(block.matrix, block.sign, block.form)
    R_t = np.empty((form.shape[1], k), dtype=object)
    R_t.fill(ZERO)
    for j, c in enumerate(cols):
        for i, r in enumerate(rows):
            R_t[c, r] = inv[j, i]
    n = underG.arity // block_len
    tensor = np.moveaxis(R_t.T.reshape((k,) * n), 0, t - 1)
    underR = Signature(tensor.ravel(), 2, underG.arity, "recognizer")
    if not matrices_equal(form @ R_t, identity(k)):
        raise RankMismatch("dual recognizer does not invert the matrix form")
    return underR, cert


# pipelines ------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        return f"{self.name}: {'pass' if self.passed else 'FAIL'}{' (' + self.detail + ')' if self.detail else ''}"


@dataclass
class CollapseResult:
    sub_basis: np.ndarray
    transducer: Signature
    certificate: MinimalPairCertificate
    generators: list
    recognizers: list
    dual: Optional[Signature] = None
    rank4: Optional[Rank4Block] = None
    report: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.report)


def _standard_detail(sig):
    parity, failure = verify_standard(sig)
    if not parity:
        return False, f"parity violation at {parity.even_witness}/{parity.odd_witness}"
    if failure is not None:
        return False, failure.describe()
    return True, ""


def collapse_domain2(basis: Basis, generators, recognizers=(), wiring=None, verify_inputs=True,
                     strict=True) -> CollapseResult:
    """Simulate a size-l basis for domain 2 on a size-1 basis."""
    if basis.k != 2:
        raise ShapeMismatch("domain-2 collapse needs k = 2")
    return _collapse(basis, generators, recognizers, wiring, 1, verify_inputs, strict)


def collapse_domain4(basis: Basis, generators, recognizers=(), wiring=None, verify_inputs=True,
                     strict=True) -> CollapseResult:
    """Simulate a size-l basis for domain 4 on a size-2 basis."""
    if basis.k != 4:
        raise ShapeMismatch("domain-4 collapse needs k = 4")
    return _collapse(basis, generators, recognizers, wiring, 2, verify_inputs, strict)


def _pairs(items, basis, kind):
    out = []
    for item in items:
        sig, std = item if isinstance(item, tuple) else (item, None)
        if std is None and kind == "generator":
            std = generator_to_standard(sig, basis)
        if std is None:
            found = realizable_on(sig, basis)
            if not found:
                raise NotRealized("no standard recognizer found for a supplied recognizer tensor")
            std = found.witness
        out.append((sig, std))
    return out


def _collapse(basis, generators, recognizers, wiring, small_bits, verify_inputs, strict):
    basis.require_full_rank()
    ell, k = basis.block_len, basis.k
    gens = _pairs(generators, basis, "generator")
    recs = _pairs(recognizers, basis, "recognizer")
    report = []

    if verify_inputs:
        for i, (G, underG) in enumerate(gens):
            if generator_to_standard(G, basis) != underG.with_role("generator"):
                raise NotRealized(f"generator {i}: underG != M^(x)n G")
            ok, detail = _standard_detail(underG)
            if not ok:
                raise NotRealized(f"generator {i}: underG is not standard ({detail})")
        for i, (R, underR) in enumerate(recs):
            back = underR.vector @ kronecker_power(basis.matrix, R.arity)
            if not all(a == b for a, b in zip(back, R.vector)):
                raise NotRealized(f"recognizer {i}: underR M^(x)m != R")
            ok, detail = _standard_detail(underR)
            if not ok:
                raise NotRealized(f"recognizer {i}: underR is not standard ({detail})")
        report.append(Check("input realizations", True))

    chosen = next(((i, full_rank_slot(G)) for i, (G, _) in enumerate(gens) if full_rank_slot(G)), None)
    if chosen is None:
        raise NoFullRankGenerator("no generator has a full-rank matrix form; the instance is trivial")
    index, t = chosen
    G1, underG1 = gens[index]
    same_parity = small_bits == 2
    cert = find_minimal_pairs(underG1, ell, t, same_parity)
    expected = 2 if same_parity else 1
    report.append(Check("minimal distances", True,
                        f"generator {index}, slot {t}: d={cert.d}, d'={cert.d_prime} (expected {expected})"))
    vanish = vanishing_violations(underG1, cert, same_parity)
    report.append(Check("rows and columns between the minimal pairs vanish", not vanish,
                        "" if not vanish else f"nonzero {vanish[:3]}"))

    block = None
    if small_bits == 1:
        sub = extract_subbasis_d2(basis, cert)
    else:
        sub = extract_subbasis_d4(basis, cert)
        block = rank4_submatrix(underG1, t, cert)
        report.append(Check("rank-4 block", True, f"{block.form} form, sign {'+' if block.sign > 0 else '-'}"))
        report.append(Check("sign rule from bit positions", block.sign == expected_sign(cert),
                             f"p={cert.p}, q={cert.q}"))
        inv = group_inverse_arity4(block.matrix, block.sign, block.form)
        round_trip = group_inverse_arity4(inv, block.sign, block.form)
        report.append(Check("group inverse round trip", matrices_equal(round_trip, block.matrix)
                            and matrices_equal(block.matrix @ inv, identity(4))))
    report.append(Check("sub-basis invertible", True, f"det {determinant(sub)}"))

    T = build_transducer(basis, sub, small_bits)
    report.append(Check("transducer is standard", True))
    T_mat = T.transducer_matrix()
    rows = cert.block_rows() if small_bits == 2 else [int(cert.sigma, 2), int(cert.tau, 2)]
    report.append(Check("T restricted to certificate rows is the identity",
                        matrices_equal(T_mat[rows, :], identity(k))))
    report.append(Check("T sub = M", matrices_equal(T_mat @ sub, basis.matrix)))

    small = Basis(sub, small_bits)
    collapsed_gens = []
    for i, (G, underG) in enumerate(gens):
        star = generator_to_standard(G, small)
        restricted = _restrict_blocks(underG, ell, rows)
        report.append(Check(f"generator {i}: sub-basis transform equals block restriction", star == restricted))
        ok, detail = _standard_detail(star)
        report.append(Check(f"generator {i}: collapsed signature is standard", ok, detail))
        rebuilt = kronecker_power(T_mat, G.arity) @ star.vector
        report.append(Check(f"generator {i}: T applied to the collapsed signature gives underG",
                            all(a == b for a, b in zip(rebuilt, underG.vector))))
        collapsed_gens.append(star)

    star1 = collapsed_gens[index]
    star_rank = rank(_block_form(star1, small_bits, t))
    report.append(Check("collapsed generator keeps full rank at the slot", star_rank == k, f"rank {star_rank}"))
    underR_dual, _ = dual_recognizer(star1, t, small_bits)
    ok, detail = _standard_detail(underR_dual)
    report.append(Check("dual recognizer is standard and inverts the slot", ok, detail))
    report.append(Check("T equals the transported form times the dual recognizer",
                        matrices_equal(_transported_form(G1, basis, sub, t) @
                                       matrix_form(underR_dual.blocks(small_bits).with_role("recognizer"), t),
                                       T_mat)))

    collapsed_recs = []
    for i, (R, underR) in enumerate(recs):
        m = R.arity
        new = Signature(underR.vector @ kronecker_power(T_mat, m), 2, m * small_bits, "recognizer")
        back = new.vector @ kronecker_power(sub, m)
        report.append(Check(f"recognizer {i}: new realization reproduces R",
                            all(a == b for a, b in zip(back, R.vector))))
        ok, detail = _standard_detail(new)
        report.append(Check(f"recognizer {i}: collapsed signature is standard", ok, detail))
        collapsed_recs.append(new)

    if wiring is not None:
        original = holant_network([G for G, _ in gens], [R for R, _ in recs], wiring)
        big = holant_network([u.blocks(ell).tensor for _, u in gens],
                             [u.blocks(ell).tensor for _, u in recs], wiring)
        after = holant_network([s.blocks(small_bits).tensor for s in collapsed_gens],
                               [s.blocks(small_bits).tensor for s in collapsed_recs], wiring)
        report.append(Check("Holant invariant", original == big == after,
                            f"{original} / {big} / {after}"))

    result = CollapseResult(sub, T, cert, collapsed_gens, collapsed_recs, underR_dual, block, report)
    if strict and not result.passed:
        failed = [c.line() for c in report if not c.passed]
        raise CollapseCheckFailed("; ".join(failed), report)
    return result


def _restrict_blocks(underG: Signature, block_len: int, rows):
    """Entries of underG whose every block is one of ``rows``; block value b picks rows[b]."""
    tensor = underG.blocks(block_len).tensor
    picked = tensor[np.ix_(*([rows] * tensor.ndim))] if tensor.ndim else tensor
    small_bits = (len(rows) - 1).bit_length()
    return Signature(np.asarray(picked).ravel(), 2, tensor.ndim * small_bits, "generator")


def _transported_form(G: Signature, basis: Basis, sub, t: int):
    """Slot-t matrix form of (sub^(x)(t-1) (x) M (x) sub^(x)(n-t)) G."""
    n = G.arity
    factors = [sub] * (t - 1) + [basis.matrix] + [sub] * (n - t)
    vec = kron_all(factors) @ G.vector
    dims = [sub.shape[0]] * (t - 1) + [basis.matrix.shape[0]] + [sub.shape[0]] * (n - t)
    tensor = np.moveaxis(np.asarray(vec, dtype=object).reshape(dims), t - 1, 0)
    return tensor.reshape(basis.matrix.shape[0], -1)


# domain 3 -------------------------------------------------------------------

@dataclass
class Domain3Outcome:
    """Outcome name plus supporting evidence.

    outcome is one of "FullRankImpossible", "ExternalRank2Reduction",
    "TrivialDegenerate" or "NotFullRank" (no generator is degenerate-only or
    full rank, so no theorem applies).
    """

    outcome: str
    generator: Optional[int] = None
    witness: dict = field(default_factory=dict)


def classify_domain3(basis: Basis, generators) -> Domain3Outcome:
    if basis.k != 3:
        raise ShapeMismatch("domain-3 classification needs k = 3")
    gens = [g[0] if isinstance(g, tuple) else g for g in generators]
    if all(is_degenerate(G) is not None for G in gens):
        return Domain3Outcome("TrivialDegenerate")
    basis_rank = rank(basis.matrix)
    if basis_rank <= 1:
        return Domain3Outcome("TrivialDegenerate", witness={"basis rank": basis_rank})
    if basis_rank == 2:
        return Domain3Outcome("ExternalRank2Reduction", witness={"basis rank": 2})
    for i, G in enumerate(gens):
        t = full_rank_slot(G)
        if t is None:
            continue
        underG = generator_to_standard(G, basis)
        parity, failure = verify_standard(underG)
        witness = {"slot": t,
                   "rank of G(t)": rank(matrix_form(G, t)),
                   "rank of transformed form": rank(_block_form(underG, basis.block_len, t))}
        if not parity:
            witness["parity violation"] = (parity.even_witness, parity.odd_witness)
        elif failure is not None:
            witness["identity failure"] = failure.describe()
        else:
            witness["verifier"] = "passed unexpectedly"
        return Domain3Outcome("FullRankImpossible", i, witness)
    return Domain3Outcome("NotFullRank")


def collapse(basis: Basis, generators, recognizers=(), wiring=None, **options):
    if basis.k == 2:
        return collapse_domain2(basis, generators, recognizers, wiring, **options)
    if basis.k == 4:
        return collapse_domain4(basis, generators, recognizers, wiring, **options)
    if basis.k == 3:
        return classify_domain3(basis, generators)
    raise ShapeMismatch(f"no collapse procedure for domain {basis.k}")


__all__ = [
    "MinimalPairCertificate", "find_minimal_pairs", "vanishing_violations", "extract_subbasis_d2",
    "extract_subbasis_d4", "build_transducer", "rank4_submatrix", "group_inverse_arity4",
    "expected_sign", "dual_recognizer", "collapse_domain2", "collapse_domain4", "classify_domain3",
    "CollapseResult", "Check", "Domain3Outcome", "Rank4Block", "collapse",
]
