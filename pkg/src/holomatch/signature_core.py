"""Signatures as dense tensors, their matrix forms, and the standard-signature test.

Index order is lexicographic with the first slot most significant.  For
domain size 2 a pattern is a bit string whose leftmost bit is node 1, so a
signature of arity n is a tensor of shape ``(2,) * n`` and flat index ``i``
corresponds to ``format(i, f"0{n}b")``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Optional

import numpy as np

from .errors import ArityBoundExceeded, IndexOutOfRange, LengthMismatch, ShapeMismatch, WrongArity
from .scalar_linalg import ZERO, Scalar, as_scalar, rank, scalar_array, to_plain

ROLES = ("generator", "recognizer", "transducer")
DEFAULT_ARITY_BOUND = 16


class Signature:
    """Dense signature tensor over domain ``[k]`` with a role.

    Transducers have ``k == 2`` and keep output axes first, so
    ``transducer_matrix()`` is row-indexed by outputs and column-indexed by
    inputs.
    """

    __slots__ = ("k", "arity", "role", "outputs", "inputs", "tensor")

    def __init__(self, entries, k=2, arity=None, role="generator", outputs=None, inputs=None):
        if role not in ROLES:
            raise ValueError(f"unknown role {role!r}")
        flat = np.asarray(entries, dtype=object).ravel()
        if arity is None:
            arity = _log(len(flat), k)
        if len(flat) != k ** arity:
            raise ShapeMismatch(f"{len(flat)} entries do not fill a k={k}, n={arity} tensor")
        if role == "transducer":
            if k != 2:
                raise ShapeMismatch("transducers live on the Boolean domain")
            if outputs is None or inputs is None or outputs + inputs != arity:
                raise ShapeMismatch("transducer needs outputs + inputs == arity")
        else:
            outputs = arity if role == "generator" else 0
            inputs = arity if role == "recognizer" else 0
        self.k = k
        self.arity = arity
        self.role = role
        self.outputs = outputs
        self.inputs = inputs
        self.tensor = scalar_array(flat, (k,) * arity)

    @classmethod
    def from_transducer_matrix(cls, mat, outputs, inputs):
        mat = np.asarray(mat, dtype=object)
        if mat.shape != (2 ** outputs, 2 ** inputs):
            raise ShapeMismatch(f"transducer matrix must be {2 ** outputs}x{2 ** inputs}")
        return cls(mat.ravel(), 2, outputs + inputs, "transducer", outputs, inputs)

    @property
    def vector(self) -> np.ndarray:
        return self.tensor.ravel()

    def __len__(self):
        return self.tensor.size

    def __getitem__(self, pattern):
        if isinstance(pattern, str):
            return self.tensor.ravel()[int(pattern, 2)] if pattern else self.tensor.ravel()[0]
        return self.tensor.ravel()[pattern]

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return (self.k, self.arity, self.role, self.outputs) == (other.k, other.arity, other.role, other.outputs) \
            and all(a == b for a, b in zip(self.vector, other.vector))

    def __repr__(self):
        head = ", ".join(str(x) for x in self.vector[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"Signature(k={self.k}, n={self.arity}, role={self.role}, [{head}{more}])"

    def with_role(self, role, outputs=None, inputs=None):
        return Signature(self.vector, self.k, self.arity, role, outputs, inputs)

    def scaled(self, factor):
        factor = as_scalar(factor)
        return Signature([factor * x for x in self.vector], self.k, self.arity, self.role,
                         self.outputs, self.inputs)

    def transducer_matrix(self) -> np.ndarray:
        if self.role != "transducer":
            raise ValueError("not a transducer")
        return self.vector.reshape(2 ** self.outputs, 2 ** self.inputs)

    def boundary_vector(self) -> np.ndarray:
        """Entries in boundary order: inputs by label, then outputs in reverse label order.

        For generators and recognizers this is the plain entry order.
        """
        if self.role != "transducer":
            return self.vector
        outs, ins = self.outputs, self.inputs
        axes = list(range(outs, outs + ins)) + list(range(outs - 1, -1, -1))
        return np.transpose(self.tensor, axes).ravel()

    def blocks(self, block_len: int) -> "Signature":
        """View a Boolean signature of arity n*block_len as a domain-2^block_len one."""
        if self.k != 2 or self.arity % block_len:
            raise ShapeMismatch(f"arity {self.arity} is not a multiple of {block_len}")
        role = self.role if self.role != "transducer" else "generator"
        return Signature(self.vector, 2 ** block_len, self.arity // block_len, role)


def _log(size, k):
    n = 0
    while k ** n < size:
        n += 1
    if k ** n != size:
        raise ShapeMismatch(f"{size} is not a power of {k}")
    return n


def signature(entries, k=2, role="generator", **kwargs) -> Signature:
    return Signature(entries, k=k, role=role, **kwargs)


# layouts --------------------------------------------------------------------

def matrix_form(sig: Signature, t: int) -> np.ndarray:
    """The t-th matrix form (t is 1-based).

    Generators give a k x k^(n-1) matrix with rows indexed by slot t;
    recognizers give the transpose layout.
    """
    if not 1 <= t <= sig.arity:
        raise IndexOutOfRange(f"slot {t} outside 1..{sig.arity}")
    if sig.role == "transducer":
        raise ValueError("matrix forms are defined for generators and recognizers")
    rows = np.moveaxis(sig.tensor, t - 1, 0).reshape(sig.k, -1)
    return rows.T if sig.role == "recognizer" else rows


def splice(beta: str, alpha: str, t: int, block_len: Optional[int] = None) -> str:
    """Insert ``alpha`` as block ``t`` (1-based) into ``beta``."""
    if block_len is None:
        block_len = len(alpha)
    if len(alpha) != block_len or (block_len and len(beta) % block_len):
        raise LengthMismatch(f"alpha of length {len(alpha)} and beta of length {len(beta)} "
                             f"do not fit blocks of {block_len}")
    blocks = len(beta) // block_len + 1 if block_len else 1
    if not 1 <= t <= blocks:
        raise IndexOutOfRange(f"block {t} outside 1..{blocks}")
    cut = (t - 1) * block_len
    return beta[:cut] + alpha + beta[cut:]


def bits(index: int, width: int) -> str:
    return format(index, f"0{width}b") if width else ""


def weight(pattern) -> int:
    return bin(pattern).count("1") if isinstance(pattern, int) else pattern.count("1")


# parity ---------------------------------------------------------------------

class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ParityViolation:
    even_witness: str
    odd_witness: str

    def __bool__(self):
        return False


def parity_check(sig: Signature):
    """Parity.EVEN, Parity.ODD, or a falsy ParityViolation with one witness per class."""
    vec = _boolean_vector(sig)
    n = _log(len(vec), 2)
    even = next((i for i, v in enumerate(vec) if v and weight(i) % 2 == 0), None)
    odd = next((i for i, v in enumerate(vec) if v and weight(i) % 2 == 1), None)
    if even is not None and odd is not None:
        return ParityViolation(bits(even, n), bits(odd, n))
    return Parity.ODD if odd is not None else Parity.EVEN


def _boolean_vector(sig):
    if isinstance(sig, Signature):
        if sig.k != 2:
            raise ShapeMismatch("standard signatures are over the Boolean domain")
        return sig.boundary_vector()
    return np.asarray(sig, dtype=object).ravel()


# matchgate identities -------------------------------------------------------

@dataclass(frozen=True)
class MGIFailure:
    pattern: str
    positions: tuple
    residual: Scalar

    def __bool__(self):
        return False

    def describe(self):
        return (f"pattern {self.pattern}, P={{{','.join(map(str, self.positions))}}}, "
                f"residual {self.residual}")


@lru_cache(maxsize=None)
def _position_vectors(n: int):
    """Position vectors with |P| even and >= 4, in lexicographic tuple order.

    Each entry is (positions, p mask, [(sign, bit mask)]) with position 1 the
    leftmost bit.
    """
    table = []
    for size in range(4, n + 1, 2):
        for positions in combinations(range(1, n + 1), size):
            masks = [1 << (n - p) for p in positions]
            terms = [(-1 if i % 2 else 1, m) for i, m in enumerate(masks, start=1)]
            table.append((positions, sum(masks), terms))
    table.sort(key=lambda item: item[0])
    return table


def mgi_residual(vec, alpha: int, positions, n: int):
    """Left-hand side of the identity for (alpha, P) on a flat Boolean vector."""
    p_mask = sum(1 << (n - p) for p in positions)
    total = 0
    for i, p in enumerate(positions, start=1):
        e = 1 << (n - p)
        term = vec[alpha ^ e] * vec[alpha ^ p_mask ^ e]
        total = total - term if i % 2 else total + term
    return total


def mgi_check(sig, bound: int = DEFAULT_ARITY_BOUND, all_positions: bool = False):
    """None when every identity holds, else the lexicographically least MGIFailure.

    Assumes parity has been checked; only |P| even and >= 4 is enumerated
    unless ``all_positions`` asks for every nonempty P (useful to cross-check
    the automatic cases directly).
    """
    vec = _boolean_vector(sig)
    n = _log(len(vec), 2)
    if n > bound:
        raise ArityBoundExceeded(f"arity {n} exceeds bound {bound}")
    plain = to_plain(vec)
    if not any(plain):
        return None
    table = _all_position_vectors(n) if all_positions else _position_vectors(n)
    if not table:
        return None
    for alpha in range(2 ** n):
        for positions, p_mask, terms in table:
            total = 0
            for sign, e in terms:
                a = plain[alpha ^ e]
                if a:
                    b = plain[alpha ^ p_mask ^ e]
                    if b:
                        total = total + a * b if sign > 0 else total - a * b
            if total:
                return MGIFailure(bits(alpha, n), positions, as_scalar(total))
    return None


@lru_cache(maxsize=None)
def _all_position_vectors(n: int):
    table = []
    for size in range(1, n + 1):
        for positions in combinations(range(1, n + 1), size):
            masks = [1 << (n - p) for p in positions]
            terms = [(-1 if i % 2 else 1, m) for i, m in enumerate(masks, start=1)]
            table.append((positions, sum(masks), terms))
    table.sort(key=lambda item: item[0])
    return table


def verify_standard(sig, bound: int = DEFAULT_ARITY_BOUND):
    """(parity result, MGI failure or None); the signature is standard iff both are truthy/None."""
    parity = parity_check(sig)
    if not parity:
        return parity, None
    return parity, mgi_check(sig, bound)


def is_standard_signature(sig, bound: int = DEFAULT_ARITY_BOUND) -> bool:
    parity, failure = verify_standard(sig, bound)
    return bool(parity) and failure is None


_EVEN4 = ("0000", "1111", "1100", "0011", "1010", "0101", "1001", "0110")
_ODD4 = ("1000", "0111", "0100", "1011", "0010", "1101", "0001", "1110")


def arity4_standard_check(sig) -> bool:
    """Closed-form test for arity 4: parity plus one quadratic relation."""
    vec = _boolean_vector(sig)
    if len(vec) != 16:
        raise WrongArity(f"expected arity 4, got {_log(len(vec), 2)}")
    parity = parity_check(vec)
    if not parity:
        return False
    g = {p: as_scalar(vec[int(p, 2)]) for p in (_EVEN4 if parity is Parity.EVEN else _ODD4)}
    keys = _EVEN4 if parity is Parity.EVEN else _ODD4
    a, b, c, d, e, f, h, j = (g[p] for p in keys)
    return a * b - c * d + e * f - h * j == 0


# degeneracy and rank -------------------------------------------------------

def is_degenerate(sig: Signature):
    """Factor list (gamma_1, ..., gamma_n) when sig is a tensor product of vectors, else None."""
    tensor = sig.tensor
    k, n = sig.k, sig.arity
    if n == 0:
        return []
    if all(rank(np.moveaxis(tensor, t, 0).reshape(k, -1)) <= 1 for t in range(n)):
        return _factor(tensor, k, n)
    return None


def _factor(tensor, k, n):
    flat = tensor.ravel()
    if not any(flat):
        return [scalar_array([ZERO] * k, (k,)) for _ in range(n)]
    if n == 1:
        return [scalar_array(flat, (k,))]
    first = tensor.reshape(k, -1)
    j = next(i for i in range(k) if any(first[i]))
    row = first[j]
    pivot = next(c for c in range(row.size) if row[c])
    ratios = [first[i][pivot] / row[pivot] for i in range(k)]
    rest = _factor(tensor[j], k, n - 1)
    return [scalar_array(ratios, (k,))] + rest


def outer_product(factors) -> np.ndarray:
    result = np.array(as_scalar(1), dtype=object)
    for f in factors:
        result = np.multiply.outer(result, np.asarray(f, dtype=object))
    return result


def full_rank_slot(sig: Signature) -> Optional[int]:
    for t in range(1, sig.arity + 1):
        if rank(np.moveaxis(sig.tensor, t - 1, 0).reshape(sig.k, -1)) == sig.k:
            return t
    return None
