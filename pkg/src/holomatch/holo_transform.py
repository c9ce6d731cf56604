"""Bases and the transforms between domain-k tensors and standard signatures.

A basis of size l for domain k is a 2^l x k matrix whose rows are indexed by
l-bit patterns.  A generator G is realized through the basis when
``M^{(x)n} G`` is a standard signature; a recognizer R when some standard
signature ``underR`` satisfies ``underR M^{(x)n} = R``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateBasis, ShapeMismatch
from .scalar_linalg import inverse, kronecker_power, matrix, nullspace, rank, solve
from .signature_core import Signature, is_standard_signature, matrix_form


class Basis:
    __slots__ = ("block_len", "k", "matrix", "full_rank")

    def __init__(self, rows, block_len: Optional[int] = None):
        mat = matrix(rows)
        if block_len is None:
            block_len = max(mat.shape[0].bit_length() - 1, 0)
        if mat.shape[0] != 2 ** block_len:
            raise ShapeMismatch(f"a size-{block_len} basis has {2 ** block_len} rows, got {mat.shape[0]}")
        self.block_len = block_len
        self.k = mat.shape[1]
        self.matrix = mat
        self.full_rank = rank(mat) == self.k

    def rows(self, patterns):
        """Sub-matrix whose rows are the given patterns (ints or bit strings), in that order."""
        index = [int(p, 2) if isinstance(p, str) else p for p in patterns]
        return self.matrix[index, :]

    def require_full_rank(self):
        if not self.full_rank:
            raise DegenerateBasis(f"basis has rank below k={self.k}")

    def __repr__(self):
        return f"Basis(l={self.block_len}, k={self.k})"


def _check_domain(sig: Signature, basis: Basis):
    if sig.k != basis.k:
        raise ShapeMismatch(f"signature domain {sig.k} does not match basis k={basis.k}")


def generator_to_standard(G: Signature, basis: Basis) -> Signature:
    """M^{(x)n} G by one Kronecker power, as a Boolean signature of arity n*l."""
    _check_domain(G, basis)
    basis.require_full_rank()
    vec = kronecker_power(basis.matrix, G.arity) @ G.vector
    return Signature(vec, 2, G.arity * basis.block_len, "generator")


def generator_to_standard_modewise(G: Signature, basis: Basis) -> Signature:
    """Same transform applied slot by slot (an independent code path)."""
    _check_domain(G, basis)
    basis.require_full_rank()
    tensor = G.tensor
    for slot in range(G.arity):
        tensor = np.moveaxis(np.tensordot(basis.matrix, tensor, axes=([1], [slot])), 0, slot)
    shape = (2 ** basis.block_len,) * G.arity
    return Signature(np.asarray(tensor).reshape(shape).ravel(), 2, G.arity * basis.block_len, "generator")


def recognizer_from_standard(underR: Signature, basis: Basis) -> Signature:
    """underR M^{(x)n}, as a recognizer over domain k."""
    if underR.arity % basis.block_len:
        raise ShapeMismatch(f"arity {underR.arity} is not a multiple of l={basis.block_len}")
    n = underR.arity // basis.block_len
    vec = underR.vector @ kronecker_power(basis.matrix, n)
    return Signature(vec, basis.k, n, "recognizer")


def recognizer_from_standard_modewise(underR: Signature, basis: Basis) -> Signature:
    if underR.arity % basis.block_len:
        raise ShapeMismatch(f"arity {underR.arity} is not a multiple of l={basis.block_len}")
    n = underR.arity // basis.block_len
    tensor = underR.vector.reshape((2 ** basis.block_len,) * n)
    for slot in range(n):
        tensor = np.moveaxis(np.tensordot(tensor, basis.matrix, axes=([slot], [0])), -1, slot)
    return Signature(np.asarray(tensor).ravel(), basis.k, n, "recognizer")


def standard_from_recognizer(R: Signature, basis: Basis) -> Signature:
    """For a square invertible basis: the unique underR with underR M^{(x)n} = R."""
    if basis.matrix.shape[0] != basis.k:
        raise ShapeMismatch("only square bases have a unique recognizer preimage")
    inv = inverse(basis.matrix)
    vec = R.vector @ kronecker_power(inv, R.arity)
    return Signature(vec, 2, R.arity * basis.block_len, "recognizer")


def transported_matrix_form(G: Signature, basis: Basis, t: int) -> np.ndarray:
    """M G(t) (M^T)^{(x)(n-1)}, the t-th matrix form of the transformed generator."""
    _check_domain(G, basis)
    return basis.matrix @ matrix_form(G, t) @ kronecker_power(basis.matrix.T, G.arity - 1)


def block_matrix_form(underG: Signature, block_len: int, t: int) -> np.ndarray:
    """t-th matrix form of a standard signature read with blocks of ``block_len`` bits."""
    return matrix_form(underG.blocks(block_len), t)


@dataclass
class Realizability:
    """Outcome of a recognizer realizability search.

    ``status`` is 'realizable', 'unrealizable' (square basis, unique
    preimage fails the test) or 'unknown'.
    """

    status: str
    witness: Optional[Signature] = None

    def __bool__(self):
        return self.status == "realizable"


def realizable_on(sig: Signature, basis: Basis):
    """Generators: a definite bool.  Recognizers: a Realizability record.

    For recognizers the equation underR M^{(x)n} = R is solved exactly.  With
    a square basis the solution is unique.  Otherwise the search tries the
    canonical solution (free variables zero) and then the same system with
    underR restricted to even-weight and to odd-weight patterns; a failure of
    all three is reported as unknown, not as false.
    """
    if sig.role == "generator":
        return is_standard_signature(generator_to_standard(sig, basis))
    basis.require_full_rank()
    n = sig.arity
    big = kronecker_power(basis.matrix, n)
    width = big.shape[0]
    bits = n * basis.block_len
    if width == big.shape[1]:
        candidate = standard_from_recognizer(sig, basis)
        return Realizability("realizable" if is_standard_signature(candidate) else "unrealizable", candidate)
    candidates = [list(range(width)),
                  [i for i in range(width) if bin(i).count("1") % 2 == 0],
                  [i for i in range(width) if bin(i).count("1") % 2 == 1]]
    for support in candidates:
        sub = big[support, :]
        x = solve(sub.T, sig.vector)
        if x is None:
            continue
        full = [0] * width
        for i, value in zip(support, x):
            full[i] = value
        candidate = Signature(full, 2, bits, "recognizer")
        if is_standard_signature(candidate):
            return Realizability("realizable", candidate)
    return Realizability("unknown")


def recognizer_solution_dimension(sig: Signature, basis: Basis) -> int:
    """Dimension of the affine family of underR solving underR M^{(x)n} = R."""
    big = kronecker_power(basis.matrix, sig.arity)
    return len(nullspace(big.T))
