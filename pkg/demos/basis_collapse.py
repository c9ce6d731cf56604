"""Collapsing a large basis to a small one on instances built by composition.

Each instance hides a small basis M0 behind a transducer T0, so the large
basis is T0 M0.  The collapse recovers a small basis from the signatures
alone and checks that nothing changed along the way.
"""
import random

from holomatch.collapse_engine import classify_domain3, collapse
from holomatch.holo_transform import Basis
from holomatch.instances import random_collapse_instance
from holomatch.scalar_linalg import format_scalar, matrix, rank
from holomatch.signature_core import Signature


def show(rows):
    return "[" + "; ".join(" ".join(format_scalar(x) for x in row) for row in rows) + "]"


rng = random.Random(12)
for k, ell in ((2, 3), (4, 3)):
    inst = random_collapse_instance(rng, k, ell)
    result = collapse(inst.basis, inst.generators, inst.recognizers, inst.wiring)
    cert = result.certificate
    print(f"domain {k}, basis of size {ell} ({2 ** ell}x{k}):")
    print(f"  certificate sigma={cert.sigma} tau={cert.tau} zeta={cert.zeta} eta={cert.eta}")
    print(f"  sub-basis {show(result.sub_basis)}")
    for check in result.report:
        print("  " + check.line())

# domain 3: a rank-3 basis cannot carry a full-rank generator
basis = Basis(matrix([[1, 0, 2], [0, 1, 1], [1, 1, 0], [2, 0, 1]]), 2)
G = Signature([1, 0, 0, 0, 2, 0, 0, 0, 3], 3, 2)
print("domain 3, basis rank", rank(basis.matrix), "->", classify_domain3(basis, [G]))
