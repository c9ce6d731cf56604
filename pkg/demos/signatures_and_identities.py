"""Standard signatures of small matchgates and the quadratic identities they satisfy."""
import random

from holomatch.graph_families import random_matchgate, random_weight
from holomatch.matchgate_fkt import standard_signature
from holomatch.scalar_linalg import format_scalar
from holomatch.signature_core import Signature, arity4_standard_check, mgi_check, parity_check

rng = random.Random(11)
gate = random_matchgate(rng, 7, 0, 4, 0.8, lambda: random_weight(rng))
sig = standard_signature(gate)
print("generator with 4 outputs, signature indexed 0000..1111:")
print("  " + " ".join(format_scalar(x) for x in sig.vector))
print("  parity:", parity_check(sig).name if parity_check(sig) else "mixed")
print("  identity failure:", mgi_check(sig))
print("  closed-form arity-4 test:", arity4_standard_check(sig))

# bump one nonzero entry whose identity partner is nonzero as well
vec = list(sig.vector)
i = next(i for i, x in enumerate(vec) if x != 0 and vec[15 - i] != 0)
vec[i] = vec[i] + 1
bumped = Signature(vec, 2, 4)
print(f"after adding 1 at pattern {i:04b}:", mgi_check(bumped).describe())

# the parity condition alone rejects a vector with mixed support
print("mixed support:", parity_check(Signature([1, 1, 0, 0])))
