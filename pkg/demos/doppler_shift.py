"""Doppler-shift colorings of small cubic graphs.

The OR reading of the vertex rule does not survive the change of basis as
a matchgate signature; the SUM reading does, and its count matches the
brute-force enumeration.
"""
from holomatch.doppler_app import (doppler_bruteforce, doppler_graphs, doppler_holographic, inclusion_exclusion,
                                   transformed_signatures)
from holomatch.errors import RealizabilityFailed

for semantics in ("or", "sum"):
    tensors = transformed_signatures(semantics)
    print(f"{semantics.upper()} reading: transformed edge ok={tensors.edge_failure is None}, "
          f"vertex ok={tensors.vertex_failure is None}")
    for name, g in doppler_graphs().items():
        brute = doppler_bruteforce(g, semantics) if len(g.edges) <= 12 else None
        try:
            holo = doppler_holographic(g, semantics)
        except RealizabilityFailed:
            holo = f"unrealizable (raw contraction {doppler_holographic(g, semantics, verify=False)})"
        print(f"  {name:13s} brute {brute}  inclusion-exclusion {inclusion_exclusion(g, semantics)}  holographic {holo}")
