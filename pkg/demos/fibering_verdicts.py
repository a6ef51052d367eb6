"""
Fibering verdicts over the bundled corpus
=========================================

Run the obstruction search on every fixture. A zero or non-monic
polynomial is a certificate; otherwise the report says how far the search
went and what the rank profile looked like.
"""

import json

from fibrometer import SearchLimits, corpus, fibering_search, report

for name in corpus.names():
    p, phi = corpus.load(name)
    v = fibering_search(p, phi, aspherical=name in corpus.ASPHERICAL)
    cert = v.certificate
    summary = "-" if cert is None else f"{cert.route} {cert.polynomial} ({cert.reason})"
    print(f"{name:>13}: {v.status:<17} {summary}")

# Z * A5 has Alexander polynomial 1: no abelian information at all.
# Only a quotient onto A5 itself (degree 5, order 60) exposes it.
p, phi = corpus.load("z_free_a5")
for k in (4, 5):
    v = fibering_search(p, phi, SearchLimits(max_degree=k, max_image_order=60, max_n=4))
    print(f"z_free_a5 with degree <= {k}: {v.status}")

# the JSON report carries the witness, so the certificate can be re-checked
print(json.dumps(json.loads(report(v, "json"))["certificate"]))
