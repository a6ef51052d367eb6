"""
Twisted Alexander polynomials two ways
======================================

A twisted polynomial for a finite quotient can be computed directly with
the regular representation, or as the ordinary polynomial of the finite
cover. The two routes must agree exactly.
"""

from fibrometer import corpus, enumerate_homs, twisted_via_cover, twisted_via_fox

p, phi = corpus.load("trefoil")

for k in (2, 3, 4):
    for hom in enumerate_homs(p, k, 10 ** 6):
        if hom.is_trivial():
            continue
        direct = twisted_via_fox(p, hom, phi)
        cover = twisted_via_cover(p, hom, phi)
        images = " ".join("".join(map(str, x.images)) for x in hom.images)
        print(f"S{k} |G|={hom.image_order:<3} {images:<10} {str(direct.polynomial):<28}"
              f" agree={direct.polynomial == cover.polynomial}  d={cover.divisibility}")

# phi restricted to the cover has image dZ; when every exponent is a
# multiple of d the polynomial can be rewritten in t^(1/d)
hom = next(h for h in enumerate_homs(p, 2, 100) if not h.is_trivial())
res = twisted_via_cover(p, hom, phi)
print("mod 2 quotient:", res.polynomial, "=", res.substituted, "in t^(1/2)")
