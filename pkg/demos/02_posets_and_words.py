"""
Bicolored posets, linear extensions, and their words
====================================================

"""

from bivorder import (
    ascents,
    covers,
    descents,
    linear_extensions,
    reverse_natural_labeling,
    skew_diamond_poset,
    word_of,
)

P = skew_diamond_poset()
print("elements:", P.n, " celeste:", sorted(P.celeste))
print("cover relations:", sorted(covers(P)))

for ext in linear_extensions(P):
    print("extension:", ext)

# a reverse natural labeling is decreasing along every relation
lab = reverse_natural_labeling(P)
print("reverse natural labeling:", lab)

# each extension becomes a word; the first celeste letter is marked
for ext in linear_extensions(P):
    w = word_of(ext, lab, P)
    print(
        "word", w.letters,
        "marked at", w.celeste_pos,
        "ascents", sorted(ascents(w.letters)),
        "descents", sorted(descents(w.letters)),
    )
