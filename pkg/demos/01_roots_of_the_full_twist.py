"""
Positive roots of the full twist
================================

Walk through the subset labelling of positive n-th roots of Delta^2 and
check a few of them by normal form.
"""

from ttlink.braid import delta, full_twist, left_normal_form, parse_word, words_equal
from ttlink.roots import (RootSubset, chain_decomposition, conjugacy_witness, enumerate_subsets,
                          is_positive_root, subset_to_word, word_to_subset)

# delta_5 = s1 s2 s3 s4; its fifth power is the full twist on five strands
d5 = delta(5)
print("delta_5 =", d5)
print("delta_5^5 == Delta^2 ?", words_equal(d5 ** 5, full_twist(5)))
print("normal form of Delta^2:", left_normal_form(full_twist(5)))

# every subset J of {1, ..., n-2} names one root; list them for n = 5
print("\nsubset        word    chains")
for J in enumerate_subsets(5):
    chains = " ".join("".join(map(str, c)) for c in chain_decomposition(J).chains)
    print(f"{str(set(J.members) or '{}'):<13} {subset_to_word(J).compact():<7} {chains}")

# arbitrary orderings of the generators are rewritten by far commutations
w = parse_word("3142")
J = word_to_subset(w)
print(f"\n{w.compact()} normalizes to {subset_to_word(J).compact()} (J = {set(J.members)})")
print("is it a root?", is_positive_root(w))

# every root is cyclically related to delta or delta-bar
start, moves = conjugacy_witness(RootSubset(6, (2, 3)))
print(f"\nn=6, J={{2,3}} is reached from {start} in {len(moves)} moves: {moves}")

# counts
for n in range(2, 11):
    print(f"n={n:>2}: {len(enumerate_subsets(n)):>4} roots")
