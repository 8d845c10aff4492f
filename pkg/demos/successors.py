"""
Successor words
===============

The letters m..n-1 are new when V_m(G) is placed inside V_n(G_ext).  Each word
of a code below the letter m-1 receives k = (n-m)/(m-1) successor words built
from a strict prefix and a new letter.  Here we recompute the standard
five-word example, compare the inductive rule with its closed form, and watch
the successors change when one word is expanded.
"""

from symthompson.successors import (expand_in_order, higman_k, successors_formula,
                                    successors_inductive, verify_expansion_lemma)
from symthompson.words import format_word, parse_word

m, n = 3, 5
print(f"m={m}, n={n}, k={higman_k(m, n)}")

# words listed in reverse dictionary order
code = [parse_word(x) for x in ("22", "212", "211", "210", "20")]
succ = successors_inductive(code, m, n)
print("\ninductive successors")
print(succ.format())

# closed form: w = u j 0^t has i-th successor u followed by m-1+(m-1-j)k+i
print("\nclosed form agrees:",
      all(succ[w][i - 1] == successors_formula(w, m, n, i) for w in code for i in range(1, succ.k + 1)))

# expanding 212 creates children 2122, 2121, 2120; the last one inherits 212's successor
index = code.index(parse_word("212"))
grown = expand_in_order(code, index, m)
after = successors_inductive(grown, m, n)
print("\nafter expanding 212")
print(after.format())
print("2120 inherits", format_word(succ[parse_word("212")][0]), ":",
      after[parse_word("2120")] == succ[parse_word("212")])
print("expansion pattern holds at every word:",
      all(verify_expansion_lemma(code, m, n, i) for i in range(len(code))))

# a wider alphabet gives several successors per word
print("\nm=2, n=4")
print(successors_inductive([parse_word("11"), parse_word("10")], 2, 4).format())
