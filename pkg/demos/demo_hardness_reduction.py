#!/usr/bin/env python3
"""Why computing scl is as hard as subset sum.

The chain runs: subset sum -> proper subset sum (balance the list) ->
simultaneous proper subset sums (one table per weight r) -> single-integer
instances (collapse the coordinates) -> threshold queries "is scl below
(n/2) - 1?" answered by certificates on one-a-generator words.
"""

import json

from sclflow import (
    append_balance,
    build_table,
    collapse,
    decide_small_scl,
    j_pair_certificate,
    reduce_ss_to_smallscl,
    small_scl_instance,
    render_word,
)

print(__doc__)

values = [2, -1, -1]
print(f"input list: {values}")
balanced = append_balance(values)
base = [v[0] for v in balanced.vectors]
print(f"balanced:   {base}  (subset answer is unchanged)\n")

table = build_table(base, r=1)
print("table columns at r=1 (each a vector of simultaneous constraints):")
for label, col in zip(table.labels(), table.columns):
    print(f"  {label:8s} {list(col)}")
collapsed = collapse(table.columns, usage_bound=2 * len(base) + 2)
print(f"collapsed to integers: {collapsed}\n")

decision = decide_small_scl(collapsed)
print(f"threshold decision on the collapsed list: {decision.answer} "
      f"via {decision.route}")
print(f"  {decision.detail}\n")

transcript = reduce_ss_to_smallscl(values)
print(f"end-to-end answer: {transcript.answer}")
for step in transcript.steps:
    print(f"  r={step.r}: mixed answer {step.mixed_answer} via {step.route}")
print()

print("A certificate in detail: the word for (1, 2, -1, -2) and its J-pair")
xs = [1, 2, -1, -2]
w = small_scl_instance(xs)
cert = j_pair_certificate(xs, [0, 2])
print(f"  word: {render_word(w)}")
print(f"  paired cycle sums: {cert.count}, certified scl <= {cert.certified_upper}")
print(f"  threshold (n/2 - 1) = {len(xs) / 2 - 1}")
