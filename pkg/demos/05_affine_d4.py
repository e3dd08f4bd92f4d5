"""The affine D4 worked example, plus outward roots and beta traces.

The affine group of rank 5 contains a finite rank-4 reflection subgroup
W' of order 192 that is not parabolic: v = s4 s3 s4 s5 s3 s2 has
reflection length 4, generates W' through its factorizations, and a
non-power centralizer element inside W' shows how badly the cyclic
centralizer statement fails once c is not a Coxeter element of the
ambient group. The packaged checker replays each clause.
"""

from coxkit import corpus, group, roots, verify

rep = verify.verify_example_d4tilde()
for line in rep.text_lines():
    print(line)
print()

# the orbit skeleton of a genuine Coxeter element, by contrast
sys_ = corpus.load("d4t")
c = group.coxeter_element(sys_)
reps = roots.outward_representatives(c)
print(f"outward representatives for c in d4t ({len(reps)} = rank):")
for i, beta in enumerate(reps, start=1):
    print(f"  beta_{i} = {roots.root_str(beta)}")

# any power of c permutes the beta orbits with a constant shift
trace = verify.beta_trace(group.power(c, 2), c, reps=reps)
for entry in trace.entries:
    print(" ", entry.line())
for line in trace.text_lines()[len(trace.entries):]:
    print(" ", line)
