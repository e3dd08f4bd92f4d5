"""Certify that Coxeter elements have cyclic centralizers.

Finite groups get an exhaustive scan; infinite ones get a Cayley-ball
sweep where every commuting element inside the ball must match some
power of c. Both report one machine-readable line per centralizer
element found.
"""

from coxkit import corpus, verify

# exhaustive over the whole group
for name in ("a3", "b3", "h3"):
    rep = verify.verify_finite(corpus.load(name))
    print(f"== {name} ==")
    for line in rep.text_lines():
        print(line)
    print()

# bounded sweep; radius picked by rank, see verify.default_radius
for name in ("a1t", "a2t", "tri334"):
    rep = verify.verify_ball(corpus.load(name))
    print(f"== {name} ==")
    for line in rep.text_lines():
        print(line)
    print()
