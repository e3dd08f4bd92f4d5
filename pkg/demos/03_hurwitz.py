"""Hurwitz action on reduced reflection factorizations of a Coxeter element.

A Coxeter element of a rank-n finite group has reflection length n, and
braid moves t_i t_{i+1} -> (t_i t_{i+1} t_i^-1) t_i act transitively on
its shortest reflection factorizations. The demo enumerates both sides
of that statement and checks each factorization generates the group.
"""

from coxkit import corpus, group, refl

for name in ("a2", "a3", "b3"):
    sys_ = corpus.load(name)
    c = group.coxeter_element(sys_)
    k, word = group.length_and_reduced(c)
    print(f"== {name}: c = {group.word_str(word)} ==")
    print(f"reflection length {refl.reflection_length(sys_, c)}")

    facts = refl.reduced_factorizations(sys_, c)
    orbit = refl.hurwitz_orbit(facts[0])
    print(f"{len(facts)} reduced factorizations, Hurwitz orbit of the first: {len(orbit)}")
    assert {f.key for f in facts} == {f.key for f in orbit}, "orbit must be all of them"

    full = len(group.enumerate_group(sys_))
    for fact in facts:
        assert len(refl.generated_group(fact)) == full
    print("every factorization generates the whole group")
    for fact in facts[:4]:
        print(" ", refl.factorization_str(fact))
    if len(facts) > 4:
        print(f"  ... {len(facts) - 4} more")
    print()
