"""Walk the conjugacy graph of standard parabolic subgroups.

Vertices are subsets of the generating set; an edge I -s-> J means the
elementary conjugator built from s carries the simple roots of I onto
those of J. Composing witnesses along paths answers conjugacy queries
and non-tree edges contribute normalizer generators.
"""

from coxkit import corpus, group, parabolic

sys_ = corpus.load("a3")
graph = parabolic.conjugacy_graph(sys_)

print("edges:")
for line in graph.export_lines():
    print(" ", line)

classes = {}
for v in graph.vertices:
    classes.setdefault(graph.component_of[v], []).append(v)
print(f"{len(classes)} conjugacy classes of standard parabolics:")
for members in classes.values():
    print("  " + " ~ ".join(parabolic.subset_str(m) for m in members))

src, tgt = (1,), (3,)
ok, x = parabolic.standard_conjugate(sys_, src, tgt)
assert ok
print(f"witness for {parabolic.subset_str(src)} ~ {parabolic.subset_str(tgt)}: "
      f"x = {group.word_str(x.word)} with x W_J x^-1 = W_I")

gens = parabolic.normalizer_generators(sys_, (1, 3))
print("normalizer of {1,3} is generated by:")
for g in gens:
    print(" ", group.word_str(g.word) or "e")

# smallest parabolic containing an element, found through its moved space
w = group.from_word(sys_, (2, 1, 2))
closure = parabolic.parabolic_closure_finite(sys_, [w])
print(f"closure of 2 1 2 has order {len(closure)}, "
      f"standard form {parabolic.subset_str(closure.standard)}")
