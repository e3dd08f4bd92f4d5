"""Survey the bundled diagrams: class, field degree, group order where finite."""

from coxkit import corpus, diagram, group

for name in corpus.names():
    sys_ = corpus.load(name)
    kind = diagram.classify(sys_)
    line = f"{name:8s} rank={sys_.rank}  {kind:10s} field degree {sys_.field.degree}"
    if kind == "finite":
        elems = group.enumerate_group(sys_)
        line += f"  |W| = {len(elems)}"
    print(line)
