"""A single Grassmannian point that still fails transversality.

The Kronecker module of dimension (2,2) (identity and nilpotent Jordan
block) has exactly one subrepresentation of dimension (1,1): the eigenline
of the nilpotent map, at both vertices.  Set-theoretically the slice is one
point; homologically it carries Ext^1(N, M/N) of dimension 1, which is the
finite-field shadow of the scheme being a double point.  Both transverse
loci are empty here, and the tube coordinates are rank 1, quasi-length 2.
"""

from qgrass import (
    census,
    emit_builtin,
    parse_document,
    reduce_mod_p,
    transverse_combinatorial,
    transverse_homological,
)

quiver, module = parse_document(emit_builtin("kronecker-reg:2"))
e = (1, 1)

for q in (2, 3, 5):
    report = census(reduce_mod_p(module, q))
    entries = report.entries(e)
    (entry,) = entries
    comb = transverse_combinatorial(report)
    print(
        f"q = {q}: |Gr_(1,1)| = {len(entries)}, hom = {entry.hom_dim}, "
        f"ext = {entry.ext_dim}, homological transverse = "
        f"{len(transverse_homological(report, e))}, combinatorial = {len(comb.points(e))}"
    )

report = census(reduce_mod_p(module, 2))
tube = transverse_combinatorial(report).tube
print(
    f"tube: rank p = {tube.tube_rank}, quasi-length = {tube.quasi_length}, "
    f"l = {tube.l}, k = {tube.k}"
)
print("the lone point is pinched between ray submodules 1 and 1, hence excluded")
