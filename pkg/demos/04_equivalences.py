"""
Deformation and refinement equivalences of flows
================================================

Two flows are S-equivalent when morphisms back and forth compose to maps
deformable into the identities: same states, path images sliding only
along path-space adjacency.  T-dihomotopy captures refinement instead:
subdividing a transition changes the state set but not the behavior.
Both checks are exhaustive searches over finite structure maps.
"""

from globflow import (
    Edge,
    GlobularComplex,
    Square,
    check_t_dihomotopy,
    glob_discrete,
    realize,
    realize_morphism,
    s_equivalent,
    subdivide_edge,
)

# two parallel edges joined by a square collapse onto a single edge:
# the square makes the two routes deformable into each other
fat = GlobularComplex(
    states=("0", "1"),
    edges=(Edge("a", "0", "1"), Edge("b", "0", "1")),
    squares=(Square("q", ("a",), ("b",)),),
)
thin = glob_discrete(["c"])

witness = s_equivalent(realize(fat), realize(thin))
f, g = witness
print("S-equivalent with the square: yes")
print("  collapse:", dict(f.path_map))
print("  section: ", dict(g.path_map))

# remove the square and the collapse loses its homotopy inverse;
# the search is exhaustive, so None is a proof of absence
bare = GlobularComplex(states=fat.states, edges=fat.edges)
print("without the square:", s_equivalent(realize(bare), realize(thin)))

# refinement: subdivide the interval and realize the canonical morphism
interval = glob_discrete(["e"])
refined, canonical = subdivide_edge(interval, "e")
morphism = realize_morphism(canonical, interval, refined)
report = check_t_dihomotopy(morphism, realize(interval), realize(refined))
print("\nsubdivision is a T-dihomotopy:", report.holds)
print("  corestriction is an isomorphism:", report.restriction_isomorphism)
print("  new state has singleton germs:  ", report.singleton_germs)
print("  new paths extend into the image:", report.image_extension)

# by contrast, adding a brand-new parallel transition is not a refinement:
# the extra path never extends into the image
small = realize(glob_discrete(["a"]))
wide = realize(glob_discrete(["a", "b"]))
from globflow import FlowMorphism

inclusion = FlowMorphism(state_map={"0": "0", "1": "1"}, path_map={"a": "a"})
report = check_t_dihomotopy(inclusion, small, wide)
print("\ninclusion into a wider globe:", report.holds)
for note in report.details:
    print("  ", note)
