import pytest

from conftest import make_chain, make_grid, make_interval, make_parallel_pair, random_complex
from globflow import (
    FiniteFlow,
    FlowMorphism,
    SearchBudgetExceeded,
    check_t_dihomotopy,
    compose_flow_morphisms,
    enumerate_flow_morphisms,
    find_flow_isomorphism,
    glob_discrete,
    glob_flow,
    identity_flow_morphism,
    is_flow_morphism,
    realize,
    realize_morphism,
    s_equivalent,
    s_homotopic,
    subdivide_edge,
    validate_flow,
)


class TestEnumerateMorphisms:
    def test_two_paths_to_one(self):
        dom = glob_flow(["a", "b"])
        cod = glob_flow(["c"])
        found = list(enumerate_flow_morphisms(dom, cod))
        assert len(found) == 1
        assert found[0].path_map == {"a": "c", "b": "c"}

    def test_one_path_to_two(self):
        found = list(enumerate_flow_morphisms(glob_flow(["c"]), glob_flow(["a", "b"])))
        assert [f.path_map for f in found] == [{"c": "a"}, {"c": "b"}]

    def test_all_results_are_morphisms(self, rng):
        dom = realize(make_chain(2))
        cod = realize(make_chain(3))
        for f in enumerate_flow_morphisms(dom, cod):
            assert is_flow_morphism(f, dom, cod)

    def test_budget_exhaustion_raises(self):
        dom = realize(make_chain(3))
        cod = realize(make_chain(3))
        with pytest.raises(SearchBudgetExceeded):
            list(enumerate_flow_morphisms(dom, cod, budget=3))


class TestSEquivalent:
    def test_identical_flows_yield_identity_witness(self):
        flow = glob_flow(["a"])
        witness = s_equivalent(flow, flow)
        assert witness is not None
        f, g = witness
        assert f == identity_flow_morphism(flow)
        assert g == identity_flow_morphism(flow)

    def test_squared_pair_collapses_to_single_edge(self):
        fat = realize(make_parallel_pair(with_square=True))
        thin = realize(glob_discrete(["c"]))
        witness = s_equivalent(fat, thin)
        assert witness is not None
        f, g = witness
        # deterministic: first candidate in lexicographic order
        assert f.path_map == {"a": "c", "b": "c"}
        assert g.path_map == {"c": "a"}

    def test_unsquared_pair_is_not_equivalent(self):
        fat = realize(make_parallel_pair(with_square=False))
        thin = realize(glob_discrete(["c"]))
        # completes well under a 10**3 budget: the search space is tiny
        assert s_equivalent(fat, thin, budget=1000) is None

    def test_witness_passes_the_definition(self):
        fat = realize(make_parallel_pair(with_square=True))
        thin = realize(glob_discrete(["c"]))
        f, g = s_equivalent(fat, thin)
        assert s_homotopic(
            compose_flow_morphisms(f, g), identity_flow_morphism(thin), thin, thin
        )
        assert s_homotopic(
            compose_flow_morphisms(g, f), identity_flow_morphism(fat), fat, fat
        )

    def test_skeleton_size_mismatch_is_disproof(self):
        assert s_equivalent(realize(make_chain(2)), glob_flow(["a"])) is None

    def test_budget_exhaustion_raises(self):
        grid = realize(make_grid(True))
        with pytest.raises(SearchBudgetExceeded):
            s_equivalent(grid, grid, budget=5)


class TestFindFlowIsomorphism:
    def test_renamed_flow_is_isomorphic(self, rng):
        for _ in range(10):
            flow = realize(random_complex(rng, max_states=4, max_edges=5, max_squares=2))
            state_names = {s: f"S{i}" for i, s in enumerate(sorted(flow.skeleton))}
            path_names = {p: f"P{i}" for i, p in enumerate(flow.sorted_paths)}
            renamed = FiniteFlow(
                skeleton=[state_names[s] for s in flow.skeleton],
                path_ends={
                    path_names[p]: (state_names[s], state_names[t])
                    for p, (s, t) in flow.path_ends.items()
                },
                composition={
                    (path_names[x], path_names[y]): path_names[z]
                    for (x, y), z in flow.composition.items()
                },
                adjacency=[
                    (path_names[a], path_names[b]) for a, b in flow.adjacency
                ],
            )
            witness = find_flow_isomorphism(flow, renamed)
            assert witness is not None
            iso, inverse = witness
            assert is_flow_morphism(iso, flow, renamed)
            assert is_flow_morphism(inverse, renamed, flow)
            assert compose_flow_morphisms(inverse, iso) == identity_flow_morphism(flow)

    def test_path_count_mismatch(self):
        assert find_flow_isomorphism(glob_flow(["a"]), glob_flow(["a", "b"])) is None

    def test_adjacency_structure_matters(self):
        plain = realize(make_parallel_pair(with_square=False))
        squared = realize(make_parallel_pair(with_square=True))
        assert find_flow_isomorphism(plain, squared) is None
        assert find_flow_isomorphism(squared, plain) is None

    def test_composition_structure_matters(self):
        chain = realize(make_chain(2))
        # same shape but the composite is swapped with a parallel path
        twisted = FiniteFlow(
            skeleton=chain.skeleton,
            path_ends=dict(chain.path_ends) | {"extra": ("s0", "s2")},
            composition={("e0", "e1"): "extra"},
        )
        widened = FiniteFlow(
            skeleton=chain.skeleton,
            path_ends=dict(chain.path_ends) | {"extra": ("s0", "s2")},
            composition=dict(chain.composition),
        )
        assert validate_flow(twisted).ok and validate_flow(widened).ok
        witness = find_flow_isomorphism(twisted, widened)
        assert witness is not None
        # the iso must send the actual composite to the actual composite
        iso, _ = witness
        assert iso.path_map["extra"] == "e0*e1"


class TestTDihomotopy:
    def test_identity_on_valid_flows(self, rng):
        for flow in (glob_flow(["a", "b"]), realize(make_grid(True))):
            report = check_t_dihomotopy(identity_flow_morphism(flow), flow, flow)
            assert report.holds
            assert report.restriction_isomorphism
            assert report.singleton_germs
            assert report.image_extension

    def test_subdivision_is_t_dihomotopy(self):
        interval = make_interval()
        refined, m = subdivide_edge(interval, "e")
        f = realize_morphism(m, interval, refined)
        report = check_t_dihomotopy(f, realize(interval), realize(refined))
        assert (
            report.restriction_isomorphism,
            report.singleton_germs,
            report.image_extension,
        ) == (True, True, True)

    def test_inclusion_into_wider_glob_fails(self):
        small = glob_flow(["a"])
        wide = glob_flow(["a", "b"])
        f = FlowMorphism(state_map={"0": "0", "1": "1"}, path_map={"a": "a"})
        report = check_t_dihomotopy(f, small, wide)
        assert not report.holds
        # the un-extendable path b is reported
        assert not report.image_extension
        assert any("b" in d for d in report.details)

    def test_isolated_new_state_fails_germ_condition(self):
        small = glob_flow(["a"])
        padded = FiniteFlow(
            skeleton=("0", "1", "w"),
            path_ends={"a": ("0", "1")},
        )
        f = FlowMorphism(state_map={"0": "0", "1": "1"}, path_map={"a": "a"})
        report = check_t_dihomotopy(f, small, padded)
        assert report.restriction_isomorphism
        assert not report.singleton_germs
        assert report.image_extension
        assert not report.holds

    def test_non_injective_state_map_fails_restriction(self):
        dom = glob_flow(["a"])
        cod = FiniteFlow(skeleton=("u",), path_ends={"l": ("u", "u")})
        # l is a loop path; flows allow it even though complexes do not
        f = FlowMorphism(state_map={"0": "u", "1": "u"}, path_map={"a": "l"})
        assert is_flow_morphism(f, dom, cod)
        report = check_t_dihomotopy(f, dom, cod)
        assert not report.restriction_isomorphism

    def test_random_subdivisions_hold(self, rng):
        for _ in range(10):
            c = random_complex(rng, min_edges=1, max_states=5, max_edges=7)
            edge = rng.choice(c.edges).id
            refined, m = subdivide_edge(c, edge)
            report = check_t_dihomotopy(
                realize_morphism(m, c, refined), realize(c), realize(refined)
            )
            assert report.holds, report.details
