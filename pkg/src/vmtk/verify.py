"""Verification suites.  Each returns a :class:`Report` of exact checks."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .corpus import (
    all_graphs,
    all_trees,
    decomposition_corpus,
    random_block_graph,
    random_dh_graph,
    random_graph,
    random_non_block_dh_graph,
    rng_for,
)
from .delta import (
    _rooted_count,
    build_delta_layout,
    build_twin_layout,
    count_delta,
    delta_compose,
    enumerate_delta,
    enumerate_rooted_delta,
    orbit_lower_bound_check,
    recognize_delta,
    size_recurrence_bound,
    verify_composition_lemmas,
    verify_excluded,
)
from .graph import Graph, bits, components, cycle_graph, domino_pendant_graph, is_distance_hereditary, net_graph
from .iso import automorphism_orbits, canonical_form, isomorphic
from .rankwidth import brute_force_lrw, check_submodularity, cutrank, layout_width, linear_rankwidth_exact
from .report import Report
from .splitdec import (
    build_appendix_decomposition,
    canonical_decomposition,
    check_block_characterizations,
    is_canonical,
    is_distance_hereditary_by_bags,
    linked,
    local_complement_decomposition,
    local_equivalence_invariant,
    marked_isomorphic,
    recompose_all,
)
from .vertexminor import elementary_representatives, local_complement, local_orbit, pivot, pivot_direct


def o1_graphs() -> dict[str, Graph]:
    """The three graphs of linear rank-width 2 whose proper vertex-minors all
    have linear rank-width at most 1."""
    return {"C5": cycle_graph(5), "net": net_graph(), "C4+2pendants": domino_pendant_graph()}


def suite_o1() -> Report:
    rep = Report("o1")
    for name, g in o1_graphs().items():
        rep.equal(f"{name}:lrw", 2, linear_rankwidth_exact(g)[0])
        worst = max(
            linear_rankwidth_exact(h)[0]
            for v in range(g.n)
            for h in elementary_representatives(g, v)
        )
        rep.bound(f"{name}:max-lrw-of-elementary-minors", "<=", 1, worst)
    return rep


def _excluded_member(args: tuple[Graph, int]) -> Report:
    return verify_excluded(*args)


def suite_excluded(k: int, jobs: int = 1) -> Report:
    if not 0 <= k <= 2:
        raise ValueError("exact exclusion checks run for k <= 2")
    members = enumerate_delta(k)
    work = [(g, k) for g in members]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_excluded_member, work))
    else:
        parts = [_excluded_member(w) for w in work]
    rep = Report(f"excluded-{k}")
    for i, part in enumerate(parts):
        rep.extend(part, prefix=f"member{i}:")
    rep.equal("members-passing", len(members), sum(p.ok for p in parts))
    return rep


def suite_composition(k: int) -> Report:
    rep = verify_composition_lemmas(k)
    rep.title = f"composition-{k}"
    return rep


def suite_counting() -> Report:
    rep = Report("counting")
    for k, want in enumerate((1, 1, 4)):
        rep.equal(f"classes(Delta_{k})", want, len(enumerate_delta(k)))
    for k, want in enumerate((1, 2, 24)):
        rep.equal(f"p_{k}", want, len(enumerate_rooted_delta(k)))
    for k in range(3):
        t = count_delta(k)
        rep.equal(f"total_{k}=classes", len(enumerate_delta(k)), t.total)
    t3 = count_delta(3)
    rep.equal("a_3", 24, t3.a)
    rep.equal("b_3", 24 * 23, t3.b)
    rep.equal("c_3", 2024, t3.c)
    rep.equal("total_3", 2600, t3.total)
    rep.equal("constructed_total_3", 2600, t3.constructed_total)
    rep.notes.append(f"p_3 = {t3.p} (orbit sum)")
    return rep


def suite_orbits() -> Report:
    rep = Report("orbits")
    for k in range(3):
        members = enumerate_delta(k)
        norb_sum = 0
        for i, g in enumerate(members):
            cert = recognize_delta(g)
            assert cert is not None
            rep.extend(orbit_lower_bound_check(g, cert), prefix=f"k{k}:member{i}:")
            norb_sum += automorphism_orbits(g).count
        rep.equal(f"p_{k}=sum-of-orbits", len(enumerate_rooted_delta(k)), norb_sum)
    for k in (2, 3):
        a_k = count_delta(k).a
        rep.bound(f"p_{k}>=2^(k-1)a_k^2(a_k+1)", ">=", size_recurrence_bound(k, a_k), _rooted_count(k))
    return rep


def delta3_member() -> Graph:
    """A fixed Type-C member of Δ_3 on 54 vertices."""
    reps = enumerate_rooted_delta(2)
    return delta_compose(reps[0], reps[5], reps[17])


def suite_layouts(seed: int) -> Report:
    rep = Report("layouts")
    for k in range(3):
        for i, g in enumerate(enumerate_delta(k)):
            cert = recognize_delta(g)
            assert cert is not None
            best = linear_rankwidth_exact(g)[0]
            widths = set()
            starts_ok = True
            for v in range(g.n):
                lay = build_delta_layout(cert, v)
                starts_ok &= lay[0] == v
                widths.add(layout_width(g, lay))
            rep.equal(f"k{k}:member{i}:widths", [k + 1], sorted(widths))
            rep.equal(f"k{k}:member{i}:dp-optimum", k + 1, best)
            rep.truth(f"k{k}:member{i}:starts", starts_ok)
            twin_ok = True
            for v in range(g.n):
                for adjacent in (False, True):
                    h = g.add_vertex(f"{g.labels[v]}'", list(bits(g.adj[v])) + ([v] if adjacent else []))
                    lay = build_twin_layout(h, cert, v, h.n - 1)
                    twin_ok &= lay[0] == v and lay[-1] == h.n - 1 and layout_width(h, lay) == k + 1
            rep.truth(f"k{k}:member{i}:twin-layouts", twin_ok)
    g = delta3_member()
    cert = recognize_delta(g)
    rep.equal("delta3:recognized-level", 3, None if cert is None else cert.k)
    if cert is not None:
        rng = rng_for(seed, "delta3-starts")
        for v in sorted(rng.sample(range(g.n), 10)):
            lay = build_delta_layout(cert, v)
            rep.equal(f"delta3:start={g.labels[v]}:width", 4, layout_width(g, lay))
    return rep


def suite_explicit(k: int) -> Report:
    if k not in (1, 2):
        raise ValueError("the explicit decomposition is checked for k in {1, 2}")
    rep = Report(f"canonical-{k}")
    for i, g in enumerate(enumerate_delta(k)):
        cert = recognize_delta(g)
        assert cert is not None
        d_g = build_appendix_decomposition(cert, g)
        d = canonical_decomposition(g)
        rep.truth(f"member{i}:explicit~canonical", marked_isomorphic(d_g, d, fix_originals=True))
        rep.truth(f"member{i}:explicit-is-canonical", is_canonical(d_g))
        rep.equal(f"member{i}:recompose-all", True, recompose_all(d_g).same_labeled(g))
    return rep


def _bags_are_induced(g: Graph, d) -> bool:
    for bag in d.bags():
        h = d.bag_graph(bag)
        if not any(
            isomorphic(h, g.induced(sub)) for sub in combinations(range(g.n), h.n)
        ):
            return False
    return True


def suite_decomposition(seed: int, count: int = 200) -> Report:
    """Uniqueness, round trips, linkage and D*v on a random corpus."""
    rep = Report("decomposition")
    corpus = decomposition_corpus(seed, count)
    counters = {"unique": 0, "canonical": 0, "roundtrip": 0, "linked": 0, "induced": 0}
    for i, g in enumerate(corpus):
        d = canonical_decomposition(g)
        other = canonical_decomposition(g, seed=seed + i + 1)
        ok = marked_isomorphic(d, other, fix_originals=True)
        counters["unique"] += ok
        counters["canonical"] += is_canonical(d) and is_canonical(other)
        counters["roundtrip"] += recompose_all(d).same_labeled(g)
        counters["linked"] += all(
            linked(d, x, y) == g.has_edge(x, y) for x, y in combinations(range(g.n), 2)
        )
        counters["induced"] += _bags_are_induced(g, d)
        if not ok:
            rep.notes.append(f"decomposition runs disagree on corpus graph {i}")
    for name, value in counters.items():
        rep.equal(f"corpus:{name}", len(corpus), value)
    rng = rng_for(seed, "local-complement-decomposition")
    agree = 0
    trials = count
    for _ in range(trials):
        g = random_dh_graph(rng.randint(2, 12), rng)
        v = rng.randrange(g.n)
        lhs = local_complement_decomposition(canonical_decomposition(g), v)
        rhs = canonical_decomposition(local_complement(g, v))
        agree += marked_isomorphic(lhs, rhs, fix_originals=True)
    rep.equal("D*v~canonical(G*v)", trials, agree)
    return rep


def suite_blocks(seed: int, count: int = 200) -> Report:
    rep = Report("blocks")
    rng = rng_for(seed, "blocks")
    for label, make in (
        ("block", lambda: random_block_graph(rng.randint(2, 12), rng)),
        ("non-block-dh", lambda: random_non_block_dh_graph(rng.randint(4, 12), rng)),
    ):
        passed = 0
        for _ in range(count):
            passed += check_block_characterizations(make()).ok
        rep.equal(f"{label}:biconditionals", count, passed)
    rng = rng_for(seed, "dh-recognition")
    agree = 0
    for i in range(count):
        n = rng.randint(2, 8)
        if i % 2:
            g = random_dh_graph(n, rng)
        else:
            g = _connect(random_graph(n, rng.uniform(0.2, 0.8), rng))
        agree += is_distance_hereditary(g) == is_distance_hereditary_by_bags(g)
    rep.equal("dh:distance<=>bags", count, agree)
    return rep


def _connect(g: Graph) -> Graph:
    """Join consecutive components by an edge between their lowest vertices."""
    comps = components(g)
    for a, b in zip(comps, comps[1:]):
        g = g.toggle_edge((a & -a).bit_length() - 1, (b & -b).bit_length() - 1)
    return g


def suite_treelocal(max_n: int = 7) -> Report:
    rep = Report("treelocal")
    pairs = clashes = 0
    for n in range(1, max_n + 1):
        trees = all_trees(n)
        orbits = [local_orbit(t) for t in trees]
        codes = [canonical_form(t) for t in trees]
        for i, j in combinations(range(len(trees)), 2):
            pairs += 1
            clashes += codes[j] in orbits[i] or codes[i] in orbits[j]
    rep.equal("non-isomorphic-tree-pairs-locally-equivalent", 0, clashes)
    rep.notes.append(f"{pairs} tree pairs checked")
    invariants = [local_equivalence_invariant(g) for g in enumerate_delta(2)]
    rep.equal("delta2:distinct-invariants", 4, len(set(invariants)))
    return rep


def suite_properties(seed: int, trials: int = 500, brute_max_n: int = 7) -> Report:
    rep = Report("properties")
    rng = rng_for(seed, "properties")

    def graph(lo: int = 1, hi: int = 10) -> Graph:
        return random_graph(rng.randint(lo, hi), rng.uniform(0.1, 0.9), rng)

    ok = 0
    for _ in range(trials):
        g = graph()
        v = rng.randrange(g.n)
        ok += local_complement(local_complement(g, v), v) == g
    rep.equal("local-complement-involution", trials, ok)

    ok = done = 0
    while done < trials:
        g = graph(2)
        edges = g.edges()
        if not edges:
            continue
        u, v = rng.choice(edges)
        if rng.random() < 0.5:
            u, v = v, u
        done += 1
        a = pivot(g, u, v)
        b = local_complement(local_complement(local_complement(g, v), u), v)
        ok += a == b == pivot_direct(g, u, v) == pivot(g, v, u)
    rep.equal("pivot-three-definitions", trials, ok)

    ok = done = 0
    while done < trials:
        g = graph(3)
        cands = [v for v in range(g.n) if len(list(bits(g.adj[v]))) >= 2]
        if not cands:
            continue
        v = rng.choice(cands)
        v1, v2 = rng.sample(list(bits(g.adj[v])), 2)
        done += 1
        h = pivot(g, v, v1)
        ok += h.has_edge(v1, v2) and pivot(h, v1, v2) == pivot(g, v, v2)
    rep.equal("pivot-composition", trials, ok)

    ok = sym = sub = 0
    for _ in range(trials):
        g = graph()
        v = rng.randrange(g.n)
        x = rng.getrandbits(g.n)
        y = rng.getrandbits(g.n)
        ok += cutrank(g, x) == cutrank(local_complement(g, v), x)
        sym += cutrank(g, x) == cutrank(g, g.full & ~x)
        sub += check_submodularity(g, x, y)
    rep.equal("cutrank-local-complement-invariance", trials, ok)
    rep.equal("cutrank-symmetry", trials, sym)
    rep.equal("cutrank-submodularity", trials, sub)

    for n in range(brute_max_n + 1):
        graphs = all_graphs(n)
        agree = sum(linear_rankwidth_exact(g)[0] == brute_force_lrw(g) for g in graphs)
        rep.equal(f"dp=brute-force:n={n}", len(graphs), agree)
    return rep


SUITES = ("o1", "excluded", "composition", "counting", "layouts", "canonical", "decomposition", "blocks", "treelocal", "properties", "orbits")


def run_suite(name: str, k: int | None = None, seed: int = 0, jobs: int = 1) -> Report:
    """Dispatch by name; targets written ``excluded-2`` carry their k."""
    if "-" in name:
        base, _, tail = name.rpartition("-")
        if tail.isdigit() and base in SUITES:
            name, k = base, int(tail)
    needs_k = {"excluded", "composition", "canonical"}
    if name in needs_k and k is None:
        raise ValueError(f"suite {name!r} needs --k")
    if name == "o1":
        return suite_o1()
    if name == "excluded":
        return suite_excluded(k, jobs)  # type: ignore[arg-type]
    if name == "composition":
        return suite_composition(k)  # type: ignore[arg-type]
    if name == "canonical":
        return suite_explicit(k)  # type: ignore[arg-type]
    if name == "counting":
        return suite_counting()
    if name == "layouts":
        return suite_layouts(seed)
    if name == "decomposition":
        return suite_decomposition(seed)
    if name == "blocks":
        return suite_blocks(seed)
    if name == "treelocal":
        return suite_treelocal()
    if name == "properties":
        return suite_properties(seed)
    if name == "orbits":
        return suite_orbits()
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


__all__ = [
    "SUITES",
    "delta3_member",
    "o1_graphs",
    "run_suite",
    "suite_explicit",
    "suite_blocks",
    "suite_composition",
    "suite_counting",
    "suite_decomposition",
    "suite_excluded",
    "suite_layouts",
    "suite_o1",
    "suite_orbits",
    "suite_properties",
    "suite_treelocal",
]
