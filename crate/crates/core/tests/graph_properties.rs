mod common;

use std::collections::{BTreeSet, VecDeque};

use common::{random_graph, random_tree};
use magnitude_core::{ExtDistance, Graph, SubgraphSelection};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random cover `X = G ∪ H`: every edge goes to G, H or both, and every
/// vertex lands on at least one side.
fn random_cover(
    rng: &mut impl Rng,
    x: &Graph,
) -> (
    Vec<usize>,
    Vec<(usize, usize)>,
    Vec<usize>,
    Vec<(usize, usize)>,
) {
    let n = x.vertex_count();
    let mut gv = BTreeSet::new();
    let mut hv = BTreeSet::new();
    for v in 0..n {
        match rng.gen_range(0..3) {
            0 => gv.insert(v),
            1 => hv.insert(v),
            _ => gv.insert(v) && hv.insert(v),
        };
    }
    let (mut ge, mut he) = (Vec::new(), Vec::new());
    for &(u, v) in x.edges() {
        let side = rng.gen_range(0..3);
        if side != 1 {
            ge.push((u, v));
            gv.extend([u, v]);
        }
        if side != 0 {
            he.push((u, v));
            hv.extend([u, v]);
        }
    }
    (gv.into_iter().collect(), ge, hv.into_iter().collect(), he)
}

fn bfs_path(x: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; x.vertex_count()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &v in x.neighbors(u) {
            if prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    if prev[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

#[test]
fn metric_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=40);
        let p = rng.gen_range(0.02..0.3);
        let g = random_graph(&mut rng, n, p);
        let d = g.distances();
        for x in 0..n {
            assert_eq!(d.get(x, x), ExtDistance::Finite(0));
            for y in 0..n {
                assert_eq!(d.get(x, y), d.get(y, x));
                if x != y {
                    assert_ne!(d.get(x, y), ExtDistance::Finite(0));
                }
                assert_eq!(d.get(x, y) == ExtDistance::Finite(1), g.has_edge(x, y));
                for z in 0..n {
                    assert!(d.get(x, z) <= d.get(x, y) + d.get(y, z));
                }
            }
        }
    }
}

#[test]
fn product_distances_add() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let (a, b) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let g = random_graph(&mut rng, a, 0.4);
        let h = random_graph(&mut rng, b, 0.4);
        let p = g.cartesian_product(&h);
        let (dg, dh, dp) = (g.distances(), h.distances(), p.distances());
        for x in 0..a * b {
            for y in 0..a * b {
                let expect = dg.get(x / b, y / b) + dh.get(x % b, y % b);
                assert_eq!(dp.get(x, y), expect);
            }
        }
    }
}

#[test]
fn convexity_propagates_from_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut convex_cases = 0;
    for _ in 0..400 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.2..0.7);
        let x = random_graph(&mut rng, n, p);
        let (gv, ge, hv, he) = random_cover(&mut rng, &x);
        let g = SubgraphSelection::new(&x, &gv, &ge).unwrap();
        let h = SubgraphSelection::new(&x, &hv, &he).unwrap();
        assert!(g.union(&h).unwrap().is_full());
        if g.intersection(&h).unwrap().is_convex() {
            convex_cases += 1;
            assert!(g.is_convex() && h.is_convex(), "{x:?} {g:?} {h:?}");
        }
    }
    assert!(
        convex_cases > 20,
        "too few convex intersections: {convex_cases}"
    );
}

#[test]
fn paths_cross_the_intersection() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.15..0.6);
        let x = random_graph(&mut rng, n, p);
        let (gv, ge, hv, he) = random_cover(&mut rng, &x);
        let g = SubgraphSelection::new(&x, &gv, &ge).unwrap();
        let h = SubgraphSelection::new(&x, &hv, &he).unwrap();
        if gv.is_empty() || hv.is_empty() {
            continue;
        }
        let inter = g.intersection(&h).unwrap();
        let a = gv[rng.gen_range(0..gv.len())];
        let b = hv[rng.gen_range(0..hv.len())];
        if let Some(path) = bfs_path(&x, a, b) {
            assert!(path.iter().any(|&v| inter.contains_vertex(v)), "{path:?}");
        }
    }
}

fn subtree_vertex_sets(t: &Graph) -> Vec<Vec<usize>> {
    let n = t.vertex_count();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|vs| {
            let (sub, _) = SubgraphSelection::induced(t, vs).unwrap().to_graph();
            sub.component_count() == 1
        })
        .collect()
}

#[test]
fn trees_project_onto_subtrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..30 {
        let n = rng.gen_range(1..=7);
        let t = random_tree(&mut rng, n);
        let d = t.distances();
        for vs in subtree_vertex_sets(&t) {
            let sel = SubgraphSelection::induced(&t, &vs).unwrap();
            let pi = sel
                .projection()
                .unwrap()
                .expect("trees project onto subtrees");
            for x in 0..n {
                let star = pi.get(x).unwrap();
                assert!(sel.contains_vertex(star));
                // the gateway is the unique nearest vertex
                let nearest = vs
                    .iter()
                    .filter(|&&u| d.get(x, u) == d.get(x, star))
                    .count();
                assert_eq!(nearest, 1);
                for &u in &vs {
                    assert_eq!(d.get(x, u), d.get(x, star) + d.get(star, u));
                }
            }
        }
    }
}

#[test]
fn projection_fibres_partition_the_ball() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let x = random_graph(&mut rng, n, 0.3);
        let vs: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        let sel = SubgraphSelection::induced(&x, &vs).unwrap();
        let Ok(Some(pi)) = sel.projection() else {
            continue;
        };
        let mut covered: Vec<usize> = vs.iter().flat_map(|&u| pi.fibre(u)).collect();
        covered.sort_unstable();
        assert_eq!(covered, pi.ball());
        for &u in &vs {
            assert_eq!(pi.get(u), Some(u));
        }
    }
}

#[test]
fn relabeling_preserves_distance_profile() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.35);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let p = g.permute(&perm).unwrap();
        let (dg, dp) = (g.distances(), p.distances());
        for x in 0..n {
            for y in 0..n {
                assert_eq!(dg.get(x, y), dp.get(perm[x], perm[y]));
            }
        }
    }
}
