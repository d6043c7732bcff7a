//! Sweeps over the enumerated ring family: the three edge criteria agree
//! everywhere, annihilator incomparability implies adjacency (with the
//! converse on reduced rings), component edges lift into products, and the
//! zero-divisor graph embeds in the annihilator graph.

use annigraph_core::family::enumerate_family;
use annigraph_core::graph::{annihilator_graph, edge_criteria, zero_divisor_graph};
use annigraph_core::ring::{annihilator, element_classes, structure_predicates, RingObject};

fn nonzero_zero_divisors(ring: &RingObject) -> Vec<usize> {
    element_classes(ring).nonzero_zero_divisors(ring)
}

#[test]
fn edge_criteria_agree_on_the_family_up_to_order_32() {
    let family = enumerate_family(32).unwrap();
    assert!(family.len() > 30);
    let mut pairs_checked = 0u64;
    for f in &family {
        let verts = nonzero_zero_divisors(&f.ring);
        for (i, &x) in verts.iter().enumerate() {
            for &y in &verts[i + 1..] {
                let c = edge_criteria(&f.ring, x, y).unwrap();
                assert_eq!(
                    c.def_edge,
                    c.ideal_edge,
                    "{}: pair ({}, {})",
                    f.expr,
                    f.ring.label(x),
                    f.ring.label(y)
                );
                assert_eq!(
                    c.def_edge,
                    c.module_edge,
                    "{}: pair ({}, {})",
                    f.expr,
                    f.ring.label(x),
                    f.ring.label(y)
                );
                pairs_checked += 1;
            }
        }
    }
    assert!(pairs_checked > 1000);
}

#[test]
fn annihilator_incomparability_gives_edges_and_conversely_when_reduced() {
    let family = enumerate_family(32).unwrap();
    for f in &family {
        let ring = &f.ring;
        let g = annihilator_graph(ring).unwrap();
        let verts = nonzero_zero_divisors(ring);
        let reduced = structure_predicates(ring).is_reduced;
        let anns: Vec<Vec<usize>> = verts
            .iter()
            .map(|&v| annihilator(ring, &[v]).unwrap())
            .collect();
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let ai = &anns[i];
                let aj = &anns[j];
                let i_in_j = ai.iter().all(|a| aj.binary_search(a).is_ok());
                let j_in_i = aj.iter().all(|a| ai.binary_search(a).is_ok());
                if !i_in_j && !j_in_i {
                    assert!(
                        g.has_edge(i, j),
                        "{}: incomparable annihilators must give an edge",
                        f.expr
                    );
                }
                if reduced && g.has_edge(i, j) {
                    assert!(
                        !i_in_j && !j_in_i,
                        "{}: reduced converse fails at ({}, {})",
                        f.expr,
                        ring.label(verts[i]),
                        ring.label(verts[j])
                    );
                }
            }
        }
    }
}

#[test]
fn component_edges_lift_into_products() {
    // for R = R1 x ... x Rn: if some component pair is an edge of AG(R_i),
    // or the components agree on a nonzero nilpotent, the pair is an edge
    let family = enumerate_family(32).unwrap();
    for f in &family {
        let RingObject::Product(factors) = &f.ring else {
            continue;
        };
        let ring = &f.ring;
        let g = annihilator_graph(ring).unwrap();
        let verts = nonzero_zero_divisors(ring);
        let index_of: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let factor_nil: Vec<Vec<usize>> = factors
            .iter()
            .map(|r| element_classes(r).nilpotents)
            .collect();
        let factor_zd: Vec<Vec<usize>> = factors
            .iter()
            .map(|r| {
                let classes = element_classes(r);
                classes.nonzero_zero_divisors(r)
            })
            .collect();

        for (i, &x) in verts.iter().enumerate() {
            for &y in &verts[i + 1..] {
                let cx = ring.components(x);
                let cy = ring.components(y);
                let mut lifted = false;
                for (k, factor) in factors.iter().enumerate() {
                    let (xi, yi) = (cx[k], cy[k]);
                    if xi == yi {
                        if xi != factor.zero() && factor_nil[k].contains(&xi) {
                            lifted = true;
                        }
                        continue;
                    }
                    if factor_zd[k].contains(&xi) && factor_zd[k].contains(&yi) {
                        let c = edge_criteria(factor, xi, yi).unwrap();
                        if c.def_edge {
                            lifted = true;
                        }
                    }
                }
                if lifted {
                    let j = index_of[&y];
                    assert!(
                        g.has_edge(i, j),
                        "{}: lifted edge missing at ({}, {})",
                        f.expr,
                        ring.label(x),
                        ring.label(y)
                    );
                }
            }
        }
    }
}

#[test]
fn zero_divisor_graph_embeds_in_annihilator_graph() {
    let family = enumerate_family(48).unwrap();
    for f in &family {
        let ag = annihilator_graph(&f.ring).unwrap();
        let zg = zero_divisor_graph(&f.ring).unwrap();
        assert_eq!(ag.labels(), zg.labels());
        for (u, v) in zg.edges() {
            assert!(ag.has_edge(u, v), "{}: edge {u}-{v}", f.expr);
        }
    }
}

#[test]
fn vertex_count_is_zero_divisor_count_minus_one() {
    let family = enumerate_family(40).unwrap();
    for f in &family {
        let g = annihilator_graph(&f.ring).unwrap();
        let classes = element_classes(&f.ring);
        assert_eq!(g.n(), classes.zero_divisors.len() - 1, "{}", f.expr);
    }
}
