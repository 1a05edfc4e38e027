use divides::divide::GleamedDivide;
use divides::fixtures;
use divides::halfint::Half;
use divides::pipeline::{to_transvergent_diagram_cfg, TwistConfig};
use divides::transvergent::tables::ContribConfig;
use std::collections::BTreeMap;

#[test]
fn spiral_assignments() {
    let p = fixtures::loop_with_inner_curl();
    let wedge = fixtures::inner_curl_region(&p);
    let big = fixtures::big_loop_region(&p);
    let dps: Vec<_> = p.double_points().collect();
    for braid in [false, true] {
        let cfg = TwistConfig {
            curl_over_l1_when_positive: false,
            braid_over_lower_when_positive: braid,
            contrib: ContribConfig {
                paired_over: Half(1),
                axis: [Half(1), Half(-3), Half(3), Half(-3)],
            },
        };
        for mask in 0..4u32 {
            let assign: BTreeMap<_, _> = dps
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let d0 = *p.map().vertex_darts(v).iter().min().unwrap();
                    let d = if mask & (1 << i) != 0 {
                        p.map().sigma(d0)
                    } else {
                        d0
                    };
                    (v, d)
                })
                .collect();
            let mut gleams = BTreeMap::new();
            gleams.insert(wedge, Half::new(3));
            gleams.insert(big, Half::new(1));
            let t = GleamedDivide::new(p.clone(), gleams).unwrap();
            let (cusped, _) = divides::cuspify::add_cusps(&t).unwrap();
            match to_transvergent_diagram_cfg(&cusped, Some(&assign), &cfg) {
                Ok((d, _, log)) => {
                    println!(
                        "braid={braid} mask={mask}: plan {:?} jones {:?}",
                        log.entries
                            .iter()
                            .map(|e| (e.region.0, e.n, e.crossed_edges.len()))
                            .collect::<Vec<_>>(),
                        d.jones().map(|j| j.to_string())
                    );
                }
                Err(e) => println!("braid={braid} mask={mask}: error {e}"),
            }
        }
    }
}

#[test]
fn curl_chain_unfold() {
    use divides::transvergent::TransvergentDiagram;
    for k in [1usize, 2, 3, 5] {
        let p = fixtures::curl_chain(k);
        assert_eq!(p.double_points().count(), k, "chain {k}");
        let data: BTreeMap<_, _> = p
            .double_points()
            .map(|v| {
                let over = *p.map().vertex_darts(v).iter().min().unwrap();
                (v, TransvergentDiagram::axis_data(&p, v, over).unwrap())
            })
            .collect();
        let t = TransvergentDiagram::new(p.clone(), data).unwrap();
        let (d, _) = t.unfold().unwrap();
        println!(
            "chain {k}: crossings {} comps {} jones {:?}",
            d.crossing_count(),
            d.component_count(),
            d.jones().map(|j| j.to_string())
        );
        // fold it and print the gleams
        let g = t.fold().unwrap();
        println!(
            "   fold: {:?}",
            g.gleams().iter().map(|(f, v)| (f.0, v.to_string())).collect::<Vec<_>>()
        );
    }
    // reference torus links
    let t25 = divides::pd::LinkDiagram::from_pd(vec![
        [1, 6, 2, 7],
        [3, 8, 4, 9],
        [5, 10, 6, 1],
        [7, 2, 8, 3],
        [9, 4, 10, 5],
    ])
    .unwrap();
    println!("T(2,5) reference jones: {}", t25.jones().unwrap());
    let t23 = divides::pd::LinkDiagram::from_pd(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
    println!("T(2,3) reference jones: {}", t23.jones().unwrap());
}

#[test]
fn closed_chain_unfold() {
    use divides::transvergent::TransvergentDiagram;
    for k in [2usize, 3, 5] {
        let p = fixtures::closed_curl_chain(k);
        assert_eq!(p.double_points().count(), k, "closed chain {k}");
        let data: BTreeMap<_, _> = p
            .double_points()
            .map(|v| {
                let over = *p.map().vertex_darts(v).iter().min().unwrap();
                (v, TransvergentDiagram::axis_data(&p, v, over).unwrap())
            })
            .collect();
        let t = TransvergentDiagram::new(p.clone(), data).unwrap();
        let (d, _) = t.unfold().unwrap();
        println!(
            "closed chain {k}: crossings {} comps {} jones {:?}",
            d.crossing_count(),
            d.component_count(),
            d.jones().map(|j| j.to_string())
        );
        let g = t.fold().unwrap();
        println!(
            "   fold: {:?}",
            g.gleams().iter().map(|(f, v)| (f.0, v.to_string())).collect::<Vec<_>>()
        );
    }
}

#[test]
fn closed_chain_theorem_loop() {
    use divides::transvergent::TransvergentDiagram;
    for k in [2usize, 3, 5] {
        let p = fixtures::closed_curl_chain(k);
        let data: BTreeMap<_, _> = p
            .double_points()
            .map(|v| {
                let over = *p.map().vertex_darts(v).iter().min().unwrap();
                (v, TransvergentDiagram::axis_data(&p, v, over).unwrap())
            })
            .collect();
        let t = TransvergentDiagram::new(p.clone(), data).unwrap();
        let (d0, _) = t.unfold().unwrap();
        let j0 = d0.jones().unwrap();
        let g = t.fold().unwrap();
        let (cusped, _) = divides::cuspify::add_cusps(&g).unwrap();
        let (d1, _, log) = divides::pipeline::to_transvergent_diagram(&cusped).unwrap();
        let j1 = d1.jones().unwrap();
        println!(
            "closed chain {k}: direct {j0} / pipeline {j1} match {} (plan {:?})",
            j0 == j1,
            log.entries.iter().map(|e| (e.n, e.crossed_edges.len())).collect::<Vec<_>>()
        );
    }
}
