use divides::divide::GleamedDivide;
use divides::fixtures;
use divides::halfint::Half;
use divides::pipeline::{to_transvergent_diagram_cfg, DEFAULT_TWIST};
use divides::transvergent::TransvergentDiagram;
use std::collections::BTreeMap;

#[test]
fn invert_gleams() {
    for k in [2usize, 3] {
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
        println!("k={k}: direct jones {j0}");
        let internal = p.internal_regions();
        let central = *internal
            .iter()
            .find(|&&f| p.corner_count(f) == k)
            .unwrap();
        let wedges: Vec<_> = internal.iter().copied().filter(|&f| f != central).collect();
        let cpar = (k as i64) % 2;
        for c2 in (-13..=13i64).filter(|v| (v - cpar).rem_euclid(2) == 0) {
            for w2 in [-3i64, -1, 1, 3] {
                let mut gleams = BTreeMap::new();
                gleams.insert(central, Half::new(c2));
                for &w in &wedges {
                    gleams.insert(w, Half::new(w2));
                }
                let target = match GleamedDivide::new(p.clone(), gleams) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let (cusped, _) = match divides::cuspify::add_cusps(&target) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                if let Ok((d, _, _)) = to_transvergent_diagram_cfg(&cusped, None, &DEFAULT_TWIST) {
                    if let Ok(j) = d.jones() {
                        if j == j0 {
                            println!("   match at central {}/2 wedges {}/2", c2, w2);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn curl_pass_structure() {
    for k in [2usize, 3, 5] {
        let p = fixtures::closed_curl_chain(k);
        println!("k={k}:");
        for v in p.double_points() {
            let map = p.map();
            let ds = map.vertex_darts(v);
            let over = *ds.iter().min().unwrap();
            // find the loop darts: sigma(d) == alpha(d)
            let l1 = ds
                .iter()
                .copied()
                .find(|&d| map.sigma(d) == map.alpha(d))
                .unwrap();
            let l2 = map.sigma(l1);
            let t1 = map.sigma(l2);
            let over_is_l1_pass = over == l1 || over == t1;
            // which region does the loop corner face (wedge id)
            let wedge = map.corner_region(l1);
            println!(
                "   dp {:?}: darts {:?} over {} l1 {} over_on_l1_pass {} wedge {:?}",
                v, ds, over, l1, over_is_l1_pass, wedge
            );
        }
    }
}
