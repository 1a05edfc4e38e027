use divides::divide::GleamedDivide;
use divides::geom::{build_divide, Sketch, SketchCurve};
use divides::halfint::Half;
use divides::pipeline::{to_transvergent_diagram_cfg, TwistConfig, DEFAULT_TWIST};
use divides::planemap::Surface;
use divides::transvergent::tables::ContribConfig;
use std::collections::BTreeMap;

fn nested() -> divides::divide::Divide {
    let s = Sketch {
        surface: Surface::Disk,
        curves: vec![
            SketchCurve::closed(vec![(0.6, 0.0), (0.0, 0.6), (-0.6, 0.0), (0.0, -0.6)]),
            SketchCurve::closed(vec![(0.3, 0.0), (0.0, 0.3), (-0.3, 0.0), (0.0, -0.3)]),
        ],
    };
    build_divide(&s).unwrap()
}

fn cfg_b() -> TwistConfig {
    TwistConfig {
        curl_over_l1_when_positive: false,
        braid_over_lower_when_positive: false,
        contrib: ContribConfig {
            paired_over: Half(1),
            axis: [Half(1), Half(-3), Half(3), Half(-3)],
        },
    }
}

#[test]
fn probe_nested() {
    let p = nested();
    let regions = p.internal_regions();
    // identify inner vs ring: the ring is adjacent to the external
    println!("internal regions: {:?}", regions);
    for (gi, gr) in [(4i64, 4i64), (6, 4), (4, 6), (2, 4)] {
        let mut gleams = BTreeMap::new();
        // region ids sorted; figure out which is which by corridor length
        let dual = p.map().dual_graph();
        let ext: Vec<_> = p.external_regions();
        let is_ring = |f| dual.neighbors(f).iter().any(|g| ext.contains(g));
        for &f in &regions {
            gleams.insert(f, Half::new(if is_ring(f) { gr } else { gi }));
        }
        let t = GleamedDivide::new(p.clone(), gleams).unwrap();
        let cfg = cfg_b();
        let (cusped, _) = divides::cuspify::add_cusps(&t).unwrap();
        let (d1, t1, log) = to_transvergent_diagram_cfg(&cusped, None, &cfg).unwrap();
        let j1 = d1.jones().unwrap();
        let g1 = t1.fold_with(&cfg.contrib).unwrap();
        println!(
            "target inner={}/2 ring={}/2: plan {:?}",
            gi, gr,
            log.entries.iter().map(|e| (e.region, e.n, e.crossed_edges.len())).collect::<Vec<_>>()
        );
        println!("  j1 = {j1}");
        println!(
            "  fold(T1) = {:?}",
            g1.gleams().iter().map(|(f, v)| (f.0, v.to_string())).collect::<Vec<_>>()
        );
        let (c2, _) = divides::cuspify::add_cusps(&g1).unwrap();
        let (d2, _, _) = to_transvergent_diagram_cfg(&c2, None, &cfg).unwrap();
        println!("  j2 = {}", d2.jones().unwrap());
    }
}
