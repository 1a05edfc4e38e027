use divides::divide::GleamedDivide;
use divides::fixtures;
use divides::halfint::Half;
use divides::pipeline::{to_transvergent_diagram_cfg, DEFAULT_TWIST};
use std::collections::BTreeMap;

#[test]
fn probe_family() {
    for g in [-7i64, -5, -3, -1, 1, 3, 5, 7] {
        let p = fixtures::curl_arc();
        let f = p.internal_regions()[0];
        let mut gleams = BTreeMap::new();
        gleams.insert(f, Half::new(g));
        let target = GleamedDivide::new(p, gleams).unwrap();
        let (cusped, _) = divides::cuspify::add_cusps(&target).unwrap();
        println!("gleam {g}/2: cusps {}", cusped.cusps.len());
        match to_transvergent_diagram_cfg(&cusped, None, &DEFAULT_TWIST) {
            Ok((d, t, log)) => {
                println!(
                    "  n={} halves={} crossings={} comps={} axis={} paired={}",
                    log.entries[0].n,
                    log.entries[0].half_twists,
                    d.crossing_count(),
                    d.component_count(),
                    t.axis_count(),
                    t.paired_count()
                );
                match d.kauffman_bracket() {
                    Ok(b) => println!("  bracket {b}   jones {:?}", d.jones().map(|j| j.to_string())),
                    Err(e) => println!("  bracket error {e}"),
                }
            }
            Err(e) => println!("  pipeline error: {e}"),
        }
    }
}
