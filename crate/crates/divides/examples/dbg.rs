fn main() {
    for k in [1usize, 3] {
        let p = divides::fixtures::curl_chain(k);
        println!("k={k}: dps {}", p.double_points().count());
        for f in p.internal_regions() {
            println!("   internal region n={}", p.corner_count(f));
        }
    }
}
