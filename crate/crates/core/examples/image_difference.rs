//! Reproduces the image-set difference behind the minimally non-convex example.
use codecat::code::parse_code;
use codecat::enumeration::*;
use codecat::trunks::all_trunks;
use std::time::Instant;

fn main() {
    let c = parse_code("{2345,123,134,145,13,14,23,34,45,3,4,0}").unwrap();
    let d = parse_code("{2345,123,134,145,13,14,23,34,45,3,4,234,345,0}").unwrap();
    let e = parse_code("{2345,123,134,145,13,14,23,34,45,3,4,1,0}").unwrap();
    for (name, x) in [("C", &c), ("D", &d), ("E", &e)] {
        println!("{name}: {} trunks", all_trunks(x).len());
    }
    let cfg = EnumerationConfig {
        max_trunks: 64,
        jobs: None,
    };
    for (name, x) in [("C", &c), ("D", &d), ("E", &e)] {
        let t = Instant::now();
        let s = enumerate_reduced_images(x, &cfg).unwrap();
        println!(
            "{name}: {} images, {:?}, {:?}",
            s.images.len(),
            s.stats,
            t.elapsed()
        );
    }
    let t = Instant::now();
    let diff = image_set_difference(&c, &[d, e], &cfg, None).unwrap();
    println!("diff in {:?}", t.elapsed());
    for x in diff {
        println!("{x}");
    }
}
