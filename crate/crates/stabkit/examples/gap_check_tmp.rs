use stabkit::families::gen_gap_tree;
use stabkit::representation::{validate_with_engine, Engine, StabMode};
fn main() {
    for k in [5usize, 10] {
        let t0 = std::time::Instant::now();
        let (g, rep) = gen_gap_tree(k).unwrap();
        let build = t0.elapsed();
        let t1 = std::time::Instant::now();
        let report = validate_with_engine(&rep, &g, StabMode::Srig, Engine::Sweep).unwrap();
        println!("k={k}: n={} build={:?} validate={:?} valid={}", g.n(), build, t1.elapsed(), report.valid);
        if !report.valid {
            println!("  missing={} extra={} unstabbed={} multi={}", report.missing_edges.len(), report.extra_edges.len(), report.unstabbed.len(), report.multi_stabbed.len());
            for e in report.missing_edges.iter().take(5) { println!("  missing {:?}", e); }
            for e in report.extra_edges.iter().take(5) { println!("  extra {:?}", e); }
            for e in report.unstabbed.iter().take(5) { println!("  unstabbed {:?}", e); }
        }
    }
}
