use graftpack::clutter::{self, Clutter, MinorOutcome, ObstructionId};
use graftpack::enumerate::{canonical_grafts, TMode};
use graftpack::obstruction::{self, SearchBudget};

fn main() {
    let t0 = std::time::Instant::now();
    let g8 = canonical_grafts(4, 8, TMode::Pair);
    println!("gen m=8 pair: {} grafts in {:?}", g8.len(), t0.elapsed());
    let t1 = std::time::Instant::now();
    let g9 = canonical_grafts(4, 9, TMode::Pair);
    println!("gen m=9 pair: {} grafts in {:?}", g9.len(), t1.elapsed());

    let budget = SearchBudget::default();
    let t2 = std::time::Instant::now();
    let sample: Vec<_> = g9.iter().step_by(97).collect();
    let mut found = 0;
    for sg in &sample {
        let g = obstruction::has_graft_minor(sg, &obstruction::f7(), &budget);
        if matches!(g, MinorOutcome::Found(_)) { found += 1; }
    }
    println!("graft-minor on {} samples: {:?} ({} found)", sample.len(), t2.elapsed(), found);
    let t3 = std::time::Instant::now();
    for sg in &sample {
        let h = Clutter::from_signed_graft(sg).unwrap();
        let _ = clutter::has_clutter_minor(&h, clutter::catalog(ObstructionId::L7), 1 << 22);
    }
    println!("clutter-minor on {} samples: {:?}", sample.len(), t3.elapsed());
}
