//! Decide every property of `G: E → 𝟙` and of a few other small functors, and
//! read off the associated idempotent.
//!
//! ```bash
//! cargo run --example classify_functor
//! ```

use fincat::classify::{associated_idempotent, classify, enumerate_hom_retractions, search_hom_retraction, Mode};
use fincat::gallery::suite::{functors, g_e_to_one};
use fincat::Result;

fn main() -> Result<()> {
    let g = g_e_to_one();
    let report = classify(&g)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));

    let p = search_hom_retraction(&g, Mode::Semisep)?.expect("G is semiseparable");
    let e = associated_idempotent(&p)?;
    let c = g.source();
    println!("associated idempotent at *: {}", c.name_of(e.at(fincat::Obj(0))));
    println!("retractions found: {}", enumerate_hom_retractions(&g, Mode::Semisep, 100)?.len());

    println!("\n{:<48} semisep sep natfull faithful full", "functor");
    for f in functors()?.iter().take(24) {
        let r = classify(&f.value)?;
        println!(
            "{:<48} {:<7} {:<5} {:<7} {:<8} {}",
            f.name, r.semiseparable, r.separable, r.naturally_full, r.faithful, r.full
        );
    }
    Ok(())
}
