//! Finite rings, truncated free-module categories, induction and restriction
//! of scalars, and the ring-side searches that predict their separability.
//!
//! ```bash
//! cargo run --release --example rings_and_modules
//! ```

use fincat::classify::{is_semiseparable, is_separable};
use fincat::gallery::suite::ring_triples;
use fincat::gallery::{
    bimodule_retraction_search, induction_functor, restriction_functor, separability_idempotent_search,
};
use fincat::Result;

fn main() -> Result<()> {
    println!(
        "{:<18} {:>9} {:>9} {:>9} {:>10} {:>9} {:>10}",
        "map", "E exists", "ind sep", "regular", "ind ssep", "idem", "res sep"
    );
    for t in ring_triples() {
        let (phi, basis) = &t.value;
        let ind = induction_functor(phi, 2)?;
        let res = restriction_functor(phi, basis, 1)?;
        let e = bimodule_retraction_search(phi)?;
        let idem = separability_idempotent_search(phi, basis)?;
        println!(
            "{:<18} {:>9} {:>9} {:>9} {:>10} {:>9} {:>10}",
            t.name,
            e.retraction.is_some(),
            is_separable(&ind.functor)?,
            e.regular.is_some(),
            is_semiseparable(&ind.functor)?,
            idem.is_some(),
            is_separable(&res.functor)?
        );
    }
    Ok(())
}
