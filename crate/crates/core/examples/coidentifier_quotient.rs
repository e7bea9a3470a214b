//! Quotients by idempotent natural transformations and the canonical
//! factorization `F = F_e ∘ H` of a semiseparable functor.
//!
//! ```bash
//! cargo run --example coidentifier_quotient
//! ```

use fincat::adjoint::{is_bireflection, is_bireflection_utr};
use fincat::classify::{is_naturally_full, is_separable, search_hom_retraction, Mode};
use fincat::coident::{canonical_factorization, coidentifier, coidentifier_lifts_idempotents};
use fincat::gallery::suite::{g_e_to_one, projection_idempotent};
use fincat::{Obj, Result};

fn main() -> Result<()> {
    let g = g_e_to_one();
    let p = search_hom_retraction(&g, Mode::Semisep)?.expect("semiseparable");
    let fac = canonical_factorization(&g, &p)?;
    let q = fac.quotient_functor();
    println!(
        "E/e has {} morphisms; H naturally full: {}; F_e separable: {}",
        q.target().num_morphisms(),
        is_naturally_full(q)?,
        is_separable(&fac.descended)?
    );

    // The central idempotent (1,0) on free modules over F2 × F2 of rank at most 1.
    let e = projection_idempotent()?;
    let c = e.category();
    let quo = coidentifier(&e)?;
    println!("\nfree modules over F2xF2: {} morphisms, quotient {}", c.num_morphisms(), quo.quotient().num_morphisms());
    for m in quo.quotient().morphisms() {
        println!("  class {:<28} representative {}", quo.quotient().name_of(m), c.name_of(quo.representative(m)));
    }
    println!("e at R^1 = {}", c.name_of(e.at(Obj(1))));
    println!(
        "H bireflection: {}, up to retracts: {}",
        is_bireflection(quo.functor())?,
        is_bireflection_utr(quo.functor())?
    );
    for lift in coidentifier_lifts_idempotents(&quo)? {
        println!("  idempotent class {} lifts to {}", quo.quotient().name_of(lift.class), c.name_of(lift.lift));
    }
    Ok(())
}
