//! The monad of an adjunction, its algebras, its Kleisli category, the
//! comparison functors and separability of the monad.
//!
//! ```bash
//! cargo run --example monads_and_algebras
//! ```

use fincat::classify::{is_fully_faithful, is_naturally_full};
use fincat::gallery::suite::one_e;
use fincat::monadics::{is_separable_monad, monad_of, Monadics};
use fincat::Result;

fn main() -> Result<()> {
    let a = one_e();
    let t = monad_of(&a)?;
    let c = t.category();
    println!("monad on a category with {} object(s)", c.num_objects());
    let m = Monadics::new(&a)?;
    let em = m.em();
    println!("algebras:");
    for o in em.objects() {
        println!("  ({}, {})", c.object_name(o.carrier), c.name_of(o.action));
    }
    println!(
        "Eilenberg-Moore: {} morphisms; Kleisli: {}",
        em.category().num_morphisms(),
        m.kleisli().category().num_morphisms()
    );
    let k = m.comparison();
    println!("K fully faithful: {}, naturally full: {}", is_fully_faithful(k), is_naturally_full(k)?);
    match is_separable_monad(&t)? {
        Some(w) => {
            println!("separable, σ = {:?}", w.sigma().components().iter().map(|&f| c.name_of(f)).collect::<Vec<_>>())
        }
        None => println!("not separable"),
    }
    let comonad = fincat::monadics::comonad_of(&a)?;
    println!("comonad category (opposite) has {} morphisms", comonad.category().num_morphisms());
    Ok(())
}
