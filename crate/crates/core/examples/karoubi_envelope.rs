//! The envelope of the walking idempotent and the two semiadjunctions between
//! a category and its envelope.
//!
//! ```bash
//! cargo run --example karoubi_envelope
//! ```

use fincat::completion::{is_idempotent_complete, split_idempotent, Karoubi};
use fincat::gallery::walking_idempotent;
use fincat::{Mor, Result};

fn main() -> Result<()> {
    let e = walking_idempotent();
    println!("E: {} object, morphisms {:?}", e.num_objects(), e.morphisms().map(|m| e.name_of(m)).collect::<Vec<_>>());
    println!("e splits in E: {}", split_idempotent(&e, Mor(1))?.is_some());

    let k = Karoubi::new(&e)?;
    let kc = k.category();
    println!("karoubi(E): {} objects, {} morphisms", kc.num_objects(), kc.num_morphisms());
    for x in kc.objects() {
        let o = k.object_data(x);
        println!("  {} = ({}, {})", kc.object_name(x), e.object_name(o.base), e.name_of(o.idem));
    }
    for m in kc.morphisms() {
        println!("  {:<24} underlying {}", kc.name_of(m), e.name_of(k.underlying(m)));
    }
    println!("karoubi(E) idempotent complete: {}", is_idempotent_complete(kc));

    let (up_iota, iota_up) = k.semiadjunctions()?;
    println!("υ ⊣ ι semiadjunction, unit components {:?}", names(kc, up_iota.unit().components()));
    println!("ι ⊣ υ semiadjunction, counit components {:?}", names(kc, iota_up.counit().components()));
    Ok(())
}

fn names(c: &fincat::FinCat, ms: &[Mor]) -> Vec<String> {
    ms.iter().map(|&m| c.name_of(m).to_string()).collect()
}
