//! Left and right adjoints by universal-arrow search, bireflections and their
//! versions up to retracts.
//!
//! ```bash
//! cargo run --example adjoint_search
//! ```

use fincat::adjoint::{
    bireflection_data, equivalence_utr, find_left_adjoint, find_right_adjoint, is_bireflection, is_bireflection_utr,
    AdjointSearch,
};
use fincat::gallery::suite::{g_e_to_one, one_e};
use fincat::gallery::{terminal, to_terminal, walking_arrow};
use fincat::Result;

fn main() -> Result<()> {
    let two = walking_arrow();
    let bang = to_terminal(&two, &terminal())?;
    for (side, search) in [("left", find_left_adjoint(&bang)?), ("right", find_right_adjoint(&bang)?)] {
        if let AdjointSearch::Found(a) = search {
            let f = if side == "left" { a.left() } else { a.right() };
            println!("{side} adjoint of 2 -> 1 picks {}", two.object_name(f.ob(fincat::Obj(0))));
        }
    }

    let g = g_e_to_one();
    match find_left_adjoint(&g)? {
        AdjointSearch::Found(_) => println!("E -> 1 has a left adjoint"),
        AdjointSearch::Missing(x) => {
            println!("E -> 1 has no left adjoint: no initial arrow at {}", g.target().object_name(x))
        }
    }
    println!("E -> 1 bireflection: {}, up to retracts: {}", is_bireflection(&g)?, is_bireflection_utr(&g)?);
    let eq = equivalence_utr(&g)?;
    println!("E -> 1 equivalence up to retracts: {} (ff and surjective: {})", eq.completed, eq.ff_and_surjective_utr);

    let a = one_e();
    let upper = a.upper();
    println!(
        "\nF ⊣ G on the split idempotent; counit {:?}",
        a.counit().components().iter().map(|&m| upper.name_of(m)).collect::<Vec<_>>()
    );
    match bireflection_data(a.right())? {
        Some(b) => println!("G is a bireflection via {:?}", b.path),
        None => println!("G is not a bireflection"),
    }
    Ok(())
}
