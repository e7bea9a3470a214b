//! Every theorem clause on every adjunction of the corpus, and on the
//! opposite of the split-idempotent adjunction.
//!
//! ```bash
//! cargo run --release --example theorem_audit
//! ```

use fincat::gallery::suite::{adjunctions, one_e};
use fincat::monadics::{audit, audit_dual};
use fincat::Result;

fn main() -> Result<()> {
    let report = audit(&one_e())?;
    for c in &report.clauses {
        println!("{:?} {:<72} lhs={:?} rhs={:?}", c.status, c.id, c.lhs, c.rhs);
    }
    println!("dual audit passes: {}", audit_dual(&one_e())?.all_pass());

    let all = adjunctions()?;
    let failing: Vec<String> = all
        .iter()
        .filter_map(|a| match audit(&a.value) {
            Ok(r) if r.all_pass() => None,
            _ => Some(a.name.clone()),
        })
        .collect();
    println!("{} adjunctions audited, {} failing {:?}", all.len(), failing.len(), failing);
    Ok(())
}
