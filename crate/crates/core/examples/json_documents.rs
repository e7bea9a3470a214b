//! Categories, functors and adjunctions as JSON documents, and the command
//! line driven in-process.
//!
//! ```bash
//! cargo run --example json_documents
//! ```

use fincat::cli::{adjunction_doc, category_doc, parse_adjunction, parse_category, run, Document};
use fincat::gallery::suite::one_e;
use fincat::gallery::walking_idempotent;
use fincat::Result;

fn main() -> Result<()> {
    let doc = Document::Category(category_doc(&walking_idempotent()));
    let text = serde_json::to_string_pretty(&doc)?;
    println!("{text}");
    if let Document::Category(c) = serde_json::from_str(&text)? {
        println!("parsed back: {} morphisms", parse_category(&c)?.num_morphisms());
    }

    let a = one_e();
    let back = parse_adjunction(&adjunction_doc(&a))?;
    println!("adjunction survives the round trip: {}", back.counit() == a.counit());

    let input = serde_json::to_string(&Document::Adjunction(adjunction_doc(&a)))?;
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["fincat", "monad", "--adjunction", "-", "separable"], &mut input.as_bytes(), &mut out, &mut err);
    println!("fincat monad separable -> exit {code}: {}", String::from_utf8_lossy(&out).trim());
    Ok(())
}
