use std::io::Write;

use og10_lattice::nikulin::{disc_group_length, embedding_sufficient, EmbeddingVerdict};
use serde_json::Value;

use super::emit_json;
use crate::error::CliError;
use crate::input::{load_document, parse_target};
use crate::json;
use crate::table::KeyValue;

pub fn embed(file: &str, target: &str, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = load_document(file)?;
    let t = doc.lattice()?;
    let (lp, lm) = parse_target(target)?;
    let verdict = embedding_sufficient(&t, (lp, lm))?;
    let length = disc_group_length(&t)?;
    let sig = t.signature();
    let corank = (lp + lm) as i64 - t.rank() as i64;
    let word = match verdict {
        EmbeddingVerdict::Exists => "exists",
        EmbeddingVerdict::Unknown => "unknown",
    };
    if json {
        let mut map = json::document(&doc);
        map.insert("target".into(), serde_json::json!([lp, lm]));
        map.insert("disc_length".into(), Value::from(length));
        map.insert("corank".into(), Value::from(corank));
        map.insert("verdict".into(), Value::from(word));
        return emit_json(out, map);
    }
    KeyValue::new()
        .row("lattice signature", format!("({},{})", sig.positive, sig.negative))
        .row("target signature", format!("({lp},{lm})"))
        .row("disc length", length)
        .row("corank", format!("{corank} (needs >= {})", length + 2))
        .row(
            "primitive embedding",
            match verdict {
                EmbeddingVerdict::Exists => "exists",
                EmbeddingVerdict::Unknown => "unknown (sufficient criterion does not apply)",
            },
        )
        .write(out)?;
    Ok(())
}
