pub mod hassett;
pub mod lat;
pub mod nikulin;
pub mod og10;

use std::io::Write;

use og10_lattice::lattice::IntegralLattice;
use og10_lattice::matrix::Signature;
use serde_json::{Map, Value};

use crate::error::CliError;
use crate::table::{factors, KeyValue};

pub(crate) fn describe(t: &mut KeyValue, l: &IntegralLattice) {
    t.row("rank", l.rank())
        .row("det", l.discriminant())
        .row("signature", signature(l.signature()))
        .row("parity", if l.is_even() { "even" } else { "odd" })
        .row("scale", l.scale());
    match l.disc_group() {
        Ok(g) if g.is_trivial() => {
            t.row("disc group", "trivial");
        }
        Ok(g) => {
            let qs: Vec<String> = g.q_values.iter().map(ToString::to_string).collect();
            t.row("disc group", factors(&g.invariant_factors))
                .row(if g.even { "q mod 2" } else { "q mod 1" }, format!("[{}]", qs.join(", ")));
        }
        Err(_) => {
            t.row("disc group", "undefined (degenerate lattice)");
        }
    }
}

fn signature(s: Signature) -> String {
    if s.zero == 0 {
        format!("({},{})", s.positive, s.negative)
    } else {
        format!("({},{},{})", s.positive, s.negative, s.zero)
    }
}

pub(crate) fn emit_json(out: &mut dyn Write, map: Map<String, Value>) -> Result<(), CliError> {
    writeln!(out, "{}", Value::Object(map))?;
    Ok(())
}
