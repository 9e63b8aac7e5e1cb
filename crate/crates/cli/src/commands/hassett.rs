use std::io::Write;

use og10_lattice::hassett::{self, HassettReport};

use crate::error::CliError;
use crate::table::{yes_no, Columns, KeyValue};

fn star2_cell(r: &HassettReport) -> String {
    match r.witness_n {
        Some(n) => format!("yes (n={n})"),
        None => "no".into(),
    }
}

pub fn check(d: i64, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let r = hassett::report(d)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?;
        return Ok(());
    }
    let star2prime = if d % 2 == 0 { yes_no(r.star2prime) } else { "undefined (d odd)" };
    KeyValue::new()
        .row("d", r.d)
        .row("d mod 6", r.mod6)
        .row("admissible", yes_no(r.admissible))
        .row("(**)", star2_cell(&r))
        .row("(**')", star2prime)
        .row("LSV", yes_no(r.lsv))
        .write(out)?;
    Ok(())
}

pub fn list(max: i64, json: bool, out: &mut dyn Write) -> Result<(), CliError> {
    if max < 8 {
        return Err(CliError::input(format!("--max must be at least 8, got {max}")));
    }
    let reports = hassett::enumerate(max);
    if json {
        for r in &reports {
            writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
        }
        return Ok(());
    }
    let mut t = Columns::new(&["d", "mod6", "(**)", "n", "(**')", "LSV"]);
    for r in &reports {
        t.push(vec![
            r.d.to_string(),
            r.mod6.to_string(),
            yes_no(r.star2).into(),
            r.witness_n.map_or("-".into(), |n| n.to_string()),
            yes_no(r.star2prime).into(),
            yes_no(r.lsv).into(),
        ]);
    }
    t.write(out)?;
    Ok(())
}
