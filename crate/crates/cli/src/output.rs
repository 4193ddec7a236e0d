//! Report documents and their renderings.
//!
//! Every command builds one JSON document; `--format json` prints it and
//! text mode renders the same values, so the two cannot disagree.

use std::io::{self, Write};

use lrs_core::biperiod::{fixed_states, period_set_with_seed};
use lrs_core::gf::FieldSpec;
use lrs_core::lfsr::{cycle_decomposition_with, format_state, EnumerationOptions, Recurrence};
use lrs_core::poly::Poly;
use lrs_core::{Error, Result};
use serde_json::{json, Map, Value};

pub struct Format {
    pub json: bool,
    pub pretty: bool,
}

pub fn analyze(f: &Poly, seed: u64, cap: u64, threads: usize) -> Result<Value> {
    let report = period_set_with_seed(f, seed)?;
    let mut doc = report.to_json();
    let field = f.field();
    let rec = Recurrence::from_char_poly(f)?;
    let fixed: Vec<String> = fixed_states(f)?
        .iter()
        .map(|s| format_state(field, s))
        .collect();
    let obj = doc.as_object_mut().expect("object");
    obj.insert("biperiodic".into(), json!(report.biperiod().is_some()));
    obj.insert("fixed_states".into(), json!(fixed));
    obj.insert("state_count".into(), json!(rec.state_count()));
    let opts = EnumerationOptions { cap, threads };
    match cycle_decomposition_with(&rec, opts) {
        Ok(dec) => {
            let hist: Map<String, Value> = dec
                .length_histogram()
                .into_iter()
                .map(|(len, n)| (len.to_string(), json!(n)))
                .collect();
            obj.insert("cycle_histogram".into(), Value::Object(hist));
            obj.insert("cycles".into(), json!(dec.render()));
        }
        Err(Error::CapExceeded { .. }) => {
            obj.insert("cycle_histogram".into(), Value::Null);
            obj.insert("cycles".into(), Value::Null);
        }
        Err(e) => return Err(e),
    }
    Ok(doc)
}

pub fn cycles(f: &Poly, cap: u64, threads: usize) -> Result<Value> {
    let rec = Recurrence::from_char_poly(f)?;
    let dec = cycle_decomposition_with(&rec, EnumerationOptions { cap, threads })?;
    Ok(json!({
        "field": f.field().to_string(),
        "char_poly": f.to_list_string(),
        "pretty": f.to_string(),
        "lengths": dec.lengths(),
        "cycles": dec.render(),
    }))
}

pub fn poly_list(field: &FieldSpec, r: u32, t: u64, fs: &[Poly]) -> Value {
    json!({
        "field": field.to_string(),
        "r": r,
        "T": t,
        "count": fs.len(),
        "polys": fs.iter().map(Poly::to_list_string).collect::<Vec<_>>(),
        "pretty": fs.iter().map(Poly::to_string).collect::<Vec<_>>(),
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Array(xs) => format!(
            "{{{}}}",
            xs.iter().map(scalar).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

impl Format {
    fn poly<'a>(&self, obj: &'a Value) -> &'a Value {
        if self.pretty {
            &obj["pretty"]
        } else {
            &obj["char_poly"]
        }
    }

    fn json_line(&self, doc: &Value, out: &mut dyn Write) -> io::Result<()> {
        serde_json::to_writer(&mut *out, doc)?;
        writeln!(out)
    }

    pub fn emit_analyze(&self, doc: &Value, out: &mut dyn Write) -> io::Result<()> {
        if self.json {
            return self.json_line(doc, out);
        }
        writeln!(out, "field          {}", scalar(&doc["field"]))?;
        writeln!(out, "polynomial     {}", scalar(self.poly(doc)))?;
        writeln!(out, "degree         {}", doc["degree"])?;
        writeln!(
            out,
            "unit           {}",
            scalar(&doc["factorization"]["unit"])
        )?;
        for g in doc["factorization"]["factors"]
            .as_array()
            .into_iter()
            .flatten()
        {
            let shown = if self.pretty {
                &g["pretty"]
            } else {
                &g["poly"]
            };
            writeln!(
                out,
                "factor         {}  multiplicity {}  order {}",
                scalar(shown),
                g["multiplicity"],
                g["order"]
            )?;
        }
        writeln!(out, "period set     {}", scalar(&doc["period_set"]))?;
        match doc["biperiod"].as_u64() {
            Some(t) => writeln!(out, "biperiodic     yes, biperiod {t}")?,
            None => writeln!(out, "biperiodic     no")?,
        }
        writeln!(out, "fixed states   {}", scalar(&doc["fixed_states"]))?;
        match doc["cycle_histogram"].as_object() {
            Some(hist) => {
                let mut rows: Vec<(u64, &Value)> = hist
                    .iter()
                    .map(|(k, v)| (k.parse().unwrap_or(0), v))
                    .collect();
                rows.sort_by_key(|&(len, _)| len);
                let parts: Vec<String> = rows
                    .iter()
                    .map(|(len, n)| format!("{n} of length {len}"))
                    .collect();
                writeln!(out, "cycles         {}", parts.join(", "))?;
                for line in doc["cycles"].as_array().into_iter().flatten() {
                    writeln!(out, "  {}", scalar(line))?;
                }
            }
            None => writeln!(
                out,
                "cycles         omitted: {} states exceed the cap",
                scalar(&doc["state_count"])
            )?,
        }
        Ok(())
    }

    pub fn emit_cycles(&self, doc: &Value, out: &mut dyn Write) -> io::Result<()> {
        if self.json {
            return self.json_line(doc, out);
        }
        for line in doc["cycles"].as_array().into_iter().flatten() {
            writeln!(out, "{}", scalar(line))?;
        }
        Ok(())
    }

    pub fn emit_exists(
        &self,
        doc: &Value,
        pretty_witness: Option<&str>,
        out: &mut dyn Write,
    ) -> io::Result<()> {
        if self.json {
            return self.json_line(doc, out);
        }
        let witness = match (pretty_witness, self.pretty) {
            (Some(w), true) => w.to_string(),
            _ => scalar(&doc["witness"]),
        };
        writeln!(out, "field          {}", scalar(&doc["field"]))?;
        writeln!(out, "r              {}", doc["r"])?;
        writeln!(out, "T              {}", doc["T"])?;
        writeln!(out, "exists         {}", scalar(&doc["exists"]))?;
        writeln!(out, "branch         {}", scalar(&doc["branch"]))?;
        writeln!(out, "d0             {}", scalar(&doc["d0"]))?;
        writeln!(out, "d0 candidates  {}", scalar(&doc["d0_candidates"]))?;
        writeln!(out, "l              {}", scalar(&doc["l"]))?;
        writeln!(out, "factor degree  {}", scalar(&doc["factor_degree"]))?;
        writeln!(out, "N              {}", scalar(&doc["N"]))?;
        writeln!(out, "L              {}", scalar(&doc["L"]))?;
        writeln!(out, "witness        {witness}")?;
        if let Some(reason) = doc["failure_reason"].as_str() {
            writeln!(out, "reason         {reason}")?;
        }
        Ok(())
    }

    /// One polynomial per line.
    pub fn emit_polys(&self, doc: &Value, out: &mut dyn Write) -> io::Result<()> {
        if self.json {
            return self.json_line(doc, out);
        }
        let key = if self.pretty { "pretty" } else { "polys" };
        for f in doc[key].as_array().into_iter().flatten() {
            writeln!(out, "{}", scalar(f))?;
        }
        Ok(())
    }
}
