use std::fmt::Write;

use chatelet_core::check::run_checks;
use chatelet_core::factor::trial_division_bound;
use chatelet_core::global::{global_chow, reciprocity_check, GlobalOptions, GlobalReport};
use chatelet_core::local::{local_chow, LocalOptions, LocalReport};
use chatelet_core::padic::format_rational;
use chatelet_core::{hilbert_symbol, parse_rational, Place, Rational, Result};
use serde_json::{json, Value};

use crate::Format;

pub struct Output {
    pub json: Value,
    pub text: String,
    pub exit_code: u8,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn parse_roots(s: &str) -> Result<[Rational; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(chatelet_core::ChowError::Parse(format!("expected three roots, got {s:?}")));
    }
    Ok([parse_rational(parts[0])?, parse_rational(parts[1])?, parse_rational(parts[2])?])
}

fn parse_d(s: &str) -> Result<Rational> {
    let d = parse_rational(s)?;
    if d == Rational::from_integer(0.into()) {
        return Err(chatelet_core::ChowError::Domain("d must be nonzero".into()));
    }
    Ok(d)
}

fn roots_json(roots: &[Rational; 3]) -> Value {
    json!(roots.iter().map(format_rational).collect::<Vec<_>>())
}

fn local_text(r: &LocalReport) -> String {
    let mut s = String::new();
    let ext = &r.ext_class;
    let _ = writeln!(s, "place       {}", r.place);
    let _ = writeln!(s, "extension   {:?} (n={}, m={})", ext.kind, ext.conductor_n, ext.stability_m);
    if let Some(n) = &r.normalized {
        let _ = writeln!(
            s,
            "normalized  base root c{}, e1={}, e2={}, r={}",
            n.base_root_index,
            format_rational(&n.e1),
            format_rational(&n.e2),
            n.r
        );
    }
    let _ = writeln!(s, "case        {}", r.case_label);
    let _ = writeln!(s, "predicted   {}", r.predicted_order);
    let _ = writeln!(s, "group       {}", r.group());
    let gens: Vec<String> = r.subgroup.basis().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "generators  {}", if gens.is_empty() { "-".into() } else { gens.join(" ") });
    let _ = writeln!(s, "consistent  {}", r.consistent);
    s
}

fn local_json(r: &LocalReport) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("order".into(), json!(r.order()));
    obj.insert("group".into(), json!(r.group()));
    v
}

pub fn local(place: &str, d: &str, roots: &str, opts: LocalOptions) -> Result<Output> {
    let place: Place = place.parse()?;
    let d = parse_d(d)?;
    let roots = parse_roots(roots)?;
    let report = local_chow(&d, &roots, place, opts)?;
    Ok(Output {
        json: json!({
            "command": "local",
            "inputs": {
                "place": place,
                "d": format_rational(&d),
                "roots": roots_json(&roots),
                "precision_buffer": opts.precision_buffer,
            },
            "result": local_json(&report),
            "checks": { "consistent": report.consistent },
        }),
        text: local_text(&report),
        exit_code: 0,
    })
}

fn global_text(g: &GlobalReport) -> String {
    let mut s = String::new();
    if g.global_square {
        let _ = writeln!(s, "d is a square in Q: the surface is rational");
    }
    let _ = writeln!(s, "{:<8} {:>5}", "place", "order");
    for c in &g.checked {
        let _ = writeln!(s, "{:<8} {:>5}", c.place.to_string(), c.order);
    }
    for l in &g.places {
        let gens: Vec<String> = l.subgroup.basis().iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "G_{} = <{}>  [{}]", l.place, gens.join(", "), l.case_label);
    }
    if !g.sampled_primes.is_empty() {
        let _ = writeln!(s, "trivial at {} sampled primes", g.sampled_primes.len());
    }
    let _ = writeln!(s, "kernel_dim  {}", g.kernel_dim);
    let _ = writeln!(s, "group       {}", g.group);
    s
}

pub fn global(d: &str, roots: &str, opts: &GlobalOptions) -> Result<Output> {
    let d = parse_d(d)?;
    let roots = parse_roots(roots)?;
    let report = global_chow(&d, &roots, opts)?;
    let mut result = serde_json::to_value(&report).expect("report serializes");
    if let Some(places) = result.get_mut("places").and_then(Value::as_array_mut) {
        for (v, l) in places.iter_mut().zip(&report.places) {
            *v = local_json(l);
        }
    }
    Ok(Output {
        json: json!({
            "command": "global",
            "inputs": {
                "d": format_rational(&d),
                "roots": roots_json(&roots),
                "precision_buffer": opts.precision_buffer,
                "samples": opts.sample_count,
                "seed": opts.seed,
            },
            "result": result,
            "checks": {
                "all_local_consistent": report.places.iter().all(|l| l.consistent),
                "sampled_primes_trivial": true,
            },
        }),
        text: global_text(&report),
        exit_code: 0,
    })
}

pub fn symbol(place: &str, a: &str, b: &str) -> Result<Output> {
    let place: Place = place.parse()?;
    let a = parse_d(a)?;
    let b = parse_d(b)?;
    let value = hilbert_symbol(&a, &b, place)?;
    let reciprocity = reciprocity_check(&a, &b, trial_division_bound())?;
    Ok(Output {
        json: json!({
            "command": "symbol",
            "inputs": { "place": place, "a": format_rational(&a), "b": format_rational(&b) },
            "result": value,
            "checks": { "reciprocity": reciprocity.holds },
        }),
        text: format!("{value}\n"),
        exit_code: 0,
    })
}

pub fn check(count: usize, seed: u64) -> Result<Output> {
    let suites = run_checks(count, seed);
    let all_ok = suites.iter().all(|s| s.ok());
    let contradictions: usize = suites.iter().map(|s| s.contradictions).sum();
    let mut text = String::new();
    for s in &suites {
        let _ = writeln!(
            text,
            "{:<22} {} passed, {} failed{}",
            s.name,
            s.passed,
            s.failed,
            s.first_failure.as_deref().map(|f| format!(" (first: {f})")).unwrap_or_default()
        );
    }
    let _ = writeln!(text, "{}", if all_ok { "all checks passed" } else { "CHECKS FAILED" });
    Ok(Output {
        json: json!({
            "command": "check",
            "inputs": { "fuzz_count": count, "seed": seed },
            "result": suites,
            "checks": { "all_passed": all_ok, "contradictions": contradictions },
        }),
        text,
        exit_code: if all_ok { 0 } else { 4 },
    })
}
