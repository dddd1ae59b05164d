//! Text, JSON and CSV rendering of reports.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use supersieve_core::sieve::{CspReport, TheoremBRecord};
use supersieve_core::signed::ProductFormulaRecord;
use supersieve_core::strips::{ContentRecord, MnRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Anything a `verify` command can emit.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Csp(CspReport),
    ProductFormula(ProductFormulaRecord),
    Content(ContentRecord),
    Mn(MnRecord),
    TheoremB(TheoremBRecord),
}

impl Report {
    pub fn passed(&self) -> bool {
        match self {
            Report::Csp(r) => r.verdict,
            Report::ProductFormula(r) => r.matches,
            Report::Content(r) => r.verdict,
            Report::Mn(r) => r.matches,
            Report::TheoremB(r) => r.verdict,
        }
    }

    fn text(&self, out: &mut String) {
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        match self {
            Report::Csp(r) => {
                let k = r.k.map_or(String::new(), |k| format!(" k={k}"));
                let m = r.m.map_or(String::new(), |m| format!(" m={m}"));
                let _ = writeln!(out, "{} {} n={}{k}{m}: {}", r.theorem, r.shape, r.n, verdict(r.verdict));
                let _ = writeln!(out, "  P(q) = {}", r.polynomial);
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "  d={:<3} s={:<3} fix={:<10} eval={:<12} {}",
                        row.d,
                        row.s,
                        row.fix,
                        row.eval.to_string(),
                        if row.matches { "ok" } else { "MISMATCH" }
                    );
                }
            }
            Report::ProductFormula(r) => {
                let _ = writeln!(out, "product-formula {} k={}: {}", r.shape, r.k, verdict(r.matches));
                let _ = writeln!(out, "  enumerated = {}", r.enumerated);
                let _ = writeln!(out, "  product    = {}", r.product);
            }
            Report::Content(r) => {
                let _ = writeln!(
                    out,
                    "content-lemma {} s={}: {} (tilings={} residues={:?} uniform={} strips_distinct={})",
                    r.shape,
                    r.s,
                    verdict(r.verdict),
                    r.bst_count,
                    r.residues,
                    r.uniform,
                    r.strips_distinct
                );
            }
            Report::Mn(r) => {
                let eval = r.evaluation.map_or("non-integer".to_string(), |v| v.to_string());
                let sign = r.sign.map_or("-".to_string(), |s| s.to_string());
                let _ = writeln!(
                    out,
                    "mn {} d={}: {} (eval={eval} sign={sign} tilings={})",
                    r.shape,
                    r.d,
                    verdict(r.matches),
                    r.bst_count
                );
            }
            Report::TheoremB(r) => {
                let _ = writeln!(
                    out,
                    "theorem-b {} m={} k={}: {} (condition={} realizable={})",
                    r.shape,
                    r.m,
                    r.k,
                    verdict(r.verdict),
                    if r.condition_holds { "holds" } else { "FAILED" },
                    r.realizable
                );
                for e in &r.evaluations {
                    let _ = writeln!(out, "  d={:<3} s={:<3} f(xi^d)^m={}", e.d, e.s, e.eval);
                }
                match &r.profile {
                    Some(p) => {
                        let _ = writeln!(out, "  orbits {:?}", p.orbits);
                    }
                    None => out.push_str("  no orbit profile\n"),
                }
            }
        }
    }

    fn csv_header(&self) -> &'static str {
        match self {
            Report::Csp(_) => "theorem,shape,n,k,m,d,s,fix,eval,match",
            Report::ProductFormula(_) => "shape,n,k,enumerated,product,match",
            Report::Content(_) => "shape,n,s,bst_count,residues,uniform,strips_distinct,verdict",
            Report::Mn(_) => "shape,n,d,evaluation,bst_count,sign,sign_constant,match",
            Report::TheoremB(_) => "shape,n,k,m,condition_holds,realizable,verdict",
        }
    }

    fn csv(&self, out: &mut String) {
        let opt = |v: Option<usize>| v.map_or(String::new(), |v| v.to_string());
        match self {
            Report::Csp(r) => {
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "{},\"{}\",{},{},{},{},{},{},{},{}",
                        r.theorem,
                        r.shape,
                        r.n,
                        opt(r.k),
                        opt(r.m),
                        row.d,
                        row.s,
                        row.fix,
                        row.eval,
                        row.matches
                    );
                }
            }
            Report::ProductFormula(r) => {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},\"{}\",\"{}\",{}",
                    r.shape, r.n, r.k, r.enumerated, r.product, r.matches
                );
            }
            Report::Content(r) => {
                let residues: Vec<String> = r.residues.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{},{}",
                    r.shape,
                    r.n,
                    r.s,
                    r.bst_count,
                    residues.join(" "),
                    r.uniform,
                    r.strips_distinct,
                    r.verdict
                );
            }
            Report::Mn(r) => {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{},{}",
                    r.shape,
                    r.n,
                    r.d,
                    r.evaluation.map_or("non-integer".into(), |v| v.to_string()),
                    r.bst_count,
                    r.sign.map_or(String::new(), |s| s.to_string()),
                    r.sign_constant,
                    r.matches
                );
            }
            Report::TheoremB(r) => {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},{},{},{},{}",
                    r.shape, r.n, r.k, r.m, r.condition_holds, r.realizable, r.verdict
                );
            }
        }
    }
}

/// Renders a batch of reports. A single report is a JSON object, several an array.
pub fn render_reports(reports: &[Report], format: Format) -> anyhow::Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in reports {
                r.text(&mut out);
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(out, "{} checks, {failed} failed", reports.len());
        }
        Format::Json => {
            out = if let [single] = reports {
                serde_json::to_string(single)?
            } else {
                serde_json::to_string(reports)?
            };
            out.push('\n');
        }
        Format::Csv => {
            if let Some(first) = reports.first() {
                out.push_str(first.csv_header());
                out.push('\n');
            }
            for r in reports {
                r.csv(&mut out);
            }
        }
    }
    Ok(out)
}

/// Writes to stdout, or atomically to `path` through a sibling temp file.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
        Some(path) => {
            let name = path
                .file_name()
                .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
            let mut tmp_name = name.to_os_string();
            tmp_name.push(format!(".tmp{}", std::process::id()));
            let tmp = path.with_file_name(tmp_name);
            fs::write(&tmp, text)?;
            fs::rename(&tmp, path).inspect_err(|_| {
                let _ = fs::remove_file(&tmp);
            })
        }
    }
}
