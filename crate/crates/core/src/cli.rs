//! Command-line front end. Exit codes: 0 success, 1 verification mismatch
//! or no closed form, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::compositions::{parse_parts, Composition, PseudoComposition, RibbonIndex};
use crate::coxeter::{
    builtin_diagram, descent_class_multiset, format_multiset, residue_histogram, ribbon_general,
};
use crate::cvec::{cvec, macdonald_mp, DimensionPVector, Method};
use crate::golden::{write_csv, GoldenRecord};
use crate::ribbon::{is_degenerate_d, ribbon_a, ribbon_b, ribbon_d, ribbon_mod_p};
use crate::verify::{self, Suite};
use crate::{Error, Family, Prime};

#[derive(Debug, Parser)]
#[command(name = "ribbonmod", version, about = "Ribbon numbers of finite Coxeter groups and their residues mod p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size of one descent class of type A, B or D.
    Ribbon(RibbonArgs),
    /// Count descent classes by size mod p.
    Cvec(CvecArgs),
    /// Descent classes of a named Coxeter group.
    Coxeter(CoxeterArgs),
    /// Run the built-in consistency and reference checks.
    Verify(VerifyArgs),
    /// Number of symmetric-group irreducibles of degree prime to p.
    Macdonald(MacdonaldArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct RibbonArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Parts, e.g. `2,2` (type A) or `0,3` (types B and D).
    #[arg(long)]
    pub alpha: String,
    /// Reduce modulo this prime.
    #[arg(long = "mod")]
    pub modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CvecArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoxeterArgs {
    /// `A5`, `B4`, `D6`, `E7`, `F4`, `H3`, `I2:9`, ...
    #[arg(long)]
    pub group: String,
    /// Comma-separated generator indices.
    #[arg(long)]
    pub subset: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    /// Also check a CSV file in the `family,p,n,residue,count` schema.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MacdonaldArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: message for stderr and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Runs one parsed command, writing results to `out` and notes to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Ribbon(a) => cmd_ribbon(a, out, err),
        Command::Cvec(a) => cmd_cvec(a, out, err),
        Command::Coxeter(a) => cmd_coxeter(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Macdonald(a) => cmd_macdonald(a, out),
    }
}

fn strings(values: &[BigUint]) -> Vec<String> {
    values.iter().map(BigUint::to_string).collect()
}

fn writeln_json(out: &mut dyn Write, v: &Value) -> CmdResult {
    writeln!(out, "{v}")?;
    Ok(())
}

fn cmd_ribbon(a: &RibbonArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let parts = parse_parts(&a.alpha)?;
    let modulus = a.modulus.map(Prime::new).transpose()?;
    let (set, exact) = match a.family {
        Family::A => {
            let alpha = Composition::from_parts(&parts)?;
            (alpha.descent_set(), modulus.is_none().then(|| ribbon_a(&alpha)))
        }
        Family::B | Family::D => {
            let alpha = PseudoComposition::from_parts(&parts)?;
            let exact = match (modulus, a.family) {
                (Some(_), _) => None,
                (None, Family::B) => Some(ribbon_b(&alpha)),
                (None, _) => Some(ribbon_d(&alpha)?),
            };
            (alpha.descent_set(), exact)
        }
    };
    let degenerate = a.family == Family::D && is_degenerate_d(set.n());
    if degenerate {
        writeln!(err, "note: n = {} is not a Coxeter group of type D", set.n())?;
    }
    let value = match (exact, modulus) {
        (Some(v), _) => v.to_string(),
        (None, Some(p)) => ribbon_mod_p(a.family, &set, p)?.to_string(),
        (None, None) => unreachable!("exact value computed when no modulus"),
    };
    match a.format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => {
            let mut v = json!({ "family": a.family.letter(), "alpha": parts, "value": value });
            if let Some(p) = modulus {
                v["mod"] = json!(p.get());
            }
            if degenerate {
                v["degenerate"] = json!(true);
            }
            writeln_json(out, &v)?;
        }
        Format::Csv => {
            writeln!(out, "family,alpha,value")?;
            writeln!(out, "{},\"{}\",{value}", a.family, a.alpha.trim())?;
        }
    }
    Ok(())
}

fn vector_record(v: &DimensionPVector) -> GoldenRecord {
    GoldenRecord {
        group: v.family.letter().to_string(),
        p: v.p.get(),
        n: Some(v.n),
        counts: v.counts.clone(),
    }
}

fn cmd_cvec(a: &CvecArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let p = Prime::new(a.p)?;
    let v = match cvec(a.family, a.n, p, a.method) {
        Ok(v) => v,
        Err(e) if a.method == Method::Closed => return Err(Failure::mismatch(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    if a.family == Family::D && a.n < 4 {
        writeln!(err, "note: n = {} is not a Coxeter group of type D", a.n)?;
    }
    match a.format {
        Format::Text => {
            writeln!(out, "{v}")?;
            writeln!(err, "method: {}", v.provenance)?;
        }
        Format::Json => writeln_json(
            out,
            &json!({
                "family": a.family.letter(),
                "n": a.n,
                "p": a.p,
                "method": v.provenance.method_name(),
                "vector": strings(&v.counts),
            }),
        )?,
        Format::Csv => write_csv(&[vector_record(&v)], &mut *out)?,
    }
    Ok(())
}

fn cmd_coxeter(a: &CoxeterArgs, out: &mut dyn Write) -> CmdResult {
    let g = builtin_diagram(&a.group)?;
    let label = g.name().unwrap_or(&a.group).to_string();
    if let Some(subset) = &a.subset {
        let gens: Vec<u32> = if subset.trim().is_empty() {
            Vec::new()
        } else {
            parse_parts(subset)?
                .into_iter()
                .map(|x| u32::try_from(x).map_err(|_| Error::InvalidInput(format!("bad generator {x}"))))
                .collect::<Result<_, _>>()?
        };
        let value = ribbon_general(&g, g.subset_mask(&gens)?)?;
        match a.format {
            Format::Text => writeln!(out, "{value}")?,
            Format::Json => writeln_json(
                out,
                &json!({ "group": label, "subset": gens, "value": value.to_string() }),
            )?,
            Format::Csv => {
                writeln!(out, "group,subset,value")?;
                let s: Vec<String> = gens.iter().map(u32::to_string).collect();
                writeln!(out, "{label},\"{}\",{value}", s.join(","))?;
            }
        }
        return Ok(());
    }
    if let Some(p) = a.p {
        let p = Prime::new(p)?;
        let counts: Vec<BigUint> = residue_histogram(&g, p)?
            .into_iter()
            .map(BigUint::from)
            .collect();
        match a.format {
            Format::Text => writeln!(out, "{}", crate::cvec::tuple_string(&counts))?,
            Format::Json => writeln_json(
                out,
                &json!({ "group": label, "p": p.get(), "vector": strings(&counts) }),
            )?,
            Format::Csv => write_csv(
                &[GoldenRecord {
                    group: label,
                    p: p.get(),
                    n: None,
                    counts,
                }],
                &mut *out,
            )?,
        }
        return Ok(());
    }
    let ms = descent_class_multiset(&g)?;
    match a.format {
        Format::Text => writeln!(out, "{}", format_multiset(&ms))?,
        Format::Json => {
            let classes: Vec<Value> = ms
                .iter()
                .map(|(v, k)| json!({ "size": v.to_string(), "multiplicity": k }))
                .collect();
            writeln_json(out, &json!({ "group": label, "classes": classes }))?;
        }
        Format::Csv => {
            writeln!(out, "size,multiplicity")?;
            for (v, k) in &ms {
                writeln!(out, "{v},{k}")?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut checks = verify::run(a.suite);
    if let Some(path) = &a.file {
        checks.push(verify::verify_csv_file(path)?);
    }
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    if failed > 0 {
        return Err(Failure::mismatch(format!("{failed} of {} checks failed", checks.len())));
    }
    writeln!(out, "all {} checks passed", checks.len())?;
    Ok(())
}

fn cmd_macdonald(a: &MacdonaldArgs, out: &mut dyn Write) -> CmdResult {
    let p = Prime::new(a.p)?;
    if a.n == 0 {
        return Err(Failure::usage("n must be positive"));
    }
    let value = macdonald_mp(a.n, p)?;
    match a.format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => writeln_json(
            out,
            &json!({ "n": a.n, "p": a.p, "value": value.to_string() }),
        )?,
        Format::Csv => {
            writeln!(out, "n,p,value")?;
            writeln!(out, "{},{},{value}", a.n, a.p)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Result<(), Failure>, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("ribbonmod").chain(args.iter().copied()))
            .expect("arguments parse");
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let res = execute(&cli, &mut out, &mut err);
        (
            res,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ribbon_examples() {
        assert_eq!(run(&["ribbon", "--family", "A", "--alpha", "2,2"]).1, "5\n");
        assert_eq!(run(&["ribbon", "--family", "B", "--alpha", "0,3"]).1, "7\n");
        assert_eq!(run(&["ribbon", "--family", "A", "--alpha", "2,2", "--mod", "3"]).1, "2\n");
        let (res, _, _) = run(&["ribbon", "--family", "A", "--alpha", "2,0,2"]);
        assert_eq!(res.unwrap_err().code, 2);
        let (_, _, err) = run(&["ribbon", "--family", "D", "--alpha", "1,2"]);
        assert!(err.contains("not a Coxeter group"));
    }

    #[test]
    fn cvec_examples() {
        assert_eq!(run(&["cvec", "--family", "A", "--n", "5", "--p", "3"]).1, "(6, 8, 2)\n");
        assert_eq!(run(&["cvec", "--family", "D", "--n", "4", "--p", "3"]).1, "(0, 8, 8)\n");
        assert_eq!(
            run(&["cvec", "--family", "B", "--n", "6", "--p", "5"]).1,
            "(0, 24, 8, 8, 24)\n"
        );
        let (res, _, _) = run(&["cvec", "--family", "A", "--n", "5", "--p", "4"]);
        assert_eq!(res.unwrap_err().code, 2);
        let (res, _, _) = run(&["cvec", "--family", "A", "--n", "13", "--p", "5", "--method", "closed"]);
        assert_eq!(res.unwrap_err().code, 1);
    }

    #[test]
    fn cvec_json_schema() {
        let (_, out, _) = run(&["cvec", "--family", "A", "--n", "5", "--p", "3", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vector"], json!(["6", "8", "2"]));
        assert_eq!(v["n"], json!(5));
        assert_eq!(v["family"], json!("A"));
        assert!(v["method"].is_string());
    }

    #[test]
    fn coxeter_examples() {
        assert_eq!(
            run(&["coxeter", "--group", "F4"]).1,
            "1^2, 23^4, 73^2, 95^4, 97^2, 169^2\n"
        );
        assert_eq!(run(&["coxeter", "--group", "E6", "--p", "2"]).1, "(32, 32)\n");
        assert_eq!(run(&["coxeter", "--group", "I2:6"]).1, "1^2, 5^2\n");
        assert_eq!(run(&["coxeter", "--group", "B3", "--subset", "0"]).1, "7\n");
        let (res, _, _) = run(&["coxeter", "--group", "Q7"]);
        assert_eq!(res.unwrap_err().code, 2);
    }

    #[test]
    fn macdonald_examples() {
        assert_eq!(run(&["macdonald", "--n", "4", "--p", "2"]).1, "4\n");
        assert_eq!(run(&["macdonald", "--n", "1", "--p", "3"]).1, "1\n");
        assert_eq!(run(&["macdonald", "--n", "5", "--p", "9"]).0.unwrap_err().code, 2);
    }
}
