use std::fmt::Write as _;
use std::fs;

use mono_core::betti::graded_betti;
use mono_core::mono::{self, char_scan, mono_upper, CharScanReport, MonoResult};
use mono_core::parse::parse_source_with_field;
use mono_core::{selftest, BettiTable, Error, FieldSpec, Ideal, MonomialIdeal, Polynomial};

use crate::args::{Command, Format, Source};

/// A failed run: the message for stderr and the process exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub const INPUT: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const DISAGREEMENT: i32 = 3;

    fn input(message: String) -> Self {
        Failure {
            code: Self::INPUT,
            message,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            e if e.is_input_error() => Self::INPUT,
            Error::Disagreement(_) => Self::DISAGREEMENT,
            _ => Self::PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(source: &Source) -> Result<String, Failure> {
    fs::read_to_string(&source.input)
        .map_err(|e| Failure::input(format!("{}: {e}", source.input.display())))
}

fn load(source: &Source, field: Option<FieldSpec>) -> Result<Ideal, Failure> {
    let file = parse_source_with_field(&read(source)?, field)?;
    file.ideal(&source.ideal).cloned().ok_or_else(|| {
        Failure::input(format!(
            "no ideal named `{}` in {}",
            source.ideal,
            source.input.display()
        ))
    })
}

pub fn run(command: &Command, format: Format) -> Outcome {
    match command {
        Command::Mono {
            source,
            field,
            method,
            ceiling,
            certify,
            no_cross_check,
        } => {
            let ideal = load(source, field.field)?;
            let mut result = mono::mono(&ideal, *method, ceiling.ceiling)?;
            if !no_cross_check && ideal.is_artinian() {
                let agreed = mono::mono_cross_checked(&ideal, ceiling.ceiling)?;
                if agreed != result.mono {
                    return Err(Error::Disagreement(format!(
                        "{method} gives {} but the other methods give {agreed}",
                        result.mono
                    ))
                    .into());
                }
            }
            if *certify {
                result = result.certify(&ideal)?;
                if !result.verify_certificate(&ideal) {
                    return Err(Error::Disagreement("certificate does not re-expand".into()).into());
                }
            }
            Ok(render_mono(&ideal, &result, None, format))
        }
        Command::Upper { source, field } => {
            let ideal = load(source, field.field)?;
            Ok(render_generators("Mono(I)", &mono_upper(&ideal), format))
        }
        Command::Betti {
            source,
            field,
            max_degree,
        } => {
            let ideal = load(source, field.field)?;
            let table = graded_betti(&ideal, *max_degree)?;
            Ok(match format {
                Format::Text => table.format_table(),
                Format::Records => table.to_records(),
            })
        }
        Command::Compare {
            source,
            field,
            max_degree,
        } => {
            let ideal = load(source, field.field)?;
            compare(&ideal, *max_degree, format)
        }
        Command::Witness {
            source,
            field,
            max_degree,
        } => {
            let ideal = load(source, field.field)?;
            let m = ideal.as_monomial_ideal().ok_or_else(|| {
                Failure::from(Error::Precondition(format!(
                    "`{}` is not generated by monomials",
                    source.ideal
                )))
            })?;
            witness(&m, *max_degree, format)
        }
        Command::Charscan { source, primes, qq } => {
            let report = char_scan(&read(source)?, &source.ideal, primes, *qq)?;
            Ok(render_scan(&report, format))
        }
        Command::Oracle {
            source,
            field,
            ceiling,
        } => {
            let ideal = load(source, field.field)?;
            let result = mono::mono_oracle(&ideal, ceiling.ceiling)?;
            Ok(render_mono(&ideal, &result, Some(ceiling.ceiling), format))
        }
        Command::Selftest { seed, instances } => {
            let report = selftest::run_with(*seed, *instances);
            if report.passed() {
                Ok(report.to_string())
            } else {
                Err(Failure {
                    code: Failure::DISAGREEMENT,
                    message: report.to_string(),
                })
            }
        }
    }
}

fn gens_of(m: &MonomialIdeal) -> Vec<String> {
    if m.is_zero() {
        vec!["0".into()]
    } else {
        m.display_gens()
    }
}

fn render_generators(title: &str, m: &MonomialIdeal, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "{title} over {}", m.ring().field());
            for g in gens_of(m) {
                let _ = writeln!(out, "  {g}");
            }
        }
        Format::Records => {
            for g in m.display_gens() {
                let _ = writeln!(out, "gen {g}");
            }
        }
    }
    out
}

fn render_mono(ideal: &Ideal, result: &MonoResult, ceiling: Option<u32>, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "method: {}", result.method);
            if let Some(c) = ceiling {
                let _ = writeln!(out, "degree ceiling: {c}");
            }
            out.push_str(&render_generators("mono(I)", &result.mono, format));
        }
        Format::Records => {
            let _ = writeln!(out, "method {}", result.method);
            let _ = writeln!(out, "field {}", result.field);
            out.push_str(&render_generators("mono(I)", &result.mono, format));
        }
    }
    if let Some(certs) = &result.certificate {
        let names = ideal.ring().var_names();
        if format == Format::Text {
            out.push_str("certificate:\n");
        }
        for c in certs {
            let u = c.monomial.display(names);
            let terms: Vec<(usize, &Polynomial)> =
                c.cofactors.iter().enumerate().filter(|(_, q)| !q.is_zero()).collect();
            match format {
                Format::Text => {
                    let sum: Vec<String> = terms
                        .iter()
                        .map(|(k, q)| format!("({q})*({})", ideal.gens()[*k]))
                        .collect();
                    let _ = writeln!(out, "  {u} = {}", sum.join(" + "));
                }
                Format::Records => {
                    for (k, q) in terms {
                        let _ = writeln!(out, "cert {u} {k} {q}");
                    }
                }
            }
        }
    }
    out
}

/// Two text blocks next to each other, each under its own label.
fn side_by_side(left: (&str, &str), right: (&str, &str)) -> String {
    let mut l: Vec<String> = vec![left.0.to_string()];
    l.extend(left.1.lines().map(str::to_string));
    let mut r: Vec<String> = vec![right.0.to_string()];
    r.extend(right.1.lines().map(str::to_string));
    let width = l.iter().map(|s| s.chars().count()).max().unwrap_or(0) + 4;
    let rows = l.len().max(r.len());
    let mut out = String::new();
    for k in 0..rows {
        let a = l.get(k).map_or("", String::as_str);
        let b = r.get(k).map_or("", String::as_str);
        let pad = width - a.chars().count();
        let line = format!("{a}{}{b}", " ".repeat(pad));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn degrees(t: &BettiTable) -> String {
    let d: Vec<String> = t.socle_degrees().iter().map(u32::to_string).collect();
    if d.is_empty() {
        "-".into()
    } else {
        d.join(" ")
    }
}

fn compare(ideal: &Ideal, max_degree: Option<u32>, format: Format) -> Outcome {
    let n = ideal.ring().nvars();
    let m = mono::mono_via_gb(ideal)?.mono;
    let ti = graded_betti(ideal, max_degree)?;
    let tm = graded_betti(&m.to_ideal(), max_degree)?;
    let reg_equal = ti.regularity() == tm.regularity();
    let top_holds = tm
        .entries()
        .filter(|((i, _), _)| *i == n)
        .all(|((i, j), _)| ti.get(i, j) > 0);
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "mono(I) = {m}");
            out.push('\n');
            out.push_str(&side_by_side(("R/I", &ti.format_table()), ("R/mono(I)", &tm.format_table())));
            out.push('\n');
            let _ = writeln!(out, "regularity: R/I {}, R/mono(I) {}", ti.regularity(), tm.regularity());
            let _ = writeln!(out, "level: R/I {}, R/mono(I) {}", yes(ti.is_level()), yes(tm.is_level()));
            let _ = writeln!(out, "socle degrees: R/I {}, R/mono(I) {}", degrees(&ti), degrees(&tm));
            let _ = writeln!(out, "regularity equal: {}", yes(reg_equal));
            let _ = writeln!(out, "top-Betti implication holds: {}", yes(top_holds));
        }
        Format::Records => {
            for g in m.display_gens() {
                let _ = writeln!(out, "gen {g}");
            }
            for (label, t) in [("I", &ti), ("mono", &tm)] {
                for ((i, j), b) in t.entries() {
                    let _ = writeln!(out, "betti {label} {i} {j} {b}");
                }
                let _ = writeln!(out, "regularity {label} {}", t.regularity());
                let _ = writeln!(out, "level {label} {}", yes(t.is_level()));
                for d in t.socle_degrees() {
                    let _ = writeln!(out, "socle {label} {d}");
                }
            }
            let _ = writeln!(out, "regularity_equal {}", yes(reg_equal));
            let _ = writeln!(out, "top_betti_implication {}", yes(top_holds));
        }
    }
    // both statements are theorems for Artinian graded input
    if ideal.is_artinian() && (!reg_equal || !top_holds) {
        return Err(Failure {
            code: Failure::DISAGREEMENT,
            message: out,
        });
    }
    Ok(out)
}

fn witness(m: &MonomialIdeal, max_degree: Option<u32>, format: Format) -> Outcome {
    if m.is_unit() {
        return Err(Error::Precondition("M is the unit ideal".into()).into());
    }
    let names = m.ring().var_names();
    let classes = m.equal_colon_witnesses(max_degree)?;
    let gorenstein = m.is_gorenstein()?;
    let socle = m.socle_monomials()?;
    let mut out = String::new();
    match format {
        Format::Text => {
            if classes.is_empty() {
                out.push_str("no witnesses\n");
            } else {
                out.push_str("equal-colon witnesses:\n");
                for c in &classes {
                    let members: Vec<String> = c.members.iter().map(|u| u.display(names).to_string()).collect();
                    let _ = writeln!(
                        out,
                        "  degree {}: {}  (M : u = {})",
                        c.degree,
                        members.join(", "),
                        c.colon
                    );
                }
            }
            let _ = writeln!(out, "Gorenstein: {}", yes(gorenstein));
            let graded = if classes.is_empty() { "none" } else { "exists" };
            let _ = writeln!(out, "graded non-monomial preimage: {graded}");
            if gorenstein {
                out.push_str("no non-monomial preimage exists\n");
            } else {
                let (u1, u2) = (socle[0].display(names), socle[1].display(names));
                let _ = writeln!(out, "non-monomial preimage exists: mono(M + ({u1} + {u2})) = M");
            }
        }
        Format::Records => {
            for (k, c) in classes.iter().enumerate() {
                for u in &c.members {
                    let _ = writeln!(out, "witness {k} {} {}", c.degree, u.display(names));
                }
            }
            let _ = writeln!(out, "gorenstein {}", yes(gorenstein));
            let _ = writeln!(out, "graded_preimage {}", yes(!classes.is_empty()));
            let _ = writeln!(out, "preimage {}", yes(!gorenstein));
        }
    }
    Ok(out)
}

fn render_scan(report: &CharScanReport, format: Format) -> String {
    let names = &report.var_names;
    let mut out = String::new();
    let diffs = report.differences();
    match format {
        Format::Text => {
            let width = report.rows.iter().map(|r| r.field.name().len()).max().unwrap_or(0);
            let _ = writeln!(out, "mono({}) by field", report.ideal_name);
            for row in &report.rows {
                let gens = gens_of(&row.result.mono).join(", ");
                let _ = writeln!(out, "  {:<width$}  {gens}", row.field.name());
            }
            if diffs.is_empty() {
                out.push_str("differences: none\n");
            } else {
                out.push_str("differences:\n");
                let fields = |fs: &[FieldSpec]| fs.iter().map(FieldSpec::name).collect::<Vec<_>>().join(", ");
                for d in &diffs {
                    let _ = writeln!(
                        out,
                        "  {}  in: {}  not in: {}",
                        d.monomial.display(names),
                        fields(&d.present_in),
                        fields(&d.absent_in)
                    );
                }
            }
        }
        Format::Records => {
            for row in &report.rows {
                for g in row.result.mono.display_gens() {
                    let _ = writeln!(out, "gen {} {g}", row.field);
                }
            }
            for d in &diffs {
                let u = d.monomial.display(names);
                for f in &d.present_in {
                    let _ = writeln!(out, "diff {u} {f} present");
                }
                for f in &d.absent_in {
                    let _ = writeln!(out, "diff {u} {f} absent");
                }
            }
        }
    }
    out
}
