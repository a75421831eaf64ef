use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use thetasg::oracle::{self, CrossCheck};
use thetasg::{semigroup, Params};

use crate::args::{
    Command, Format, GapsArgs, InfoArgs, MemberArgs, PresetArgs, PresetName, ReportOptions,
    TableArgs, TripleArgs, VerifyArgs,
};
use crate::batch;
use crate::report::{join, MembersBelow, Mode, Report};
use crate::table;
use crate::{CliError, EXIT_INVALID, EXIT_NEGATIVE, EXIT_OK};

/// Cartesian products larger than this are refused by `verify`.
const MAX_TRIPLES: u128 = 10_000_000;

pub struct Context<'a> {
    pub format: Format,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub highlight: bool,
}

impl Context<'_> {
    fn json<T: Serialize + ?Sized>(&mut self, value: &T) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *self.out, value)?;
        writeln!(self.out)?;
        Ok(())
    }
}

pub fn dispatch(command: &Command, ctx: &mut Context) -> Result<i32, CliError> {
    match command {
        Command::Info(args) => info(args, ctx),
        Command::Table(args) => table_cmd(args, ctx),
        Command::Member(args) => member(args, ctx),
        Command::Gaps(args) => gaps(args, ctx),
        Command::Preset(args) => preset(args, ctx),
        Command::Verify(args) => verify(args, ctx),
    }
}

fn params(t: &TripleArgs) -> Result<Params, CliError> {
    match (t.a, t.b, t.c) {
        (Some(a), Some(b), Some(c)) => Ok(Params::new(a, b, c)?),
        _ => Err(CliError::Usage("--a, --b and --c are all required".into())),
    }
}

fn build_report(p: &Params, opts: &ReportOptions) -> Result<Report, CliError> {
    let profile = semigroup::profile(p)?;
    let mut mode = Mode::ClosedForm;
    if opts.verify {
        let check = oracle::cross_check(p, opts.max_bound)?;
        if !check.agrees() {
            return Err(CliError::Lib(thetasg::Error::Inconsistent(describe(
                &check,
            ))));
        }
        mode = Mode::VerifiedAgainstOracle;
    }
    let mut report = Report::new(profile.clone(), mode);
    if opts.gaps {
        report.gaps = Some(semigroup::gaps(p, opts.max_frobenius)?);
    }
    if let Some(limit) = opts.limit {
        let values = table::members_below(&profile, limit, opts.max_frobenius)?;
        report.members = Some(MembersBelow { limit, values });
    }
    Ok(report)
}

fn describe(check: &CrossCheck) -> String {
    let parts: Vec<String> = check.mismatches.iter().map(ToString::to_string).collect();
    format!(
        "{} disagrees with the oracle: {}",
        check.params,
        parts.join("; ")
    )
}

fn emit_reports(reports: &[Report], single: bool, ctx: &mut Context) -> Result<(), CliError> {
    match ctx.format {
        Format::Json if single => ctx.json(&reports[0]),
        Format::Json => ctx.json(reports),
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(ctx.out)?;
                }
                write!(ctx.out, "{}", r.render_text())?;
            }
            Ok(())
        }
    }
}

fn info(args: &InfoArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let Some(path) = &args.input else {
        let report = build_report(&params(&args.triple)?, &args.report)?;
        emit_reports(&[report], true, ctx)?;
        return Ok(EXIT_OK);
    };
    let mut code = EXIT_OK;
    let mut reports = Vec::new();
    for row in batch::read_triples(path)? {
        let outcome = row
            .triple
            .map_err(CliError::Usage)
            .and_then(|(a, b, c)| Ok(Params::new(a, b, c)?))
            .and_then(|p| build_report(&p, &args.report));
        match outcome {
            Ok(r) => reports.push(r),
            Err(e) => {
                writeln!(ctx.err, "line {}: skipped: {e}", row.line)?;
                code = code.max(e.exit_code());
            }
        }
    }
    emit_reports(&reports, false, ctx)?;
    Ok(code)
}

fn table_cmd(args: &TableArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let p = params(&args.triple)?;
    let profile = semigroup::profile(&p)?;
    let limit = match args.limit {
        Some(l) => l,
        None => profile
            .conductor
            .checked_add(p.c())
            .ok_or(thetasg::Error::Overflow("default table limit"))?,
    };
    let t = table::build(&profile, limit, semigroup::DEFAULT_GAPS_CAP)?;
    match ctx.format {
        Format::Json => ctx.json(&t)?,
        Format::Text => write!(ctx.out, "{}", t.render(ctx.highlight))?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Verdict {
    n: u128,
    member: bool,
    l: u128,
    x_l: Option<u128>,
}

fn member(args: &MemberArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let p = params(&args.triple)?;
    let verdicts: Vec<Verdict> = args
        .n
        .iter()
        .map(|&n| {
            let m = semigroup::membership(&p, n);
            Verdict {
                n,
                member: m.member,
                l: m.class,
                x_l: m.apery,
            }
        })
        .collect();
    match ctx.format {
        Format::Json => ctx.json(&verdicts)?,
        Format::Text => {
            for v in &verdicts {
                let x_l = v
                    .x_l
                    .map_or_else(|| "beyond 128 bits".to_string(), |x| x.to_string());
                let verdict = if v.member { "in" } else { "out" };
                writeln!(ctx.out, "{} {verdict} (l = {}, x_l = {x_l})", v.n, v.l)?;
            }
        }
    }
    Ok(if verdicts.iter().all(|v| v.member) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

#[derive(Serialize)]
struct GapList {
    a: u128,
    b: u128,
    c: u128,
    frobenius: u128,
    genus: u128,
    gaps: Vec<u128>,
}

fn gaps(args: &GapsArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let p = params(&args.triple)?;
    let gaps = semigroup::gaps(&p, args.max_frobenius)?;
    let list = GapList {
        a: p.a(),
        b: p.b(),
        c: p.c(),
        frobenius: semigroup::frobenius(&p)?,
        genus: gaps.len() as u128,
        gaps,
    };
    match ctx.format {
        Format::Json => ctx.json(&list)?,
        Format::Text => writeln!(ctx.out, "{}", join(&list.gaps))?,
    }
    Ok(EXIT_OK)
}

/// Seed of the Thabit or Mersenne preset with index `n`.
pub fn preset_seed(name: PresetName, n: u32) -> Result<u128, CliError> {
    let overflow = || CliError::Lib(thetasg::Error::Overflow("preset seed"));
    let pow = 1u128
        .checked_shl(n)
        .filter(|_| n < 128)
        .ok_or_else(overflow)?;
    match name {
        PresetName::Thabit => {
            if n < 1 {
                return Err(CliError::Usage("thabit preset needs n >= 1".into()));
            }
            pow.checked_mul(3).map(|v| v - 1).ok_or_else(overflow)
        }
        PresetName::Mersenne => {
            if n < 2 {
                return Err(CliError::Usage(format!(
                    "mersenne preset needs n >= 2 (n = {n} gives c = {} < 2)",
                    pow - 1
                )));
            }
            Ok(pow - 1)
        }
    }
}

fn preset(args: &PresetArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let c = preset_seed(args.name, args.n)?;
    let p = Params::new(2, 1, c)?;
    let name = match args.name {
        PresetName::Thabit => "thabit",
        PresetName::Mersenne => "mersenne",
    };
    writeln!(ctx.err, "{name} n = {} is {p}", args.n)?;
    let report = build_report(&p, &args.report)?;
    emit_reports(&[report], true, ctx)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Default, Serialize)]
struct Summary {
    checked: usize,
    agreed: usize,
    disagreed: usize,
    skipped_invalid: usize,
    errors: usize,
    first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Serialize)]
struct Counterexample {
    a: u128,
    b: u128,
    c: u128,
    mismatches: Vec<MismatchOut>,
}

#[derive(Debug, Serialize)]
struct MismatchOut {
    quantity: &'static str,
    closed_form: String,
    oracle: String,
}

fn triples_from_ranges(args: &VerifyArgs) -> Result<Vec<(u128, u128, u128)>, CliError> {
    let (Some(a), Some(b), Some(c)) = (args.a, args.b, args.c) else {
        return Err(CliError::Usage(
            "verify needs --a, --b and --c, or --input".into(),
        ));
    };
    let len = |r: crate::args::Range| r.hi - r.lo + 1;
    let total = len(a)
        .checked_mul(len(b))
        .and_then(|v| v.checked_mul(len(c)))
        .filter(|&v| v <= MAX_TRIPLES)
        .ok_or_else(|| CliError::Usage(format!("more than {MAX_TRIPLES} triples requested")))?;
    let mut out = Vec::with_capacity(total as usize);
    for x in a.iter() {
        for y in b.iter() {
            for z in c.iter() {
                out.push((x, y, z));
            }
        }
    }
    Ok(out)
}

fn verify(args: &VerifyArgs, ctx: &mut Context) -> Result<i32, CliError> {
    let mut code = EXIT_OK;
    let mut summary = Summary::default();
    let triples = match &args.input {
        None => triples_from_ranges(args)?,
        Some(path) => {
            let mut out = Vec::new();
            for row in batch::read_triples(path)? {
                match row.triple {
                    Ok(t) => out.push(t),
                    Err(e) => {
                        writeln!(ctx.err, "line {}: skipped: {e}", row.line)?;
                        summary.skipped_invalid += 1;
                        code = EXIT_INVALID;
                    }
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        }
    };

    let mut valid = Vec::new();
    for &(a, b, c) in &triples {
        match Params::new(a, b, c) {
            Ok(p) => valid.push(p),
            Err(e) => {
                summary.skipped_invalid += 1;
                if args.input.is_some() {
                    writeln!(ctx.err, "skipped ({a}, {b}, {c}): {e}")?;
                    code = EXIT_INVALID;
                }
            }
        }
    }

    let results: Vec<(Params, thetasg::Result<CrossCheck>)> = valid
        .par_iter()
        .map(|p| (*p, oracle::cross_check(p, args.max_bound)))
        .collect();

    let mut error_code = EXIT_OK;
    for (p, result) in results {
        match result {
            Ok(check) => {
                summary.checked += 1;
                if check.agrees() {
                    summary.agreed += 1;
                } else {
                    summary.disagreed += 1;
                    if summary.first_counterexample.is_none() {
                        summary.first_counterexample = Some(Counterexample {
                            a: p.a(),
                            b: p.b(),
                            c: p.c(),
                            mismatches: check
                                .mismatches
                                .into_iter()
                                .map(|m| MismatchOut {
                                    quantity: m.quantity,
                                    closed_form: m.closed_form,
                                    oracle: m.oracle,
                                })
                                .collect(),
                        });
                    }
                }
            }
            Err(e) => {
                summary.errors += 1;
                writeln!(ctx.err, "{p}: {e}")?;
                error_code = error_code.max(CliError::Lib(e).exit_code());
            }
        }
    }

    match ctx.format {
        Format::Json => ctx.json(&summary)?,
        Format::Text => {
            writeln!(
                ctx.out,
                "checked {}, agreed {}, disagreed {}, skipped-invalid {}, errors {}",
                summary.checked,
                summary.agreed,
                summary.disagreed,
                summary.skipped_invalid,
                summary.errors
            )?;
            if let Some(cx) = &summary.first_counterexample {
                writeln!(
                    ctx.out,
                    "first counterexample: G_{{{},{}}}({})",
                    cx.a, cx.b, cx.c
                )?;
                for m in &cx.mismatches {
                    writeln!(
                        ctx.out,
                        "  {}: closed form {} vs oracle {}",
                        m.quantity, m.closed_form, m.oracle
                    )?;
                }
            }
        }
    }

    if summary.disagreed > 0 {
        return Ok(EXIT_NEGATIVE);
    }
    if summary.checked == 0 && summary.errors == 0 {
        writeln!(ctx.err, "no valid triple to check")?;
        return Ok(EXIT_INVALID);
    }
    Ok(code.max(error_code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_seeds() {
        assert_eq!(preset_seed(PresetName::Thabit, 1).unwrap(), 5);
        assert_eq!(preset_seed(PresetName::Thabit, 2).unwrap(), 11);
        assert_eq!(preset_seed(PresetName::Mersenne, 3).unwrap(), 7);
        assert_eq!(
            preset_seed(PresetName::Mersenne, 127).unwrap(),
            (1u128 << 127) - 1
        );
        assert_eq!(
            preset_seed(PresetName::Thabit, 126).unwrap(),
            3 * (1u128 << 126) - 1
        );
        assert_eq!(
            preset_seed(PresetName::Thabit, 0).unwrap_err().exit_code(),
            2
        );
        assert_eq!(
            preset_seed(PresetName::Mersenne, 1)
                .unwrap_err()
                .exit_code(),
            2
        );
        assert_eq!(
            preset_seed(PresetName::Mersenne, 128)
                .unwrap_err()
                .exit_code(),
            3
        );
        assert_eq!(
            preset_seed(PresetName::Thabit, 127)
                .unwrap_err()
                .exit_code(),
            3
        );
    }
}
