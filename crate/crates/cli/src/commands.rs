use as_census::census::{
    aggregate, census_constructive_with, census_naive, check_kappa, verify_bounds, AggregateCensus,
    BoundRegime, CensusRecord, IrreducibleTable, Mode, NAIVE_PAIR_BUDGET,
};
use as_census::densities::{
    arithmetic_table, decimal, empirical_arithmetic, empirical_geometric, geometric_table, ConvergenceTable,
};
use as_census::field::{field_make, FieldSpec};
use as_census::partitions::{
    component_dimension, count_mp_total, enumerate_all, genus_and_prank, lambda_stats, Family, PartitionKappa,
};
use as_census::Error;
use serde_json::{json, Value};

use crate::args::{DensityCmd, FamilyArg, GlobalOpts, ModeArg};
use crate::output::{opt, Report};

/// Why a command did not succeed, ordered by how it maps to an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(Error),
    /// A consistency check failed after the output was produced.
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundViolation(m) => Failure::Inconsistent(format!("bound violation: {m}")),
            other => Failure::Core(other),
        }
    }
}

pub type Outcome = Result<(Report, Option<Failure>), Failure>;

pub fn partitions(p: Option<u64>, d: u32, family: FamilyArg) -> Outcome {
    let fam = match (family, p) {
        (FamilyArg::Theta, _) => Family::Theta,
        (FamilyArg::Omega, Some(p)) => Family::Omega(p),
        (FamilyArg::Mp, Some(p)) => Family::Mp(p),
        (_, None) => return Err(Failure::Usage("--p is required for the omega and mp families".into())),
    };
    if let Some(p) = p {
        field_make(p, 1)?;
    }
    let mut rep = Report::new(
        "partitions",
        &["family", "p", "d", "kappa", "r", "lambda1", "lambda2", "dimension", "g", "tau"],
    );
    let family_name = format!("{family:?}").to_lowercase();
    rep.param("family", family_name.clone());
    rep.param("p", opt(p));
    rep.param("d", d);
    let list = enumerate_all(fam, d + 2);
    for kappa in &list {
        let stats = lambda_stats(kappa);
        let (dim, g, tau) = match p {
            Some(p) => {
                let gp = genus_and_prank(p, kappa);
                (opt(component_dimension(p, kappa).ok()), opt(gp.genus), json!(gp.tau))
            }
            None => (Value::Null, Value::Null, Value::Null),
        };
        rep.push(vec![
            json!(family_name),
            opt(p),
            json!(d),
            json!(kappa.to_string()),
            json!(kappa.r()),
            json!(stats.lambda1),
            json!(stats.lambda2),
            dim,
            g,
            tau,
        ]);
    }
    rep.summary.insert("count".into(), json!(list.len()));
    if let (FamilyArg::Mp, Some(p), true) = (family, p, list.is_empty()) {
        rep.notes.push(format!(
            "M_{p}({}) = 0: the geometric density is undefined (p = 2 with odd d)",
            d + 2
        ));
    }
    Ok((rep, None))
}

pub fn density(cmd: &DensityCmd, opts: &GlobalOpts) -> Outcome {
    let prec = opts.precision;
    match *cmd {
        DensityCmd::Geometric { p, d } => {
            let t = geometric_table(p, d)?;
            let mut rep = Report::new(
                "density geometric",
                &["mode", "p", "d", "g", "r", "tau", "density", "reduced", "decimal"],
            );
            rep.param("p", p);
            rep.param("d", d);
            for row in &t.rows {
                let v = row.density.reduced();
                rep.push(vec![
                    json!("geometric"),
                    json!(p),
                    json!(d),
                    opt(t.genus),
                    json!(row.r),
                    opt(row.tau),
                    json!(row.density.to_string()),
                    json!(v.to_string()),
                    json!(decimal(&v, prec)),
                ]);
            }
            rep.summary.insert(format!("M_{p}({})", d + 2), json!(t.total.to_string()));
            Ok((rep, None))
        }
        DensityCmd::Arithmetic { d } => {
            let t = arithmetic_table(d)?;
            let speed = t.expected_speed.clone().expect("arithmetic tables carry a speed");
            let mut rep = Report::new(
                "density arithmetic",
                &["mode", "d", "r", "density", "reduced", "decimal", "expected_speed"],
            );
            rep.param("d", d);
            for row in &t.rows {
                let v = row.density.reduced();
                rep.push(vec![
                    json!("arithmetic"),
                    json!(d),
                    json!(row.r),
                    json!(row.density.to_string()),
                    json!(v.to_string()),
                    json!(decimal(&v, prec)),
                    json!(speed.to_string()),
                ]);
            }
            rep.summary.insert(format!("T({})", d + 2), json!(t.total.to_string()));
            rep.summary.insert("expected_speed".into(), json!(speed.to_string()));
            rep.summary.insert("expected_speed_reduced".into(), json!(speed.reduced().to_string()));
            rep.summary
                .insert("expected_speed_decimal".into(), json!(decimal(&speed.reduced(), prec)));
            Ok((rep, None))
        }
    }
}

pub fn converge(
    p: Option<u64>,
    d: u32,
    q_exponents: &[u32],
    primes: &[u64],
    r: Option<u32>,
    opts: &GlobalOpts,
) -> Outcome {
    let mut rep = Report::new(
        "converge",
        &[
            "mode", "p", "q", "d", "r", "g", "tau", "ratio_num", "ratio_den", "limit_num", "limit_den", "gap_decimal",
        ],
    );
    rep.param("d", d);
    rep.param("r", opt(r));
    let table: ConvergenceTable = match (p, q_exponents.is_empty(), primes.is_empty()) {
        (Some(p), false, true) => {
            let qs = q_exponents
                .iter()
                .map(|&k| field_make(p, k).map(|f| f.q()))
                .collect::<Result<Vec<_>, _>>()?;
            rep.param("p", p);
            rep.param("q", qs.clone());
            empirical_geometric(p, d, &qs, opts.budget)?
        }
        (None, true, false) => {
            rep.param("primes", primes.to_vec());
            empirical_arithmetic(d, primes, opts.budget)?
        }
        _ => {
            return Err(Failure::Usage(
                "give either --p with --q-exponents (geometric) or --primes (arithmetic)".into(),
            ))
        }
    };
    for row in table.rows.iter().filter(|row| r.map_or(true, |r| row.r == r)) {
        rep.push(vec![
            json!(row.mode.to_string()),
            json!(row.p),
            json!(row.q),
            json!(row.d),
            json!(row.r),
            opt(row.g),
            json!(row.tau),
            json!(row.ratio.num.to_string()),
            json!(row.ratio.den.to_string()),
            json!(row.limit.num.to_string()),
            json!(row.limit.den.to_string()),
            json!(decimal(&row.gap, opts.precision)),
        ]);
    }
    Ok((rep, None))
}

pub fn census(p: u64, n: u32, d: u32, kappa: Option<&str>, mode: ModeArg, opts: &GlobalOpts) -> Outcome {
    let field = field_make(p, n)?;
    let mut rep = Report::new(
        "census",
        &["q", "p", "d", "kappa", "count", "lower", "upper", "mode", "r", "tau", "bound_check"],
    );
    rep.param("p", p);
    rep.param("n", n);
    rep.param("q", field.q());
    rep.param("d", d);
    rep.param("kappa", opt(kappa));
    rep.param("mode", format!("{mode:?}").to_lowercase());

    let modes: &[Mode] = match mode {
        ModeArg::Constructive => &[Mode::Constructive],
        ModeArg::Naive => &[Mode::Naive],
        ModeArg::Both => &[Mode::Constructive, Mode::Naive],
    };
    let mut runs: Vec<Vec<CensusRecord>> = Vec::new();
    let mut aggregate_of_first: Option<AggregateCensus> = None;
    match kappa {
        Some(text) => {
            let kappa: PartitionKappa = text.parse()?;
            check_kappa(d, &kappa)?;
            for &m in modes {
                runs.push(vec![single(&field, &kappa, m, opts.budget)?]);
            }
        }
        None => {
            for &m in modes {
                let agg = aggregate(&field, d, m, opts.budget)?;
                runs.push(agg.records.clone());
                aggregate_of_first.get_or_insert(agg);
            }
        }
    }

    let mut failure = None;
    for rec in runs.iter().flatten() {
        let check = match verify_bounds(rec) {
            Ok(report) => match (report.regime, report.lower_checked) {
                (BoundRegime::Degenerate, _) => "ok (degenerate)",
                (_, true) => "ok",
                (_, false) => "ok (lower vacuous)",
            },
            Err(e) => {
                failure.get_or_insert(Failure::from(e));
                "violation"
            }
        };
        rep.push(vec![
            json!(rec.q),
            json!(rec.p),
            json!(rec.d),
            json!(rec.kappa.to_string()),
            json!(rec.count.to_string()),
            json!(rec.bounds.lower_label()),
            json!(rec.bounds.upper.to_string()),
            json!(rec.mode.to_string()),
            json!(rec.kappa.r()),
            json!(u64::from(rec.kappa.r()) * (p - 1)),
            json!(check),
        ]);
    }
    if let [a, b] = runs.as_slice() {
        for (x, y) in a.iter().zip(b) {
            if x.count != y.count {
                failure.get_or_insert(Failure::Inconsistent(format!(
                    "oracle mismatch at kappa={}: constructive {} vs naive {}",
                    x.kappa, x.count, y.count
                )));
            }
        }
    }

    if let Some(agg) = aggregate_of_first {
        for s in &agg.strata {
            rep.summary.insert(format!("S[tau={}]", s.tau), json!(s.count.to_string()));
        }
        rep.summary.insert("S_total".into(), json!(agg.total.to_string()));
        rep.summary.insert("AS_total".into(), json!(agg.total_as.to_string()));
        rep.notes
            .push("AS counts divide S by p - 1, one scaling orbit per cover".into());
        if count_mp_total(p, d + 2) == 0u32.into() {
            rep.notes.push(format!(
                "M_{p}({}) = 0: the geometric limit is undefined for p = 2 and odd d",
                d + 2
            ));
        }
    }
    Ok((rep, failure))
}

fn single(field: &FieldSpec, kappa: &PartitionKappa, mode: Mode, budget: u64) -> Result<CensusRecord, Error> {
    match mode {
        Mode::Constructive => {
            let max_degree = kappa.kappa().into_values().max().unwrap_or(0);
            let table = IrreducibleTable::build(field, max_degree as usize, budget)?;
            census_constructive_with(&table, kappa)
        }
        Mode::Naive => census_naive(field, kappa, NAIVE_PAIR_BUDGET),
    }
}
