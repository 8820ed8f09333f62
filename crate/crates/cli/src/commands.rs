//! Subcommand implementations. Each returns the rendered report body plus a
//! failure count; the caller maps failures to the exit status.

use std::path::Path;
use std::process::Command as ProcessCommand;
use std::time::Instant;


use pilab_core::algebra::{
    check_lie_superalgebra, derived_series, is_nilpotent, is_solvable, lower_central_series,
    Algebra,
};
use pilab_core::codim::{
    codimension, exp_estimate, graded_codim_total, graded_codimension, Budget, RankMethod,
};
use pilab_core::constructors::{build_p_tilde, build_s, s2_canonical};
use pilab_core::freepoly::fm_polynomial;
use pilab_core::symfun::{cocharacter, colength, graded_cocharacter, hook_dimension,
    rectangle_bound_check, Partition,
};
use pilab_core::witness::rectangle_witness_search;

use crate::checks;
use crate::format::AlgebraFile;
use crate::report::Table;

pub struct CommandOutput {
    pub body: String,
    pub failures: usize,
}

impl CommandOutput {
    fn ok(body: String) -> Self {
        CommandOutput { body, failures: 0 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MethodArg {
    Auto,
    Exact,
    Modular,
}

impl MethodArg {
    /// The documented default: exact elimination through degree 4, modular
    /// with the fixed prime set from degree 5 on.
    pub fn resolve(self, n: usize) -> RankMethod {
        match self {
            MethodArg::Exact => RankMethod::Exact,
            MethodArg::Modular => RankMethod::Modular,
            MethodArg::Auto => {
                if n >= 5 {
                    RankMethod::Modular
                } else {
                    RankMethod::Exact
                }
            }
        }
    }
}

pub fn resolve_algebra(source: &str, t: Option<usize>) -> Result<Algebra, String> {
    match source {
        "s2" => Ok(s2_canonical()),
        "s-t" => {
            let t = t.ok_or("builtin `s-t` needs --t")?;
            Ok(build_s(t).map_err(|e| e.to_string())?.algebra)
        }
        "p-tilde" => {
            let t = t.ok_or("builtin `p-tilde` needs --t")?;
            Ok(build_p_tilde(t).map_err(|e| e.to_string())?.algebra)
        }
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read `{path}`: {e}"))?;
            let doc = AlgebraFile::from_json_str(&text).map_err(|e| e.to_string())?;
            doc.into_algebra().map_err(|e| e.to_string())
        }
    }
}

pub fn budget_from(max_rows: Option<usize>, max_cols: Option<usize>) -> Budget {
    let mut budget = Budget::default();
    if let Some(r) = max_rows {
        budget.max_rows = r;
    }
    if let Some(c) = max_cols {
        budget.max_cols = c;
    }
    budget
}

pub fn run_build(algebra: &str, t: Option<usize>) -> Result<CommandOutput, String> {
    let algebra = resolve_algebra(algebra, t)?;
    let doc = AlgebraFile::from_algebra(&algebra);
    Ok(CommandOutput::ok(doc.to_json_string()))
}

pub fn run_verify(source: &str, t: Option<usize>) -> Result<CommandOutput, String> {
    let algebra = resolve_algebra(source, t)?;
    let mut lines = Vec::new();
    let mut failures = 0usize;
    let mut record = |name: &str, ok: bool, detail: String| {
        lines.push(format!(
            "{} {name}: {detail}",
            if ok { "ok  " } else { "FAIL" }
        ));
        if !ok {
            failures += 1;
        }
    };

    if algebra.is_graded() {
        let evens = algebra
            .homogeneous_indices(pilab_core::algebra::Parity::Even)
            .len();
        record(
            "grading",
            true,
            format!("consistent (even {evens}, odd {})", algebra.dim() - evens),
        );
        match check_lie_superalgebra(&algebra) {
            Ok(report) if report.passed() => {
                record("superalgebra-axioms", true, "anticommutativity and Jacobi hold".into())
            }
            Ok(report) => record(
                "superalgebra-axioms",
                false,
                format!("first counterexample {:?}", report.failure),
            ),
            Err(e) => record("superalgebra-axioms", false, e.to_string()),
        }
    } else {
        record(
            "grading",
            true,
            "absent; superalgebra checks skipped".into(),
        );
    }

    let chain = derived_series(&algebra);
    let solvable = is_solvable(&algebra);
    record(
        "solvable",
        true,
        format!(
            "{} (derived chain dims {:?})",
            if solvable { "yes" } else { "no" },
            chain.iter().map(|s| s.dim()).collect::<Vec<_>>()
        ),
    );
    record(
        "nilpotent",
        true,
        if is_nilpotent(&algebra) { "yes" } else { "no" }.to_string(),
    );

    let is_family_builtin = source == "s2" || source == "s-t";
    if is_family_builtin {
        let t_actual = match source {
            "s2" => 2,
            _ => t.unwrap_or(0),
        };
        record(
            "dimension",
            algebra.dim() == t_actual * (t_actual + 1),
            format!("{} = t(t+1)", algebra.dim()),
        );
        record("solvability-required", solvable, "derived series reaches zero".into());
        let commutator = &derived_series(&algebra)[1];
        match lower_central_series(&algebra, commutator) {
            Ok(chain) => {
                let stable = chain.last().unwrap().dim();
                record(
                    "commutator-non-nilpotent",
                    stable > 0,
                    format!("lower central series of the commutator stabilizes at dim {stable}"),
                );
            }
            Err(e) => record("commutator-non-nilpotent", false, e.to_string()),
        }
    }
    if source == "s2" {
        match checks::canonical_match() {
            Ok(detail) => record("table-cross-check", true, detail),
            Err(detail) => record("table-cross-check", false, detail),
        }
    }

    let mut body = lines.join("\n");
    body.push('\n');
    Ok(CommandOutput { body, failures })
}

fn push_codim_row(table: &mut Table, report: &pilab_core::codim::CodimReport) {
    table.push(vec![
        report.n.to_string(),
        report
            .split
            .map(|(k, _)| k.to_string())
            .unwrap_or_else(|| "-".to_string()),
        report.value.to_string(),
        report.method.to_string(),
    ]);
}

pub fn run_codim(
    source: &str,
    t: Option<usize>,
    n: usize,
    method: MethodArg,
    budget: &Budget,
    json: bool,
) -> Result<CommandOutput, String> {
    let algebra = resolve_algebra(source, t)?;
    let started = Instant::now();
    let report =
        codimension(&algebra, n, method.resolve(n), budget).map_err(|e| e.to_string())?;
    eprintln!("# codim n={n}: {} ms", started.elapsed().as_millis());
    let mut table = Table::new(&["n", "k", "value", "method"]);
    push_codim_row(&mut table, &report);
    Ok(CommandOutput::ok(table.render(json)))
}

pub fn run_graded_codim(
    source: &str,
    t: Option<usize>,
    n: usize,
    k: Option<usize>,
    method: MethodArg,
    budget: &Budget,
    json: bool,
) -> Result<CommandOutput, String> {
    let algebra = resolve_algebra(source, t)?;
    let started = Instant::now();
    let mut table = Table::new(&["n", "k", "value", "method"]);
    match k {
        Some(k) => {
            if k > n {
                return Err(format!("--k {k} exceeds --n {n}"));
            }
            let report = graded_codimension(&algebra, k, n - k, method.resolve(n), budget)
                .map_err(|e| e.to_string())?;
            push_codim_row(&mut table, &report);
        }
        None => {
            let (total, reports) = graded_codim_total(&algebra, n, method.resolve(n), budget)
                .map_err(|e| e.to_string())?;
            let method_label = reports
                .first()
                .map(|r| r.method.to_string())
                .unwrap_or_default();
            for report in &reports {
                push_codim_row(&mut table, report);
            }
            table.push(vec![
                n.to_string(),
                "total".to_string(),
                total.to_string(),
                method_label,
            ]);
        }
    }
    eprintln!("# graded-codim n={n}: {} ms", started.elapsed().as_millis());
    Ok(CommandOutput::ok(table.render(json)))
}

/// Cocharacters run the exact trace machinery; the documented budget keeps
/// the default within degree 5 and `--slow` lifts it to 6.
pub fn run_cocharacter(
    source: &str,
    t: Option<usize>,
    n: usize,
    k: Option<usize>,
    budget: &Budget,
    slow: bool,
    json: bool,
) -> Result<CommandOutput, String> {
    let cap = if slow { 6 } else { 5 };
    if n > cap {
        return Err(format!(
            "cocharacter degree {n} exceeds the budget ({cap}); pass --slow to lift it to 6"
        ));
    }
    let algebra = resolve_algebra(source, t)?;
    let started = Instant::now();
    let mut table = Table::new(&["n", "lambda", "multiplicity", "dimension"]);
    match k {
        None => {
            let report = cocharacter(&algebra, n, budget).map_err(|e| e.to_string())?;
            for e in &report.entries {
                table.push(vec![
                    n.to_string(),
                    e.lambda.to_string(),
                    e.multiplicity.to_string(),
                    e.dimension.to_string(),
                ]);
            }
        }
        Some(k) => {
            if k > n {
                return Err(format!("--k {k} exceeds --n {n}"));
            }
            let report =
                graded_cocharacter(&algebra, k, n - k, budget).map_err(|e| e.to_string())?;
            for e in &report.entries {
                table.push(vec![
                    n.to_string(),
                    format!("{}:{}", e.lambda, e.mu),
                    e.multiplicity.to_string(),
                    e.dimension_product.to_string(),
                ]);
            }
        }
    }
    eprintln!("# cocharacter n={n}: {} ms", started.elapsed().as_millis());
    Ok(CommandOutput::ok(table.render(json)))
}

pub fn run_colength(
    source: &str,
    t: Option<usize>,
    n: usize,
    budget: &Budget,
    slow: bool,
    json: bool,
) -> Result<CommandOutput, String> {
    let cap = if slow { 6 } else { 5 };
    if n > cap {
        return Err(format!(
            "colength degree {n} exceeds the budget ({cap}); pass --slow to lift it to 6"
        ));
    }
    let algebra = resolve_algebra(source, t)?;
    let report = cocharacter(&algebra, n, budget).map_err(|e| e.to_string())?;
    let col = colength(&report, algebra.dim()).map_err(|e| e.to_string())?;
    let mut table = Table::new(&["n", "colength", "bound"]);
    table.push(vec![
        n.to_string(),
        col.colength.to_string(),
        col.bound.to_string(),
    ]);
    Ok(CommandOutput::ok(table.render(json)))
}

pub fn run_hook(
    lambda: Option<Vec<usize>>,
    m: Option<usize>,
    json: bool,
) -> Result<CommandOutput, String> {
    match (lambda, m) {
        (Some(parts), None) => {
            let shape =
                Partition::new(parts).ok_or("parts must be weakly decreasing and positive")?;
            let mut table = Table::new(&["lambda", "dimension"]);
            table.push(vec![shape.to_string(), hook_dimension(&shape).to_string()]);
            Ok(CommandOutput::ok(table.render(json)))
        }
        (None, Some(m)) => {
            if m == 0 {
                return Err("--m must be at least 1".into());
            }
            let check = rectangle_bound_check(m);
            let mut table = Table::new(&["m", "lambda", "dimension", "lower_bound", "holds"]);
            table.push(vec![
                m.to_string(),
                Partition::rectangle(2 * m, 4).to_string(),
                check.dimension.to_string(),
                check.lower_bound.to_string(),
                check.holds.to_string(),
            ]);
            Ok(CommandOutput {
                body: table.render(json),
                failures: usize::from(!check.holds),
            })
        }
        _ => Err("pass exactly one of --lambda or --m".into()),
    }
}

pub fn run_fm(
    m: usize,
    eval: bool,
    pad: Option<usize>,
    expand: bool,
) -> Result<CommandOutput, String> {
    let fm = fm_polynomial(m).map_err(|e| e.to_string())?;
    let mut lines = vec![format!(
        "blocks: {m}; degree: {}; alternating sets: {} of order 4; expanded monomials: {}",
        8 * m + 1,
        2 * m,
        fm.form.monomial_count()
    )];
    if expand {
        if m > 2 {
            return Err("--expand is limited to m <= 2 (the expansion explodes)".into());
        }
        let expanded = fm.form.expand().map_err(|e| e.to_string())?;
        lines.push(format!("expanded terms: {}", expanded.num_terms()));
    }
    if eval || pad.is_some() {
        let s2 = s2_canonical();
        match pad {
            None => {
                let value = fm.phi_value(&s2).map_err(|e| e.to_string())?;
                lines.push(format!("value: {}", value.display(&s2)));
            }
            Some(i) => {
                let value = pilab_core::freepoly::padded_phi_value(&s2, m, i)
                    .map_err(|e| e.to_string())?;
                lines.push(format!(
                    "padded value ({i} right multiplications): {}",
                    value.display(&s2)
                ));
            }
        }
    }
    let mut body = lines.join("\n");
    body.push('\n');
    Ok(CommandOutput::ok(body))
}

pub fn run_symmetrizer_check(m: usize, slow: bool) -> Result<CommandOutput, String> {
    if !slow {
        return Err("the symmetrizer witness search runs only with --slow".into());
    }
    let s2 = s2_canonical();
    let started = Instant::now();
    let witness = rectangle_witness_search(&s2, m).map_err(|e| e.to_string())?;
    eprintln!(
        "# symmetrizer-check m={m}: {} ms",
        started.elapsed().as_millis()
    );
    match witness {
        None => Ok(CommandOutput {
            body: "no witness found among the candidate evaluations\n".into(),
            failures: 1,
        }),
        Some(w) => {
            let mut lines = vec![
                format!(
                    "witness tableau #{} of shape {}:",
                    w.tableau_index,
                    w.tableau.shape()
                ),
            ];
            for row in w.tableau.rows() {
                lines.push(format!(
                    "  {}",
                    row.iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
            lines.push(format!(
                "assignment: {}",
                w.assignment
                    .iter()
                    .map(|(v, b)| format!("{v}->{b}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            lines.push(format!("value: {}", w.value.display(&s2)));
            lines.push(format!(
                "certified: degree-{} codimension >= {}",
                w.degree, w.certified_bound
            ));
            let mut body = lines.join("\n");
            body.push('\n');
            Ok(CommandOutput::ok(body))
        }
    }
}

pub fn run_exp_estimate(
    source: &str,
    t: Option<usize>,
    n_max: usize,
    graded: bool,
    method: MethodArg,
    budget: &Budget,
    json: bool,
) -> Result<CommandOutput, String> {
    let algebra = resolve_algebra(source, t)?;
    let started = Instant::now();
    let rows = exp_estimate(&algebra, n_max, graded, method.resolve(n_max), budget)
        .map_err(|e| e.to_string())?;
    eprintln!("# exp-estimate: {} ms", started.elapsed().as_millis());
    let mut table = Table::new(&["n", "value", "root"]);
    for row in rows {
        table.push(vec![row.n.to_string(), row.value.to_string(), row.root]);
    }
    Ok(CommandOutput::ok(table.render(json)))
}

/// Determinism check: the same reports must be byte-identical for 1, 4 and
/// 8 worker threads. Spawns the given binary.
pub fn determinism_check(exe: &Path) -> checks::CheckResult {
    let runs: [(&str, &[&str]); 3] = [
        ("codim", &["codim", "s2", "--n", "3", "--method", "exact"]),
        ("graded-codim", &["graded-codim", "s2", "--n", "2"]),
        ("cocharacter", &["cocharacter", "s2", "--n", "3"]),
    ];
    for (label, args) in runs {
        let mut outputs = Vec::new();
        for threads in ["1", "4", "8"] {
            let output = ProcessCommand::new(exe)
                .args(args.iter())
                .args(["--threads", threads])
                .output()
                .map_err(|e| format!("cannot spawn {}: {e}", exe.display()))?;
            if !output.status.success() {
                return Err(format!(
                    "{label} with --threads {threads} exited with {:?}",
                    output.status.code()
                ));
            }
            outputs.push(output.stdout);
        }
        if !(outputs[0] == outputs[1] && outputs[1] == outputs[2]) {
            return Err(format!("{label} reports differ across thread counts"));
        }
    }
    Ok("codim, graded-codim and cocharacter reports byte-identical for 1, 4, 8 threads".into())
}

/// Runs the full verification battery. `exe` is the binary used for the
/// determinism criterion; the slow witness search runs only when requested.
pub fn run_check_paper(slow: bool, exe: Option<&Path>) -> Result<CommandOutput, String> {
    type Check = Box<dyn Fn() -> checks::CheckResult>;
    let mut list: Vec<(&str, bool, Check)> = vec![
        ("product-table-cross-check", false, Box::new(checks::canonical_match)),
        ("superalgebra-axioms", false, Box::new(|| checks::axioms_for_family(5))),
        ("solvable-family-structure", false, Box::new(checks::structure_for_family)),
        ("short-chain-values", false, Box::new(checks::short_chain_values)),
        ("block-values-and-padding", false, Box::new(checks::block_values_and_padding)),
        ("symmetrizer-witness", true, Box::new(checks::witness_certificate)),
        ("rectangle-hook-bound", false, Box::new(checks::rectangle_bounds)),
        ("codimension-sequence", false, Box::new(checks::codimension_sequence)),
        ("cocharacter-consistency", false, Box::new(checks::cocharacter_consistency)),
        ("graded-suite", false, Box::new(checks::graded_suite)),
        ("representation-selftests", false, Box::new(checks::representation_selftests)),
    ];
    if let Some(exe) = exe {
        let exe = exe.to_path_buf();
        list.push((
            "report-determinism",
            false,
            Box::new(move || determinism_check(&exe)),
        ));
    }
    let mut lines = Vec::new();
    let mut failures = 0usize;
    for (name, is_slow, check) in list {
        if is_slow && !slow {
            lines.push(format!("skip {name}: rerun with --slow"));
            continue;
        }
        let started = Instant::now();
        match check() {
            Ok(detail) => lines.push(format!(
                "ok   {name}: {detail} ({} ms)",
                started.elapsed().as_millis()
            )),
            Err(detail) => {
                failures += 1;
                lines.push(format!(
                    "FAIL {name}: {detail} ({} ms)",
                    started.elapsed().as_millis()
                ));
            }
        }
    }
    lines.push(if failures == 0 {
        "all checks passed".to_string()
    } else {
        format!("{failures} check(s) failed")
    });
    let mut body = lines.join("\n");
    body.push('\n');
    Ok(CommandOutput { body, failures })
}
