//! The `verify paper` reproduction suites.
//!
//! Each suite produces a [`RunReport`]: one record per check, the bounds
//! the bounded checks ran to, and the wall time. Records are emitted in a
//! fixed order, so two runs differ only in the wall time.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rpgraph::conditions::{
    mod_cut_check, mod_cut_scan, toughness_bound_check, tree_is_rp, TRIPODE_TABLE,
};
use rpgraph::constructions::{build_balloon, build_corollary_family, build_tripode};
use rpgraph::partition::{is_rp, SolverBudget};
use rpgraph::semistar::SignatureSolver;
use rpgraph::{verify_certificate, Graph, SemistarEntries, Signature, VertexSet};

use crate::tables::{parse_paper_tables, parse_tripode_table, PaperTable, PaperTableRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Tables,
    Trees,
    Minimal,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Tables, Suite::Trees, Suite::Minimal, Suite::Bounds];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Trees => "trees",
            Suite::Minimal => "minimal",
            Suite::Bounds => "bounds",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Command that reproduces the check, shown for failures.
    pub repro: Option<String>,
}

impl CheckRecord {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            passed,
            detail: detail.into(),
            repro: None,
        }
    }

    fn repro(mut self, cmd: impl Into<String>) -> Self {
        self.repro = Some(cmd.into());
        self
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} | {}", self.name, self.detail)?;
        if let (false, Some(cmd)) = (self.passed, &self.repro) {
            write!(f, " | repro: {cmd}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    /// Ranges covered by the bounded checks.
    pub bounds: Vec<String>,
    pub wall: Duration,
}

impl RunReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Report text without the wall-time line.
    pub fn body(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        for b in &self.bounds {
            out.push_str("BOUND ");
            out.push_str(b);
            out.push('\n');
        }
        out.push_str(&format!(
            "SUMMARY suite={} checks={} failures={}\n",
            self.suite,
            self.checks.len(),
            self.failures().count()
        ));
        out
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body())?;
        writeln!(f, "WALL suite={} ms={}", self.suite, self.wall.as_millis())
    }
}

/// Inputs for the suites; the data files can be replaced for testing.
pub struct Harness {
    pub tables_text: String,
    pub tripode_text: String,
    pub budget: SolverBudget,
    solver: SignatureSolver,
}

impl Default for Harness {
    fn default() -> Self {
        Harness::new(
            crate::tables::PAPER_TABLES.to_string(),
            crate::tables::TRIPODE_TABLE.to_string(),
            SolverBudget::default(),
        )
    }
}

fn sig_cmd(s: &impl fmt::Display) -> String {
    format!("rpgraph semistar check \"{s}\"")
}

/// Entrywise sum of two positional entry lists.
fn add(a: &SemistarEntries, b: &SemistarEntries) -> Option<SemistarEntries> {
    (a.leaves.len() == b.leaves.len()).then(|| {
        SemistarEntries::new(
            a.center + b.center,
            a.leaves.iter().zip(&b.leaves).map(|(x, y)| x + y),
        )
    })
}

impl Harness {
    pub fn new(tables_text: String, tripode_text: String, budget: SolverBudget) -> Self {
        Harness {
            tables_text,
            tripode_text,
            budget,
            solver: SignatureSolver::new(),
        }
    }

    pub fn run(&mut self, suite: Suite) -> RunReport {
        let start = Instant::now();
        let mut checks = Vec::new();
        let mut bounds = Vec::new();
        match suite {
            Suite::Tables => self.tables(&mut checks, &mut bounds),
            Suite::Trees => self.trees(&mut checks, &mut bounds),
            Suite::Minimal => self.minimal(&mut checks, &mut bounds),
            Suite::Bounds => self.bounds(&mut checks, &mut bounds),
        }
        RunReport {
            suite: suite.name().to_string(),
            checks,
            bounds,
            wall: start.elapsed(),
        }
    }

    /// Row-by-row validation of parsed partition tables.
    pub fn verify_paper_tables(&mut self, tables: &[PaperTable]) -> Vec<CheckRecord> {
        let mut out = Vec::new();
        for t in tables {
            let half = t.parent.order() / 2;
            let seen: BTreeSet<u32> = t.rows.iter().map(|r| r.lambda).collect();
            let expected: BTreeSet<u32> = (1..=half).collect();
            let missing: Vec<u32> = expected.difference(&seen).copied().collect();
            let duplicate = seen.len() != t.rows.len();
            out.push(CheckRecord::new(
                format!("tables/{}/coverage", t.id),
                missing.is_empty() && !duplicate && seen.iter().all(|l| *l >= 1 && *l <= half),
                format!(
                    "parent {} has {} vertices, rows for lambda {:?}, missing {missing:?}",
                    t.parent,
                    t.parent.order(),
                    seen
                ),
            ));
            let parent_rp = self.solver.is_rp(&t.parent.canonical());
            out.push(
                CheckRecord::new(
                    format!("tables/{}/parent", t.id),
                    parent_rp,
                    format!(
                        "{} decided {}",
                        t.parent,
                        if parent_rp { "RP" } else { "not RP" }
                    ),
                )
                .repro(sig_cmd(&t.parent)),
            );
            for r in &t.rows {
                out.push(self.row(r));
                if let Some(printed) = &r.printed {
                    let sums = add(&r.part_a, printed).is_some_and(|s| s == r.parent);
                    out.push(CheckRecord::new(
                        format!("tables/{}/lambda={}/printed", r.table_id, r.lambda),
                        !sums,
                        format!(
                            "printed part B {printed} {} with {} to the parent; corrected to {}",
                            if sums { "adds up" } else { "does not add up" },
                            r.part_a,
                            r.part_b
                        ),
                    ));
                }
            }
        }
        out
    }

    fn row(&mut self, r: &PaperTableRow) -> CheckRecord {
        let name = format!("tables/{}/lambda={}", r.table_id, r.lambda);
        let mut problems = Vec::new();
        if r.part_a.leaves.len() != r.parent.leaves.len()
            || r.part_b.leaves.len() != r.parent.leaves.len()
        {
            problems.push("arity differs from parent".to_string());
        } else if add(&r.part_a, &r.part_b).as_ref() != Some(&r.parent) {
            problems.push(format!("{} + {} is not {}", r.part_a, r.part_b, r.parent));
        }
        if r.part_a.order() != r.lambda {
            problems.push(format!("part A has {} vertices", r.part_a.order()));
        }
        let mut repro = None;
        for part in [&r.part_a, &r.part_b] {
            if !self.solver.is_rp(&part.canonical()) {
                problems.push(format!("{part} is not RP"));
                repro.get_or_insert_with(|| sig_cmd(part));
            }
        }
        let detail = if problems.is_empty() {
            format!("{} + {} = {}, both RP", r.part_a, r.part_b, r.parent)
        } else {
            format!("line {}: {}", r.line, problems.join("; "))
        };
        let rec = CheckRecord::new(name, problems.is_empty(), detail);
        match repro {
            Some(cmd) => rec.repro(cmd),
            None => rec.repro(format!(
                "rpgraph verify paper --suite tables  # data line {}",
                r.line
            )),
        }
    }

    fn tables(&mut self, checks: &mut Vec<CheckRecord>, bounds: &mut Vec<String>) {
        match parse_paper_tables(&self.tables_text) {
            Ok(tables) => {
                let recs = self.verify_paper_tables(&tables);
                checks.extend(recs);
            }
            Err(e) => checks.push(CheckRecord::new("tables/data-file", false, e.to_string())),
        }
        let file = match parse_tripode_table(&self.tripode_text) {
            Ok(f) => f,
            Err(e) => {
                checks.push(CheckRecord::new("table1/data-file", false, e.to_string()));
                return;
            }
        };
        let transcribed = file.rows.len() == TRIPODE_TABLE.len()
            && file
                .rows
                .iter()
                .zip(TRIPODE_TABLE.iter())
                .all(|((b, rule), (b2, rule2))| b == b2 && rule.matches(rule2))
            && file.sporadic == [[2, 4, 6]];
        checks.push(CheckRecord::new(
            "table1/transcription",
            transcribed,
            "data file rows equal the built-in tripode table",
        ));
        let mut checked = 0;
        let mut mismatches = Vec::new();
        for a in 1..=30usize {
            for b in a..=30 {
                for c in b..=30 {
                    if a + b + c + 1 > 64 {
                        continue;
                    }
                    let g = build_tripode(a, b, c).expect("within the vertex cap");
                    let closed = tree_is_rp(&g).expect("a tripode is a tree").is_rp;
                    checked += 1;
                    if closed != file.contains(a, b, c) {
                        mismatches.push(format!("T({a},{b},{c})"));
                    }
                }
            }
        }
        checks.push(
            CheckRecord::new(
                "table1/tree_is_rp",
                mismatches.is_empty(),
                format!("{checked} tripodes, mismatches {mismatches:?}"),
            )
            .repro("rpgraph conditions treerp \"T(a,b,c)\""),
        );
        bounds.push(
            "table1 cross-check: tripodes with a <= b <= c <= 30 and at most 64 vertices".into(),
        );
    }

    fn trees(&mut self, checks: &mut Vec<CheckRecord>, bounds: &mut Vec<String>) {
        let max_n = 13.min(self.budget.rp_max_n);
        let mut checked = 0;
        let mut mismatches = Vec::new();
        for a in 1..max_n {
            for b in a..max_n {
                for c in b..max_n {
                    if a + b + c + 1 > max_n {
                        continue;
                    }
                    let g = build_tripode(a, b, c).expect("small tripode");
                    let generic = is_rp(&g, self.budget).map(|v| v.verdict);
                    let closed = tree_is_rp(&g).expect("tree").is_rp;
                    checked += 1;
                    if generic.as_ref().ok() != Some(&closed) {
                        mismatches.push(format!("T({a},{b},{c})"));
                    }
                }
            }
        }
        let first = mismatches.first().cloned();
        let mut rec = CheckRecord::new(
            "trees/tripodes",
            mismatches.is_empty(),
            format!("{checked} tripodes, generic solver vs closed form, mismatches {mismatches:?}"),
        );
        if let Some(m) = first {
            rec = rec.repro(format!("rpgraph check rp \"{m}\""));
        }
        checks.push(rec);
        bounds.push(format!("trees/tripodes: a <= b <= c, n <= {max_n}"));

        let mut checked = 0;
        let mut mismatches = Vec::new();
        for a in 1..=30u32 {
            for b in a..=30 {
                for c in b..=30 {
                    let sig = Signature::new(1, [a, b, c]);
                    checked += 1;
                    let closed =
                        rpgraph::conditions::tripode_is_rp(a as usize, b as usize, c as usize);
                    if self.solver.is_rp(&sig) != closed {
                        mismatches.push(sig.to_string());
                    }
                }
            }
        }
        let first = mismatches.first().cloned();
        let mut rec = CheckRecord::new(
            "trees/semistar-tripodes",
            mismatches.is_empty(),
            format!(
                "{checked} signatures K1(a,b,c) vs the tripode table, mismatches {mismatches:?}"
            ),
        );
        if let Some(m) = first {
            rec = rec.repro(sig_cmd(&m));
        }
        checks.push(rec);
        bounds.push("trees/semistar-tripodes: a <= b <= c <= 30".into());
    }

    fn minimal(&mut self, checks: &mut Vec<CheckRecord>, bounds: &mut Vec<String>) {
        for (center, k, bound, expected) in [
            (1u32, 3usize, 8u32, vec![Signature::new(1, [1, 1, 2])]),
            (
                2,
                5,
                8,
                vec![
                    Signature::new(2, [1, 1, 1, 2, 4]),
                    Signature::new(2, [1, 1, 2, 2, 3]),
                ],
            ),
        ] {
            let name = format!("minimal/({center},{k})");
            let cmd = format!("rpgraph semistar minimal {center} {k} --bound {bound}");
            match self.solver.enumerate_minimal(center, k, bound) {
                Ok(r) => {
                    let got: BTreeSet<&Signature> = r.minimal_signatures.iter().collect();
                    let want: BTreeSet<&Signature> = expected.iter().collect();
                    let list: Vec<String> =
                        r.minimal_signatures.iter().map(|s| s.to_string()).collect();
                    checks.push(
                        CheckRecord::new(
                            name,
                            got == want,
                            format!(
                                "found {list:?} with entries <= {bound}, box closed under domination {}, {} candidates, {} solved",
                                r.exhaustive_below_bound, r.candidates, r.solved
                            ),
                        )
                        .repro(cmd),
                    );
                }
                Err(e) => checks.push(CheckRecord::new(name, false, e.to_string()).repro(cmd)),
            }
            bounds.push(format!("minimal/({center},{k}): entries <= {bound}"));
        }

        let sig = Signature::new(3, [1, 1, 1, 2, 2, 3, 4, 6]);
        let rp = self.solver.is_rp(&sig);
        checks.push(
            CheckRecord::new(
                "minimal/K3-rp",
                rp,
                format!("{sig} decided {}", if rp { "RP" } else { "not RP" }),
            )
            .repro(sig_cmd(&sig)),
        );
        let cmd = format!("rpgraph semistar minimality \"{sig}\"");
        match self.solver.check_minimality(&sig) {
            Ok(m) => checks.push(
                CheckRecord::new(
                    "minimal/K3-minimal",
                    m.is_minimal && m.candidates <= 5040,
                    format!(
                        "{} dominated candidates, minimal {}, witness {}",
                        m.candidates,
                        m.is_minimal,
                        m.witness.map_or("none".to_string(), |w| w.to_string())
                    ),
                )
                .repro(cmd),
            ),
            Err(e) => {
                checks.push(CheckRecord::new("minimal/K3-minimal", false, e.to_string()).repro(cmd))
            }
        }
    }

    fn bounds(&mut self, checks: &mut Vec<CheckRecord>, bounds: &mut Vec<String>) {
        let failing: Vec<u32> = (0..=50u32)
            .filter(|&k| !self.solver.is_rp(&Signature::new(2, [1, 1, 2, 6, k])))
            .collect();
        checks.push(
            CheckRecord::new(
                "bounds/K2(1,1,2,6,k)",
                failing.is_empty(),
                format!("k = 0..=50, not RP for {failing:?}"),
            )
            .repro(sig_cmd(&format!(
                "K2(1,1,2,6,{})",
                failing.first().unwrap_or(&0)
            ))),
        );
        bounds.push("bounds/K2(1,1,2,6,k): 0 <= k <= 50".into());

        for (entries, size) in [
            (SemistarEntries::new(3, [1, 1, 1, 2, 2, 3, 4, 6]), 3usize),
            (SemistarEntries::new(2, [1, 1, 2, 3, 4]), 2),
        ] {
            let name = format!("bounds/components/{entries}");
            let rp = self.solver.is_rp(&entries.canonical());
            let graph = entries.realize().expect("fits");
            match toughness_bound_check(&graph, rp) {
                Ok(r) => {
                    let c = r.max_components[size];
                    let equality = c == 3 * size - 1;
                    checks.push(
                        CheckRecord::new(
                            name,
                            r.consistent && (!rp || equality),
                            format!(
                                "decided {}, consistent {}, max c at |S|={size} is {c} (3|S|-1 = {})",
                                if rp { "RP" } else { "not RP" },
                                r.consistent,
                                3 * size - 1
                            ),
                        )
                        .repro(format!("rpgraph toughness \"{entries}\"")),
                    );
                }
                Err(e) => checks.push(CheckRecord::new(name, false, e.to_string())),
            }
        }

        let budget = SolverBudget {
            rp_max_n: self.budget.rp_max_n.max(14),
            ..self.budget
        };
        for s in 1..=3usize {
            for j in 1..=2usize {
                let name = format!("bounds/H({s},{j})");
                let cmd = format!("rpgraph construct \"H({s},{j})\"");
                let h = match build_corollary_family(s, j) {
                    Ok(h) => h,
                    Err(e) => {
                        checks.push(CheckRecord::new(name, false, e.to_string()).repro(cmd));
                        continue;
                    }
                };
                let g = &h.result.graph;
                let c = g.components(&h.cut).map(|c| c.len()).unwrap_or(0);
                let cert_ok = h
                    .result
                    .certificate
                    .as_ref()
                    .is_some_and(|cert| verify_certificate(g, cert).valid);
                let mut detail = format!(
                    "n={}, |S|={}, c={c}, certificate {}",
                    g.n(),
                    h.cut.len(),
                    if cert_ok { "verifies" } else { "fails" }
                );
                let mut ok = h.cut.len() == s && c == 2 * s + 1 && cert_ok;
                if s <= 2 {
                    let generic = is_rp(g, budget).map(|v| v.verdict);
                    detail.push_str(&format!(", generic solver {generic:?}"));
                    ok &= generic == Ok(true);
                }
                checks.push(CheckRecord::new(name, ok, detail).repro(cmd));
            }
        }
        bounds.push("bounds/H(s,j): s in 1..=3, j in 1..=2; generic solver for s <= 2".into());

        let g = SemistarEntries::new(2, [1, 1, 1, 2, 2])
            .realize()
            .expect("fits");
        let cut = VertexSet::new(g.n(), [0, 1]).expect("in range");
        match mod_cut_check(&g, &cut, 3) {
            Ok(r) => checks.push(
                CheckRecord::new(
                    "bounds/modcut/K2(1,1,1,2,2)",
                    !r.satisfied && r.w_k == num_rational::Ratio::new(7, 2),
                    format!("S={}, k=3, w_3={}, bound={}", r.cut, r.w_k, r.bound),
                )
                .repro("rpgraph conditions modcut \"K2(1,1,1,2,2)\" --cut 0,1 --k 3"),
            ),
            Err(e) => checks.push(CheckRecord::new(
                "bounds/modcut/K2(1,1,1,2,2)",
                false,
                e.to_string(),
            )),
        }

        let mut rp_graphs: Vec<(String, Graph)> = Vec::new();
        for (paths, want) in [
            (vec![1usize, 1, 1, 1, 1, 1], false),
            (vec![1, 1, 2, 3, 2], true),
            (vec![1, 1, 2, 3, 4], true),
        ] {
            let label = format!(
                "B({})",
                paths
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let g = build_balloon(&paths).expect("small balloon");
            let got = is_rp(&g, self.budget).map(|v| v.verdict);
            if got == Ok(true) {
                rp_graphs.push((label.clone(), g));
            }
            checks.push(
                CheckRecord::new(
                    format!("bounds/balloon/{label}"),
                    got == Ok(want),
                    format!(
                        "expected {}, solver {got:?}",
                        if want { "RP" } else { "not RP" }
                    ),
                )
                .repro(format!("rpgraph check rp \"{label}\"")),
            );
        }

        for k in 0..=8u32 {
            let entries = SemistarEntries::new(2, [1, 1, 2, 6, k]);
            rp_graphs.push((entries.to_string(), entries.realize().expect("fits")));
        }
        let mut violations = Vec::new();
        for (label, g) in &rp_graphs {
            if let Ok(Some(v)) = mod_cut_scan(g, g.n()) {
                violations.push(format!("{label} at S={} k={}", v.cut, v.k));
            }
        }
        checks.push(CheckRecord::new(
            "bounds/modcut-necessity",
            violations.is_empty(),
            format!(
                "{} RP graphs scanned, violations {violations:?}",
                rp_graphs.len()
            ),
        ));
        bounds.push(
            "bounds/modcut-necessity: RP balloons and K2(1,1,2,6,k) for k <= 8, every cut".into(),
        );
    }
}

/// Runs the requested suites in order.
pub fn verify_paper(harness: &mut Harness, suites: &[Suite]) -> Vec<RunReport> {
    suites.iter().map(|&s| harness.run(s)).collect()
}
