//! Verification suites: each recomputes a family of known identities and
//! inequalities and reports one line per case.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::{
    closure, forcing_set_from_z_sequence, is_zero_forcing_set, k_forcing_number_with,
    min_permutable_blocks_with, propagation_time_with, z_sequence_from_forcing,
    zero_forcing_number_via_z_sequences, zero_forcing_number_with,
};
use crate::formulas::{predict, Invariant};
use crate::generators::{sierpinski, sierpinski_recursive, GraphExpr};
use crate::graph::Graph;
use crate::hypergraph::verify_reduction_claim_with;
use crate::invariants::{independence_number, k_domination_number, vertex_cover_number};
use crate::random::{sample_bipartite, sample_graphs, Acceptance, SamplerConfig};
use crate::sequence::{grundy_number_with, k_z_grundy_number_with, verify_sequence, SearchOptions, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Duality,
    Products,
    Sierpinski,
    Lattice,
    Factor2,
    AlphaBeta,
    Reduction,
    Ptime,
    Kz,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Duality,
        Suite::Products,
        Suite::Sierpinski,
        Suite::Lattice,
        Suite::Factor2,
        Suite::AlphaBeta,
        Suite::Reduction,
        Suite::Ptime,
        Suite::Kz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Products => "products",
            Suite::Sierpinski => "sierpinski",
            Suite::Lattice => "lattice",
            Suite::Factor2 => "factor2",
            Suite::AlphaBeta => "alpha-beta",
            Suite::Reduction => "reduction",
            Suite::Ptime => "ptime",
            Suite::Kz => "kz",
        }
    }

    /// Default sample count and largest order of random graphs.
    fn defaults(self) -> (usize, usize) {
        match self {
            Suite::Duality => (300, 7),
            Suite::Products => (6, 4),
            Suite::Reduction => (50, 4),
            Suite::Ptime | Suite::Kz => (100, 7),
            _ => (200, 7),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Input(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// `Small` drops the largest fixed cases; `Full` runs everything.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    Small,
    #[default]
    Full,
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Budget::Small),
            "full" => Ok(Budget::Full),
            _ => Err(Error::Input(format!("unknown budget {s:?}; expected small or full"))),
        }
    }
}

/// Largest fixed case `Budget::Small` keeps.
const SMALL_BUDGET_ORDER: usize = 16;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random sample count; `None` uses the suite default.
    pub samples: Option<usize>,
    /// Largest random order (part size for `reduction`); `None` uses the default.
    pub n_max: Option<usize>,
    pub budget: Budget,
    pub search: SearchOptions,
    /// Minimum zero forcing sets examined per propagation-time case.
    pub ptime_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 1,
            samples: None,
            n_max: None,
            budget: Budget::Full,
            search: SearchOptions::default(),
            ptime_budget: crate::forcing::DEFAULT_PROPAGATION_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
    pub sampler: Option<SamplerConfig>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

struct Cases(Vec<CaseResult>);

impl Cases {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(CaseResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn eq(&mut self, name: impl Into<String>, expected: usize, actual: usize) {
        self.push(name, expected == actual, format!("expected {expected}, got {actual}"));
    }

    /// Records an engine error as a failed case.
    fn run(&mut self, name: impl Into<String>, body: impl FnOnce(&mut Cases, &str) -> Result<()>) {
        let name = name.into();
        if let Err(e) = body(self, &name) {
            self.push(name, false, format!("error: {e}"));
        }
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let (def_samples, def_n) = suite.defaults();
    let samples = opts.samples.unwrap_or(def_samples);
    let n_max = opts.n_max.unwrap_or(def_n);
    let mut cases = Cases(Vec::new());
    let sampler = match suite {
        Suite::Duality => {
            let cfg = SamplerConfig::new(opts.seed, 3, n_max, Acceptance::Connected);
            duality(&mut cases, &sample_graphs(&cfg, samples)?, opts);
            Some(cfg)
        }
        Suite::Products => {
            products(&mut cases, opts, samples, n_max)?;
            None
        }
        Suite::Sierpinski => {
            sierpinski_suite(&mut cases, opts);
            None
        }
        Suite::Lattice | Suite::Factor2 | Suite::AlphaBeta => {
            let cfg = SamplerConfig::new(opts.seed, 2, n_max, Acceptance::NoIsolated);
            let graphs = sample_graphs(&cfg, samples)?;
            match suite {
                Suite::Lattice => lattice(&mut cases, &graphs, opts),
                Suite::Factor2 => factor2(&mut cases, &graphs, opts),
                _ => alpha_beta(&mut cases, &graphs, opts),
            }
            Some(cfg)
        }
        Suite::Reduction => {
            for (i, bg) in sample_bipartite(opts.seed, n_max, n_max, samples)?.iter().enumerate() {
                cases.run(format!("reduction #{i} {}", describe(bg.graph())), |c, name| {
                    let r = verify_reduction_claim_with(bg, &opts.search)?;
                    c.push(name, r.equal, format!("lhs {} rhs {} (rho_gr {})", r.lhs, r.rhs, r.grundy_cover));
                    Ok(())
                });
            }
            None
        }
        Suite::Ptime => {
            let cfg = SamplerConfig::new(opts.seed, 2, n_max, Acceptance::Connected);
            ptime(&mut cases, &sample_graphs(&cfg, samples)?, opts);
            Some(cfg)
        }
        Suite::Kz => {
            let mut last = None;
            for k in [1, 2] {
                let cfg = SamplerConfig::new(opts.seed + k as u64, k + 1, n_max.max(k + 1), Acceptance::MinDegree(k));
                kz(&mut cases, k, &sample_graphs(&cfg, samples)?, opts);
                last = Some(cfg);
            }
            last
        }
    };
    let cases = cases.0;
    let passed = cases.iter().filter(|c| c.pass).count();
    Ok(SuiteReport {
        suite,
        failed: cases.len() - passed,
        passed,
        cases,
        sampler,
    })
}

/// Connected named graphs used by several suites.
pub fn connected_fixtures() -> Vec<(String, Graph)> {
    let mut names: Vec<String> = Vec::new();
    names.extend((2..=6).map(|n| format!("path:{n}")));
    names.extend((3..=6).map(|n| format!("cyc:{n}")));
    names.extend((2..=5).map(|n| format!("K:{n}")));
    names.extend((1..=5).map(|n| format!("star:{n}")));
    names.extend((2..=4).map(|n| format!("glued:{n}")));
    names.extend(["Q:1", "Q:2", "Q:3", "sier:3,2", "sier:2,3", "cart(path:2,path:3)", "cart(cyc:3,path:2)"].map(String::from));
    names
        .into_iter()
        .map(|s| {
            let g = GraphExpr::parse(&s).and_then(|e| e.build()).expect("fixture expressions are valid");
            (s, g)
        })
        .collect()
}

fn duality(cases: &mut Cases, random: &[Graph], opts: &VerifyOptions) {
    let named = connected_fixtures();
    let all = named
        .iter()
        .map(|(s, g)| (s.clone(), g))
        .chain(random.iter().enumerate().map(|(i, g)| (format!("random #{i} {}", describe(g)), g)));
    for (label, g) in all {
        cases.run(format!("duality {label}"), |c, name| {
            let n = g.n();
            let (grz, seq) = grundy_number_with(g, Variant::Z, &opts.search)?;
            let (z, zfs) = zero_forcing_number_with(g, &opts.search)?;
            let complement = forcing_set_from_z_sequence(g, &seq)?;
            let (_, process) = closure(g, &zfs, 1);
            let back = z_sequence_from_forcing(g, &process)?;
            let ok_sum = grz + z == n;
            let ok_complement = is_zero_forcing_set(g, &complement);
            let ok_reverse = verify_sequence(g, Variant::Z, &back.order).legal && back.len() == n - z;
            c.push(
                name,
                ok_sum && ok_complement && ok_reverse,
                format!(
                    "grz {grz} + Z {z} = {} (n {n}); complement forces: {ok_complement}; reversed chronology legal: {ok_reverse}",
                    grz + z
                ),
            );
            Ok(())
        });
    }
}

fn formula_case(cases: &mut Cases, text: &str, inv: Invariant, opts: &VerifyOptions) {
    cases.run(format!("{inv}({text})"), |c, name| {
        let expr = GraphExpr::parse(text)?;
        let g = expr.build()?;
        let p = predict(&expr, inv).ok_or_else(|| Error::Contract(format!("no formula for {inv} on {text}")))?;
        let actual = match inv {
            Invariant::GrundyZ => grundy_number_with(&g, Variant::Z, &opts.search)?.0,
            Invariant::ZeroForcing => {
                let direct = zero_forcing_number_with(&g, &opts.search)?.0;
                let dual = g.n() - grundy_number_with(&g, Variant::Z, &opts.search)?.0;
                if direct != dual {
                    c.push(name, false, format!("subset search {direct} but n - grz = {dual}"));
                    return Ok(());
                }
                direct
            }
            Invariant::Grundy => grundy_number_with(&g, Variant::Closed, &opts.search)?.0,
            Invariant::GrundyTotal => grundy_number_with(&g, Variant::Total, &opts.search)?.0,
            Invariant::GrundyL => grundy_number_with(&g, Variant::L, &opts.search)?.0,
            _ => return Err(Error::Contract(format!("no checker for {inv}"))),
        };
        c.push(
            format!("{name} = {} [{}]", p.value, p.formula),
            p.value == actual,
            format!("expected {}, got {actual}", p.value),
        );
        Ok(())
    });
}

fn within_budget(text: &str, opts: &VerifyOptions) -> bool {
    opts.budget == Budget::Full
        || GraphExpr::parse(text)
            .ok()
            .and_then(|e| crate::formulas::order(&e))
            .is_some_and(|n| n <= SMALL_BUDGET_ORDER)
}

fn products(cases: &mut Cases, opts: &VerifyOptions, samples: usize, t_max: usize) -> Result<()> {
    let mut grz: Vec<String> = Vec::new();
    grz.extend((1..=4).map(|d| format!("Q:{d}")));
    for s in 2..=3 {
        for t in 2..=3 {
            grz.push(format!("cart(K:{s},path:{t})"));
        }
    }
    for s in 2..=4 {
        for t in s..=4 {
            grz.push(format!("cart(path:{s},path:{t})"));
        }
    }
    for s in 3..=5 {
        for t in 2..=3 {
            grz.push(format!("cart(cyc:{s},path:{t})"));
        }
    }
    for s in 4..=5 {
        for t in 2..=3 {
            grz.push(format!("cart(cyc:{s},K:{t})"));
        }
    }
    for s in 2..=4 {
        for t in 2..=4 {
            grz.push(format!("strong(path:{s},path:{t})"));
        }
    }
    for (s, t) in [(3, 4), (3, 5), (4, 5), (5, 5)] {
        grz.push(format!("cart(cyc:{s},cyc:{t})"));
    }
    for text in grz.iter().filter(|t| within_budget(t, opts)) {
        formula_case(cases, text, Invariant::GrundyZ, opts);
    }

    // G □ P_t for sampled G with 2 <= |V(G)| <= t
    for t in 2..=t_max {
        let cfg = SamplerConfig::new(opts.seed + t as u64, 2, t, Acceptance::Any);
        for (i, h) in sample_graphs(&cfg, samples)?.iter().enumerate() {
            cases.run(format!("grz(cart(G,path:{t})) random #{i} G {}", describe(h)), |c, name| {
                let g = crate::generators::cartesian_product(h, &crate::generators::path(t)?)?;
                let got = grundy_number_with(&g, Variant::Z, &opts.search)?.0;
                c.eq(name, h.n() * (t - 1), got);
                Ok(())
            });
        }
    }

    let mut zf: Vec<String> = Vec::new();
    for s in 3..=4 {
        for t in 2..=3 {
            zf.push(format!("strong(cyc:{s},path:{t})"));
        }
    }
    for s in 3..=4 {
        for t in 3..=4 {
            zf.push(format!("lex(path:{s},path:{t})"));
            zf.push(format!("lex(path:{s},cyc:{t})"));
        }
    }
    zf.push("lex(cyc:4,cyc:4)".into());
    for text in zf.iter().filter(|t| within_budget(t, opts)) {
        formula_case(cases, text, Invariant::ZeroForcing, opts);
    }
    Ok(())
}

fn sierpinski_suite(cases: &mut Cases, opts: &VerifyOptions) {
    for (p, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 2)] {
        cases.run(format!("sier:{p},{n} constructions agree"), |c, name| {
            c.push(name, sierpinski(p, n)? == sierpinski_recursive(p, n)?, "");
            Ok(())
        });
    }
    for text in ["sier:2,1", "sier:2,2", "sier:2,3", "sier:2,4", "sier:3,2", "sier:4,2"] {
        formula_case(cases, text, Invariant::ZeroForcing, opts);
        formula_case(cases, text, Invariant::Grundy, opts);
    }
    if opts.budget == Budget::Full {
        cases.run("zf(sier:3,3) via grz = 6", |c, name| {
            let g = sierpinski(3, 3)?;
            let (z, set) = zero_forcing_number_via_z_sequences(&g, &opts.search)?;
            c.push(name, z == 6 && is_zero_forcing_set(&g, &set), format!("expected 6, got {z}"));
            Ok(())
        });
        formula_case(cases, "sier:3,3", Invariant::GrundyZ, opts);
    }
}

struct Grundy4 {
    gr: usize,
    grt: usize,
    grz: usize,
    grl: usize,
}

fn grundy4(g: &Graph, opts: &SearchOptions) -> Result<Grundy4> {
    Ok(Grundy4 {
        gr: grundy_number_with(g, Variant::Closed, opts)?.0,
        grt: grundy_number_with(g, Variant::Total, opts)?.0,
        grz: grundy_number_with(g, Variant::Z, opts)?.0,
        grl: grundy_number_with(g, Variant::L, opts)?.0,
    })
}

fn lattice(cases: &mut Cases, random: &[Graph], opts: &VerifyOptions) {
    for (i, g) in random.iter().enumerate() {
        cases.run(format!("lattice random #{i} {}", describe(g)), |c, name| {
            let v = grundy4(g, &opts.search)?;
            let ok = v.grz <= v.gr && v.gr < v.grl && v.grz <= v.grt && v.grt <= v.grl;
            c.push(name, ok, format!("gr {} grt {} grz {} grl {}", v.gr, v.grt, v.grz, v.grl));
            Ok(())
        });
    }
    // sharpness of each link
    type Link = fn(&Grundy4) -> bool;
    let sharp: [(&str, Link, &str); 5] = [
        ("sier:3,2", |v| v.grz == v.gr, "grz = gr"),
        ("star:4", |v| v.grz == v.grt, "grz = grt"),
        ("path:6", |v| v.grt == v.grl, "grt = grl"),
        ("star:4", |v| v.gr + 1 == v.grl, "gr = grl - 1"),
        ("path:5", |v| v.gr + 1 == v.grl, "gr = grl - 1"),
    ];
    for (text, holds, what) in sharp {
        cases.run(format!("sharp {what} on {text}"), |c, name| {
            let g = GraphExpr::parse(text)?.build()?;
            let v = grundy4(&g, &opts.search)?;
            c.push(name, holds(&v), format!("gr {} grt {} grz {} grl {}", v.gr, v.grt, v.grz, v.grl));
            Ok(())
        });
    }
}

fn factor2(cases: &mut Cases, random: &[Graph], opts: &VerifyOptions) {
    for (i, g) in random.iter().enumerate() {
        cases.run(format!("factor2 random #{i} {}", describe(g)), |c, name| {
            let v = grundy4(g, &opts.search)?;
            let ok = v.grt <= 2 * v.grz && v.grl <= 2 * v.gr;
            c.push(name, ok, format!("gr {} grt {} grz {} grl {}", v.gr, v.grt, v.grz, v.grl));
            Ok(())
        });
    }
    for n in 3..=5 {
        for text in [format!("K:{n}"), format!("glued:{n}")] {
            let expected = if text.starts_with('K') { 2 } else { 4 };
            cases.run(format!("sharp factor 2 on {text}"), |c, name| {
                let g = GraphExpr::parse(&text)?.build()?;
                let v = grundy4(&g, &opts.search)?;
                let ok = v.grt == expected && v.grt == 2 * v.grz && v.grl == expected && v.grl == 2 * v.gr;
                c.push(
                    name,
                    ok,
                    format!("grt {} = 2 grz {}; grl {} = 2 gr {}; expected {expected}", v.grt, v.grz, v.grl, v.gr),
                );
                Ok(())
            });
        }
    }
}

fn alpha_beta(cases: &mut Cases, random: &[Graph], opts: &VerifyOptions) {
    let check = |c: &mut Cases, name: &str, g: &Graph, equality: bool| -> Result<()> {
        let z = zero_forcing_number_with(g, &opts.search)?.0;
        let a = independence_number(g);
        let b = vertex_cover_number(g);
        let ok = if equality { z + b == a } else { z + b >= a };
        c.push(name, ok, format!("Z {z}, alpha {a}, beta {b}"));
        Ok(())
    };
    for (i, g) in random.iter().enumerate() {
        cases.run(format!("Z >= alpha - beta random #{i} {}", describe(g)), |c, name| check(c, name, g, false));
    }
    let sharp: Vec<String> = (2..=5)
        .map(|n| format!("star:{n}"))
        .chain((1..=3).map(|k| format!("path:{}", 2 * k + 1)))
        .collect();
    for text in sharp {
        cases.run(format!("Z = alpha - beta on {text}"), |c, name| {
            let g = GraphExpr::parse(&text)?.build()?;
            check(c, name, &g, true)
        });
    }
}

fn ptime(cases: &mut Cases, random: &[Graph], opts: &VerifyOptions) {
    let named = connected_fixtures();
    let all = named
        .iter()
        .map(|(s, g)| (s.clone(), g))
        .chain(random.iter().enumerate().map(|(i, g)| (format!("random #{i} {}", describe(g)), g)));
    for (label, g) in all {
        cases.run(format!("ptime {label}"), |c, name| {
            let pt = propagation_time_with(g, opts.ptime_budget, &opts.search)?;
            let blocks = min_permutable_blocks_with(g, &opts.search)?;
            let ok = pt.exact && pt.rounds == blocks.count;
            let blocks_text: Vec<String> = blocks.blocks.iter().map(|b| format!("{:?}", b.to_vec())).collect();
            c.push(
                name,
                ok,
                format!(
                    "propagation time {} (exact {}, set {:?}), permutable blocks {} [{}]",
                    pt.rounds,
                    pt.exact,
                    pt.witness.to_vec(),
                    blocks.count,
                    blocks_text.join(" ")
                ),
            );
            Ok(())
        });
    }
}

fn kz(cases: &mut Cases, k: usize, random: &[Graph], opts: &VerifyOptions) {
    for (i, g) in random.iter().enumerate() {
        cases.run(format!("k={k} random #{i} {}", describe(g)), |c, name| {
            let gzk = k_z_grundy_number_with(g, k, &opts.search)?.0;
            let gk = k_domination_number(g, k)?;
            let mut ok = gzk >= gk;
            let mut detail = format!("grz-k {gzk} >= gamma-k {gk}");
            if k == 1 {
                let grz = grundy_number_with(g, Variant::Z, &opts.search)?.0;
                let kf = k_forcing_number_with(g, 1, &opts.search)?.0;
                let zf = zero_forcing_number_with(g, &opts.search)?.0;
                ok &= gzk == grz && kf == zf;
                detail += &format!("; grz-1 {gzk} = grz {grz}; kf-1 {kf} = Z {zf}");
            }
            c.push(name, ok, detail);
            Ok(())
        });
    }
}
