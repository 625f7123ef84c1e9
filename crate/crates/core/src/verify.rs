//! Exhaustive checks over built KR crystals.
//!
//! Every suite reads the graph only; string walks are bounded by the vertex
//! count so a corrupted graph cannot make a check loop.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::builders::{classical_graph, Builder, Embedding, KrBuild, Sigma};
use crate::cartan::{
    affine_roots, kr_classical_decomposition, second_decomposition, weyl_dimension,
    weight_from_labels, AffineSpec, ClassicalType, Family, Weight,
};
use crate::crystal::{components, twisted_automorphism, CrystalGraph, Element};
use crate::pm::{halve_pm, PmLookup, Sign, SignTriple};
use crate::tableaux::{Letter, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Regularity,
    Decomp,
    Sigma,
    Phi0,
    Similarity,
    Jlowest,
    Connectivity,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Regularity,
        Suite::Decomp,
        Suite::Sigma,
        Suite::Phi0,
        Suite::Similarity,
        Suite::Jlowest,
        Suite::Connectivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Regularity => "regularity",
            Suite::Decomp => "decomp",
            Suite::Sigma => "sigma",
            Suite::Phi0 => "phi0",
            Suite::Similarity => "similarity",
            Suite::Jlowest => "jlowest",
            Suite::Connectivity => "connectivity",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The suite has nothing to say about this family.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: Suite,
    pub spec: AffineSpec,
    pub status: Status,
    /// Number of individual assertions evaluated.
    pub checked: usize,
    /// First failing assertion, with element strings and colors.
    pub witness: Option<String>,
    /// Filled in by callers that have a clock.
    pub micros: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{status} {} [{}] checked={}", self.suite.name(), self.spec, self.checked)?;
        if let Some(us) = self.micros {
            write!(f, " time={}us", us)?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

/// Accumulates assertions, keeping the first failure.
struct Tally {
    suite: Suite,
    spec: AffineSpec,
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(suite: Suite, spec: AffineSpec) -> Self {
        Tally { suite, spec, checked: 0, witness: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn finish(self) -> CheckReport {
        let status = if self.witness.is_some() { Status::Fail } else { Status::Pass };
        CheckReport {
            suite: self.suite,
            spec: self.spec,
            status,
            checked: self.checked,
            witness: self.witness,
            micros: None,
        }
    }
}

fn skipped(suite: Suite, spec: AffineSpec) -> CheckReport {
    CheckReport { suite, spec, status: Status::Skipped, checked: 0, witness: None, micros: None }
}

fn eps_b(g: &CrystalGraph, mut v: u32, c: u8) -> Option<u32> {
    let mut k = 0;
    while let Some(w) = g.e(v, c) {
        v = w;
        k += 1;
        if k as usize > g.len() {
            return None;
        }
    }
    Some(k)
}

fn phi_b(g: &CrystalGraph, mut v: u32, c: u8) -> Option<u32> {
    let mut k = 0;
    while let Some(w) = g.f(v, c) {
        v = w;
        k += 1;
        if k as usize > g.len() {
            return None;
        }
    }
    Some(k)
}

/// Raising with the smallest color first; `None` if the walk does not end.
fn raise_b(g: &CrystalGraph, mut v: u32, colors: &[u8]) -> Option<(u32, Vec<u8>)> {
    let mut path = Vec::new();
    'outer: loop {
        if path.len() > g.len() * colors.len().max(1) {
            return None;
        }
        for &c in colors {
            if let Some(w) = g.e(v, c) {
                v = w;
                path.push(c);
                continue 'outer;
            }
        }
        return Some((v, path));
    }
}

fn decomposition_b(g: &CrystalGraph, order: &[u8]) -> Option<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for v in 0..g.len() as u32 {
        if g.is_highest(v, order) {
            let mut labels = Vec::new();
            for &c in order {
                labels.push(phi_b(g, v, c)?);
            }
            out.push(labels);
        }
    }
    out.sort();
    Some(out)
}

fn edge_text(g: &CrystalGraph, v: u32, c: u8) -> String {
    format!("{} --{c}-->", g.label(v))
}

/// Edge inverses, weight steps, and φ_i − ε_i = ⟨wt, α_i^∨⟩ for every color
/// (0 included, using the classical part of α_0).
pub fn check_regularity(build: &KrBuild) -> CheckReport {
    let g = &build.graph;
    let roots = affine_roots(&build.spec);
    let mut t = Tally::new(Suite::Regularity, build.spec);
    for v in 0..g.len() as u32 {
        for c in build.spec.colors() {
            let root = &roots[c as usize];
            if let Some(w) = g.f(v, c) {
                t.check(g.e(w, c) == Some(v), || format!("{} {} but e_{c} does not return", edge_text(g, v, c), g.label(w)));
                t.check(*g.weight(w) == g.weight(v).sub(root), || {
                    format!("{} {}: weight {} -> {}", edge_text(g, v, c), g.label(w), g.weight(v), g.weight(w))
                });
            }
            if let Some(u) = g.e(v, c) {
                t.check(g.f(u, c) == Some(v), || format!("{} --e{c}--> {} but f_{c} does not return", g.label(v), g.label(u)));
            }
            let (eps, phi) = (eps_b(g, v, c), phi_b(g, v, c));
            let ok = match (eps, phi) {
                (Some(e), Some(p)) => {
                    (p as i64 - e as i64) * root.dot(root) == 2 * g.weight(v).dot(root)
                }
                _ => false,
            };
            t.check(ok, || format!("{} color {c}: φ-ε = {:?}-{:?} vs weight {}", g.label(v), phi, eps, g.weight(v)));
        }
    }
    t.finish()
}

/// Both decompositions against the rule tables, and the vertex count
/// against Weyl dimensions.
pub fn check_decompositions(build: &KrBuild) -> CheckReport {
    let spec = build.spec;
    let g = &build.graph;
    let mut t = Tally::new(Suite::Decomp, spec);
    let mut expected = kr_classical_decomposition(&spec);
    expected.sort();
    let got = decomposition_b(g, &spec.classical_colors());
    t.check(got.as_ref() == Some(&expected), || {
        format!("classical decomposition {:?}, expected {:?}", got, expected)
    });
    let ct = spec.classical_type();
    let dims: u128 = expected
        .iter()
        .map(|l| weyl_dimension(ct, spec.n, &weight_from_labels(ct, spec.n, l)).unwrap_or(0))
        .sum();
    t.check(dims == g.len() as u128, || format!("{} vertices, Weyl dimensions sum to {dims}", g.len()));
    let (order, _, mut second) = second_decomposition(&spec);
    second.sort();
    let got = decomposition_b(g, &order);
    t.check(got.as_ref() == Some(&second), || {
        format!("decomposition over colors {:?} is {:?}, expected {:?}", order, got, second)
    });
    t.finish()
}

/// σ as an involution commuting with colors 2..n and conjugating f_1 to f_0;
/// the τ(i)=n−i automorphism for C_n^{(1)} and D_{n+1}^{(2)}; promotion for type A.
pub fn check_sigma(build: &KrBuild) -> CheckReport {
    let spec = build.spec;
    let g = &build.graph;
    let n = spec.n;
    let mut t = Tally::new(Suite::Sigma, spec);
    let inner: Vec<u8> = (2..=n as u8).collect();
    match &build.sigma {
        Some(Sigma::Involution(s)) => {
            for v in 0..g.len() as u32 {
                let sv = s[v as usize];
                t.check(s.get(sv as usize) == Some(&v), || format!("σ²({}) ≠ itself", g.label(v)));
                for &c in &inner {
                    let lhs = g.f(v, c).map(|w| s[w as usize]);
                    t.check(lhs == g.f(sv, c), || format!("σ f_{c} ≠ f_{c} σ at {}", g.label(v)));
                }
                let conj = g.f(sv, 1).map(|w| s[w as usize]);
                t.check(g.f(v, 0) == conj, || format!("f_0 ≠ σ f_1 σ at {}", g.label(v)));
            }
        }
        Some(Sigma::Cross { partner, to, from, .. }) => {
            for v in 0..g.len() as u32 {
                let sv = to[v as usize];
                t.check(from.get(sv as usize) == Some(&v), || format!("σ²({}) ≠ itself", g.label(v)));
                for &c in &inner {
                    let lhs = g.f(v, c).map(|w| to[w as usize]);
                    t.check(lhs == partner.f(sv, c), || format!("σ f_{c} ≠ f_{c} σ at {}", g.label(v)));
                }
                let conj = partner.f(sv, 1).map(|w| from[w as usize]);
                t.check(g.f(v, 0) == conj, || format!("f_0 ≠ σ f_1 σ at {}", g.label(v)));
            }
        }
        None => {}
    }
    if matches!(spec.family, Family::C1 | Family::D2) {
        let tau: Vec<u8> = (0..=n as u8).map(|i| n as u8 - i).collect();
        match twisted_automorphism(g, &tau) {
            None => {
                t.check(false, || String::from("no automorphism with τ(i) = n−i"));
            }
            Some(m) => {
                for v in 0..g.len() as u32 {
                    let mv = m[v as usize];
                    t.check(m[mv as usize] == v, || format!("τ-automorphism is not an involution at {}", g.label(v)));
                    for c in spec.colors() {
                        let lhs = g.f(v, c).map(|w| m[w as usize]);
                        t.check(lhs == g.f(mv, tau[c as usize]), || {
                            format!("τ-automorphism fails to intertwine color {c} at {}", g.label(v))
                        });
                    }
                }
            }
        }
    }
    if let Some(pr) = &build.promotion {
        // pr shifts colors by one: pr f_i = f_{i+1} pr for 1 ≤ i ≤ n−2, and pr^n = id.
        for v in 0..g.len() as u32 {
            let pv = pr[v as usize];
            for c in 1..n as u8 - 1 {
                let lhs = g.f(v, c).map(|w| pr[w as usize]);
                t.check(lhs == g.f(pv, c + 1), || format!("pr f_{c} ≠ f_{} pr at {}", c + 1, g.label(v)));
            }
            let mut w = v;
            for _ in 0..n {
                w = pr[w as usize];
            }
            t.check(w == v, || format!("pr^n ≠ id at {}", g.label(v)));
        }
    }
    if t.checked == 0 {
        return skipped(Suite::Sigma, spec);
    }
    t.finish()
}

/// Signs of a ±-diagram as read by the φ_0 rule.
fn single_sign(signs: &[Sign]) -> Option<Option<Sign>> {
    let mut found = None;
    for &s in signs {
        match s {
            Sign::Empty => {}
            Sign::Plus | Sign::Minus => match found {
                None => found = Some(s),
                Some(f) if f == s => {}
                _ => return None,
            },
            _ => return None,
        }
    }
    Some(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phi0Rule {
    /// Bracketing formula for diagrams with one sign type.
    Formula,
    /// Positivity when no + sits in a column shorter than n−1.
    Positive,
    /// ε_0 = ℓ1 + γ on triples.
    Triple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi0Violation {
    pub rule: Phi0Rule,
    pub vertex: u32,
    /// No signs at all, and s columns of height r.
    pub sign_free_rectangle: bool,
    pub message: String,
}

/// Every {2..n}-highest element where the φ_0 rules disagree with the graph,
/// with the number of rule evaluations. `None` when the family has no such rules.
pub fn phi0_violations(build: &KrBuild) -> Option<(usize, Vec<Phi0Violation>)> {
    let spec = build.spec;
    let (n, r, s) = (spec.n, spec.r, spec.s);
    let g = &build.graph;
    let family = spec.family;
    if !matches!(family, Family::C1 | Family::A2Even | Family::D2) {
        return None;
    }
    let exceptional = matches!(family, Family::C1 | Family::D2) && r == n;
    let mut out = Vec::new();
    let mut checked = 0;
    let look = match PmLookup::build(g, spec.classical_type(), n) {
        Ok(l) => l,
        Err(e) => {
            out.push(Phi0Violation {
                rule: Phi0Rule::Formula,
                vertex: 0,
                sign_free_rectangle: false,
                message: format!("±-diagram lookup failed: {e}"),
            });
            return Some((1, out));
        }
    };
    let m0: usize = if family == Family::C1 { 2 } else { 1 };
    for v in look.vertices() {
        let p = look.diagram(v).expect("listed vertex");
        let rect = p.columns.len() == s
            && p.columns.iter().all(|c| c.sign == Sign::Empty && c.outer as usize == r);
        let mut fail = |rule, message: String| {
            out.push(Phi0Violation { rule, vertex: v, sign_free_rectangle: rect, message })
        };
        let (Some(phi0), Some(eps0)) = (phi_b(g, v, 0), eps_b(g, v, 0)) else {
            checked += 1;
            fail(Phi0Rule::Formula, format!("unbounded 0-string at {}", g.label(v)));
            continue;
        };
        let (phi0, eps0) = (phi0 as usize, eps0 as usize);
        if exceptional {
            checked += 1;
            match SignTriple::from_diagram(family, p) {
                Ok(tr) if eps0 == tr.l1 + tr.gamma => {}
                Ok(tr) => fail(
                    Phi0Rule::Triple,
                    format!("ε_0({}) = {eps0}, triple gives {}", g.label(v), tr.l1 + tr.gamma),
                ),
                Err(e) => fail(Phi0Rule::Triple, format!("{}: {e}", g.label(v))),
            }
            continue;
        }
        let signs: Vec<Sign> = p.columns.iter().map(|c| c.sign).collect();
        if let Some(eps) = single_sign(&signs) {
            checked += 1;
            // true = sign, false = ·; phantom height-0 columns pad the width to s
            let mut symbols: Vec<bool> =
                p.columns.iter().filter(|c| c.inner() < r).map(|c| c.sign != Sign::Empty).collect();
            symbols.extend(core::iter::repeat_n(false, s.saturating_sub(p.columns.len())));
            let (mut open_dots, mut signs_left) = (0usize, 0usize);
            for sym in symbols {
                if !sym {
                    open_dots += 1;
                } else if open_dots > 0 {
                    open_dots -= 1;
                } else {
                    signs_left += 1;
                }
            }
            let predicted = match eps {
                Some(Sign::Minus) => {
                    let c_r = p.columns.iter().filter(|c| c.inner() == r).count();
                    signs_left + s - c_r
                }
                _ => open_dots,
            };
            if m0 * phi0 != predicted {
                fail(
                    Phi0Rule::Formula,
                    format!("φ_0({}) = {phi0}, rule gives {predicted}/{m0}\n{}", g.label(v), p.text()),
                );
            }
        }
        let low = p.columns.iter().any(|c| (c.outer as usize) + 1 < n);
        let plus_low = p.columns.iter().any(|c| (c.outer as usize) + 1 < n && c.sign.has_plus());
        if low && !plus_low {
            checked += 1;
            if phi0 == 0 {
                fail(
                    Phi0Rule::Positive,
                    format!("φ_0({}) = 0 with no + in columns shorter than n−1\n{}", g.label(v), p.text()),
                );
            }
        }
    }
    Some((checked, out))
}

/// φ_0 of {2..n}-highest elements against the bracketing rule and the
/// positivity rule, and ε_0 on triples for the exceptional nodes.
pub fn check_phi0(build: &KrBuild) -> CheckReport {
    let Some((checked, bad)) = phi0_violations(build) else {
        return skipped(Suite::Phi0, build.spec);
    };
    CheckReport {
        suite: Suite::Phi0,
        spec: build.spec,
        status: if bad.is_empty() { Status::Pass } else { Status::Fail },
        checked,
        witness: bad.first().map(|b| {
            if bad.len() > 1 {
                format!("{} (+{} more)", b.message, bad.len() - 1)
            } else {
                b.message.clone()
            }
        }),
        micros: None,
    }
}

/// Divisibility of ambient string lengths, intertwining of every edge with
/// the ambient stepped operators, and the doubled-±-diagram image.
pub fn check_similarity(build: &KrBuild) -> CheckReport {
    let spec = build.spec;
    let Some(amb) = &build.ambient else {
        return skipped(Suite::Similarity, spec);
    };
    let g = &build.graph;
    let ag = &amb.build.graph;
    let mut t = Tally::new(Suite::Similarity, spec);
    for v in 0..g.len() as u32 {
        let a = amb.image[v as usize];
        for c in spec.colors() {
            let seq = &amb.steps[c as usize];
            if let [(ac, m)] = seq.as_slice() {
                let (e, p) = (eps_b(ag, a, *ac), phi_b(ag, a, *ac));
                t.check(e.is_some_and(|e| e % m == 0) && p.is_some_and(|p| p % m == 0), || {
                    format!("ambient ε/φ of color {ac} at {} not divisible by {m}", g.label(v))
                });
            }
            let mut want = Some(a);
            for &(ac, m) in seq {
                for _ in 0..m {
                    want = want.and_then(|x| ag.f(x, ac));
                }
            }
            let got = g.f(v, c).map(|w| amb.image[w as usize]);
            t.check(got == want, || format!("{} does not match the ambient stepped operator", edge_text(g, v, c)));
        }
        if amb.kind == Embedding::Virtual {
            t.check(amb.build.sigma_of(a) == Some(a), || format!("{} is not σ-fixed", g.label(v)));
        }
    }
    if amb.kind == Embedding::Similarity && !t.failed() {
        let n = spec.n;
        let target = spec.classical_type();
        let branch: Vec<u8> = (2..=n as u8).collect();
        let own = PmLookup::build(g, target, n);
        let outer = PmLookup::build(ag, amb.build.spec.classical_type(), n);
        match (own, outer) {
            (Ok(own), Ok(outer)) => {
                for v in 0..g.len() as u32 {
                    let Some((h, _)) = raise_b(g, v, &branch) else {
                        t.check(false, || format!("raising {} does not end", g.label(v)));
                        break;
                    };
                    let a = amb.image[h as usize];
                    let ok = match (own.diagram(h), outer.diagram(a)) {
                        (Ok(p), Ok(q)) => halve_pm(q, target).as_ref() == Ok(p),
                        _ => false,
                    };
                    t.check(ok, || format!("image of {} is not the doubled ±-diagram", g.label(h)));
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                t.check(false, || format!("±-diagram lookup failed: {e}"));
            }
        }
    }
    t.finish()
}

/// Column pattern of a J-lowest tableau (J = {1..n-1}).
pub fn jlowest_pattern(t: ClassicalType, n: usize, tab: &Tableau) -> bool {
    for col in &tab.columns {
        let mut k = 0usize;
        let mut idx = 0;
        // unbarred run k, k+1, …, n from the bottom
        if idx < col.len() && !col[idx].is_barred() && !col[idx].is_zero() {
            k = col[idx].index();
            let mut expect = k;
            while idx < col.len() && !col[idx].is_barred() && !col[idx].is_zero() {
                if col[idx].index() != expect {
                    return false;
                }
                expect += 1;
                idx += 1;
            }
            if expect != n + 1 {
                return false;
            }
        }
        while idx < col.len() && col[idx].is_zero() {
            if t == ClassicalType::C {
                return false;
            }
            idx += 1;
        }
        while idx < col.len() {
            let a = col[idx];
            if !a.is_barred() || (k > 0 && a.index() >= k) {
                return false;
            }
            idx += 1;
        }
    }
    true
}

/// X_{n-1} weight (coordinates 2..n, doubled) of the tableau left after
/// deleting every 1̄.
fn inner_shape_weight(n: usize, tab: &Tableau) -> Vec<i32> {
    let mut w = vec![0i32; n - 1];
    for col in &tab.columns {
        let h = col.iter().filter(|&&a| a != Letter::bar(1)).count();
        for x in w.iter_mut().take(h) {
            *x += 2;
        }
    }
    if tab.spin.is_some() {
        for x in w.iter_mut() {
            *x += 1;
        }
    }
    w
}

fn jlowest_profile(g: &CrystalGraph, n: usize, v: u32) -> Option<(Weight, Vec<i32>)> {
    let branch: Vec<u8> = (2..=n as u8).collect();
    let (h, _) = raise_b(g, v, &branch)?;
    Some((g.weight(v).clone(), g.weight(h).0[1..].to_vec()))
}

/// The J-lowest column pattern and the inner-shape statement on the tableau
/// model of the classical decomposition; the build's J-lowest elements must
/// carry the same (weight, J'-highest weight) multiset.
pub fn check_jlowest(build: &KrBuild) -> CheckReport {
    let spec = build.spec;
    let t_ = spec.classical_type();
    if !matches!(t_, ClassicalType::B | ClassicalType::C) {
        return skipped(Suite::Jlowest, spec);
    }
    let n = spec.n;
    let mut t = Tally::new(Suite::Jlowest, spec);
    let model = match classical_graph(&spec, usize::MAX) {
        Ok(m) => m,
        Err(e) => {
            t.check(false, || format!("tableau model failed: {e}"));
            return t.finish();
        }
    };
    let j: Vec<u8> = (1..n as u8).collect();
    let mut model_profile = Vec::new();
    for v in 0..model.len() as u32 {
        if !model.is_lowest(v, &j) {
            continue;
        }
        let Element::Tableau(tab) = model.element(v) else { continue };
        t.check(jlowest_pattern(t_, n, tab), || format!("J-lowest {} breaks the column pattern", model.label(v)));
        let prof = jlowest_profile(&model, n, v).expect("model walks end");
        let want = inner_shape_weight(n, tab);
        t.check(prof.1 == want, || format!("J'-highest weight of {} is not its inner shape", model.label(v)));
        model_profile.push(prof);
    }
    let g = &build.graph;
    let mut own = Vec::new();
    for v in 0..g.len() as u32 {
        if g.is_lowest(v, &j) {
            match jlowest_profile(g, n, v) {
                Some(p) => own.push(p),
                None => {
                    t.check(false, || format!("raising {} does not end", g.label(v)));
                }
            }
        }
    }
    model_profile.sort();
    own.sort();
    t.check(own == model_profile, || {
        format!("{} J-lowest elements in the build, {} in the tableau model (or profiles differ)", own.len(), model_profile.len())
    });
    t.finish()
}

pub fn check_connectivity(build: &KrBuild) -> CheckReport {
    let g = &build.graph;
    let mut t = Tally::new(Suite::Connectivity, build.spec);
    let comp = components(g, &build.spec.colors());
    let count = comp.iter().copied().max().map_or(0, |m| m + 1);
    t.check(count == 1, || format!("{count} components over colors 0..n"));
    t.finish()
}

pub fn run_check(suite: Suite, build: &KrBuild) -> CheckReport {
    match suite {
        Suite::Regularity => check_regularity(build),
        Suite::Decomp => check_decompositions(build),
        Suite::Sigma => check_sigma(build),
        Suite::Phi0 => check_phi0(build),
        Suite::Similarity => check_similarity(build),
        Suite::Jlowest => check_jlowest(build),
        Suite::Connectivity => check_connectivity(build),
    }
}

/// Every suite over every spec, in grid order then suite order. A spec that
/// fails to build yields one failing report per suite.
pub fn run_suite(builder: &mut Builder, grid: &[AffineSpec], suites: &[Suite]) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for &spec in grid {
        match builder.build(spec) {
            Ok(b) => out.extend(suites.iter().map(|&s| run_check(s, &b))),
            Err(e) => out.extend(suites.iter().map(|&s| CheckReport {
                suite: s,
                spec,
                status: Status::Fail,
                checked: 0,
                witness: Some(format!("build failed: {e}")),
                micros: None,
            })),
        }
    }
    out
}

/// Every family with n in 2..=n_max (D_n^{(1)} from 4 up to max(n_max, 4)),
/// every valid r, and s in 1..=s_max.
pub fn grid(n_max: usize, s_max: usize) -> Vec<AffineSpec> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let ns: Vec<usize> = if family == Family::D1 { (4..=n_max.max(4)).collect() } else { (2..=n_max).collect() };
        for n in ns {
            let r_max = if family == Family::A1 { n - 1 } else { n };
            for r in 1..=r_max {
                for s in 1..=s_max {
                    if let Ok(spec) = AffineSpec::new(family, n, r, s) {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

pub fn default_grid() -> Vec<AffineSpec> {
    grid(3, 2)
}
