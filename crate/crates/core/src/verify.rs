//! Exhaustive checks over small `n`, each producing a [`VerificationReport`].
//!
//! The central sweep relabels the inner tableau `R` of every tableau in
//! `SYT_n^R` by a tableau `R'` one dual Knuth move away, and asks whether
//! covers (or comparabilities) survive.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::knuthclass::knuth_class;
use crate::permutation::Permutation;
use crate::report::{VerificationReport, Witness};
use crate::tableau::{insertion_tableau, rsk, Tableau};
use crate::weakorder::{build_poset, TableauPoset};

/// Largest `n` accepted by the translation sweep.
pub const MAX_SWEEP_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Covers must map to covers.
    Cover,
    /// Comparable pairs must map to comparable pairs.
    Order,
}

/// Which covers of `SYT_n^R` the cover mode ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoverScope {
    /// Hasse edges of the subposet `SYT_n^R`.
    #[default]
    Induced,
    /// Hasse edges of `SYT_n` with both ends in `SYT_n^R`.
    Global,
}

/// Inner-tableau shapes for which the translation property is a theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    TwoRow,
    TwoCol,
    Hook,
}

impl Family {
    pub fn contains(self, r: &Tableau) -> bool {
        let shape = r.shape();
        match self {
            Family::TwoRow => shape.num_rows() == 2,
            Family::TwoCol => shape.num_cols() == 2,
            Family::Hook => shape.is_hook(),
        }
    }
}

macro_rules! text_enum {
    ($ty:ty, $what:literal, $($variant:path => $name:literal),+) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($variant => $name),+ })
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($variant),)+
                    _ => Err(Error::Parse {
                        position: 1,
                        message: format!(concat!("unknown ", $what, " '{}'"), s),
                    }),
                }
            }
        }
    };
}

text_enum!(Mode, "mode", Mode::Cover => "cover", Mode::Order => "order");
text_enum!(CoverScope, "cover scope", CoverScope::Induced => "induced", CoverScope::Global => "global");
text_enum!(Family, "family", Family::TwoRow => "two-row", Family::TwoCol => "two-col", Family::Hook => "hook");

fn check_range(n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange { n, min, max })
    }
}

/// Node ids of `SYT_n^R` for every `R` in `SYT_k`, in canonical order of `R`.
fn inner_groups(p: &TableauPoset, k: usize) -> BTreeMap<Tableau, Vec<usize>> {
    let mut groups: BTreeMap<Tableau, Vec<usize>> = BTreeMap::new();
    for (id, t) in p.nodes().iter().enumerate() {
        groups.entry(t.inner_tableau(k)).or_default().push(id);
    }
    groups
}

/// Sorted cover pairs of one group.
fn group_covers(p: &TableauPoset, members: &[usize], scope: CoverScope) -> Vec<(usize, usize)> {
    let mut out = match scope {
        CoverScope::Induced => p.induced_covers(members),
        CoverScope::Global => {
            let mut mask = FixedBitSet::with_capacity(p.len());
            members.iter().for_each(|&m| mask.insert(m));
            p.covers()
                .iter()
                .copied()
                .filter(|&(a, b)| mask.contains(a) && mask.contains(b))
                .collect()
        }
    };
    out.sort_unstable();
    out
}

/// Single dual Knuth moves out of `r`, as `(i, R')`.
fn single_moves(r: &Tableau) -> Vec<(usize, Tableau)> {
    (1..=r.n().saturating_sub(2))
        .filter_map(|i| r.dual_knuth_move(i).ok().map(|rp| (i, rp)))
        .collect()
}

/// One `(R, R')` pair of the translation sweep.
#[derive(Clone, Debug)]
pub struct TranslationCase {
    pub k: usize,
    pub inner: Tableau,
    /// `R'` is the dual Knuth move of `R` on `{i, i+1, i+2}`.
    pub i: usize,
    pub target: Tableau,
    pub checked: u64,
    pub violations: Vec<Witness>,
}

/// Runs the translation check for every `k < n`, every `R` accepted by
/// `keep`, and every single dual Knuth move `R -> R'`, in sweep order.
pub fn translation_cases(
    p: &TableauPoset,
    mode: Mode,
    scope: CoverScope,
    keep: &(dyn Fn(&Tableau) -> bool + Sync),
) -> Vec<TranslationCase> {
    let n = p.n();
    let mut cases = Vec::new();
    for k in 3..n {
        let groups = inner_groups(p, k);
        let jobs: Vec<(&Tableau, usize, Tableau)> = groups
            .keys()
            .filter(|r| keep(r))
            .flat_map(|r| single_moves(r).into_iter().map(move |(i, rp)| (r, i, rp)))
            .collect();
        if jobs.is_empty() {
            continue;
        }
        let covers: HashMap<&Tableau, Vec<(usize, usize)>> = match mode {
            Mode::Cover => groups
                .par_iter()
                .map(|(r, m)| (r, group_covers(p, m, scope)))
                .collect(),
            Mode::Order => HashMap::new(),
        };
        let mut batch: Vec<TranslationCase> = jobs
            .par_iter()
            .map(|(r, i, rp)| {
                let members = &groups[*r];
                let image: HashMap<usize, usize> = members
                    .iter()
                    .map(|&a| {
                        let moved = p.node(a).inner_translate(r, rp).expect("same shape");
                        (a, p.id_of(&moved).expect("translation stays in SYT_n"))
                    })
                    .collect();
                let pairs: Vec<(usize, usize)> = match mode {
                    Mode::Cover => covers[*r].clone(),
                    Mode::Order => members
                        .iter()
                        .flat_map(|&a| members.iter().map(move |&b| (a, b)))
                        .filter(|&(a, b)| a != b && p.leq_ids(a, b))
                        .collect(),
                };
                let mut case = TranslationCase {
                    k,
                    inner: (*r).clone(),
                    i: *i,
                    target: rp.clone(),
                    checked: 0,
                    violations: Vec::new(),
                };
                for (a, b) in pairs {
                    case.checked += 1;
                    let (va, vb) = (image[&a], image[&b]);
                    let ok = match mode {
                        Mode::Cover => covers[rp].binary_search(&(va, vb)).is_ok(),
                        Mode::Order => p.leq_ids(va, vb),
                    };
                    if !ok {
                        case.violations.push(
                            Witness::new()
                                .with("n", n)
                                .with("k", k)
                                .with("i", i)
                                .with("R", r)
                                .with("R'", rp)
                                .with("S", p.node(a))
                                .with("T", p.node(b))
                                .with("V(S)", p.node(va))
                                .with("V(T)", p.node(vb)),
                        );
                    }
                }
                case
            })
            .collect();
        cases.append(&mut batch);
    }
    cases
}

fn collect_cases(report: &mut VerificationReport, cases: Vec<TranslationCase>) {
    for case in cases {
        report.checked += case.checked;
        report.violations.extend(case.violations);
    }
}

/// Translation property on `SYT_n`, `2 <= n <= 9`, with induced covers.
pub fn verify_inner_tableau_translation(n: usize, mode: Mode) -> Result<VerificationReport> {
    check_range(n, 2, MAX_SWEEP_N)?;
    let p = build_poset(n)?;
    Ok(verify_inner_tableau_translation_with(&p, mode, CoverScope::Induced))
}

pub fn verify_inner_tableau_translation_with(
    p: &TableauPoset,
    mode: Mode,
    scope: CoverScope,
) -> VerificationReport {
    let range = match mode {
        Mode::Cover => format!("n={} mode=cover scope={scope}", p.n()),
        Mode::Order => format!("n={} mode=order", p.n()),
    };
    VerificationReport::new("inner_translation", range).timed(|report| {
        collect_cases(report, translation_cases(p, mode, scope, &|_| true));
    })
}

/// The translation sweep restricted to inner tableaux of one family, cover
/// mode, `2 <= n <= 8`.
pub fn verify_special_cases(n: usize, family: Family) -> Result<VerificationReport> {
    check_range(n, 2, 8)?;
    let p = build_poset(n)?;
    Ok(verify_special_cases_with(&p, family, CoverScope::Induced))
}

pub fn verify_special_cases_with(
    p: &TableauPoset,
    family: Family,
    scope: CoverScope,
) -> VerificationReport {
    let range = format!("n={} family={family} scope={scope}", p.n());
    VerificationReport::new("special_cases", range).timed(|report| {
        let keep = move |r: &Tableau| family.contains(r);
        collect_cases(report, translation_cases(p, Mode::Cover, scope, &keep));
    })
}

/// Reproduces the known failure on `SYT_6`: the dual Knuth move on
/// `{3,4,5}` sends `1,2,4/3,5,6 <= 1,2,4/3,6/5` to an incomparable pair.
/// Passes when the witness is found.
pub fn verify_inner_translation_fails() -> VerificationReport {
    VerificationReport::new("inner_translation_fails", "n=6 triple={3,4,5}").timed(|report| {
        report.expect_violations = true;
        let p = build_poset(6).expect("n=6 is in range");
        let s: Tableau = "1,2,4/3,5,6".parse().expect("literal");
        let t: Tableau = "1,2,4/3,6/5".parse().expect("literal");
        let (s2, t2) = match (s.dual_knuth_move(3), t.dual_knuth_move(3)) {
            (Ok(s2), Ok(t2)) => (s2, t2),
            _ => {
                report.note = Some("move on {3,4,5} undefined".into());
                return;
            }
        };
        report.checked = 1;
        let before = p.leq(&s, &t).expect("nodes of SYT_6");
        let after = p.leq(&s2, &t2).expect("nodes of SYT_6");
        report.note = Some(format!("S <= T: {before}, S' <= T': {after}"));
        if before && !after {
            report.violations.push(
                Witness::new()
                    .with("S", &s)
                    .with("T", &t)
                    .with("triple", "{3,4,5}")
                    .with("S'", &s2)
                    .with("T'", &t2),
            );
        }
    })
}

/// Every comparable pair `S < T` of `SYT_n` and every triple on which both
/// admit a dual Knuth move. Counterexamples are expected from `n = 6` on.
pub fn scan_inner_translation(p: &TableauPoset) -> VerificationReport {
    let n = p.n();
    VerificationReport::new("inner_translation_scan", format!("n={n}")).timed(|report| {
        report.expect_violations = true;
        let moved: Vec<Vec<Option<usize>>> = p
            .nodes()
            .iter()
            .map(|t| {
                (1..=n.saturating_sub(2))
                    .map(|i| t.dual_knuth_move(i).ok().and_then(|m| p.id_of(&m)))
                    .collect()
            })
            .collect();
        for a in 0..p.len() {
            for b in p.up_set(a).ones().filter(|&b| b != a) {
                for i in 1..=n.saturating_sub(2) {
                    let (Some(a2), Some(b2)) = (moved[a][i - 1], moved[b][i - 1]) else {
                        continue;
                    };
                    report.checked += 1;
                    if !p.leq_ids(a2, b2) {
                        report.violations.push(
                            Witness::new()
                                .with("S", p.node(a))
                                .with("T", p.node(b))
                                .with("triple", format!("{{{},{},{}}}", i, i + 1, i + 2))
                                .with("S'", p.node(a2))
                                .with("T'", p.node(b2)),
                        );
                    }
                }
            }
        }
    })
}

/// Hooks `R` in `SYT_k` with at least three rows and three columns whose
/// two corners hold `k-1` and `k`: the reverse insertions from the two
/// corners eject different values, and class words with the same last
/// letter have prefixes with the same insertion tableau. `5 <= k <= 9`.
pub fn verify_hook_eta(k: usize) -> Result<VerificationReport> {
    check_range(k, 5, 9)?;
    Ok(VerificationReport::new("hook_eta", format!("k={k}")).timed(|report| {
        for r in Tableau::all(k) {
            let shape = r.shape();
            if !shape.is_hook() || shape.num_rows() < 3 || shape.num_cols() < 3 {
                continue;
            }
            let corners = r.corners();
            let mut labels: Vec<usize> =
                corners.iter().map(|&c| r.get(c).unwrap() as usize).collect();
            labels.sort_unstable();
            if labels != [k - 1, k] {
                report.skipped += 1;
                continue;
            }
            report.checked += 1;
            let (a, b) = (corners[0], corners[1]);
            let eta_a = r.reverse_insert(a).expect("corner").1;
            let eta_b = r.reverse_insert(b).expect("corner").1;
            if eta_a == eta_b {
                report.violations.push(
                    Witness::new()
                        .with("R", &r)
                        .with("A", a)
                        .with("B", b)
                        .with("eta", eta_a),
                );
            }
            let mut prefix: BTreeMap<u8, (Permutation, Tableau)> = BTreeMap::new();
            for u in knuth_class(&r).words() {
                let (&last, init) = u.as_slice().split_last().expect("k >= 5");
                let head = insertion_tableau(init);
                match prefix.get(&last) {
                    Some((w, other)) if *other != head => {
                        report.violations.push(
                            Witness::new()
                                .with("R", &r)
                                .with("u", u)
                                .with("w", w)
                                .with("I(u')", &head)
                                .with("I(w')", other),
                        );
                    }
                    Some(_) => {}
                    None => {
                        prefix.insert(last, (u.clone(), head));
                    }
                }
            }
        }
    }))
}

/// Posets for `n = 1..=max_n`, index `m - 1` holding `SYT_m`.
pub fn build_posets(max_n: usize) -> Result<Vec<TableauPoset>> {
    (1..=max_n).map(build_poset).collect()
}

/// `S <= T` implies `S_[i,j] <= T_[i,j]` for every segment `i < j`, on the
/// largest poset of `posets`.
pub fn verify_restriction_lemma(posets: &[TableauPoset]) -> VerificationReport {
    let n = posets.len();
    VerificationReport::new("restriction_lemma", format!("n={n}")).timed(|report| {
        let Some(p) = posets.last() else { return };
        let segments: Vec<(usize, usize)> = (1..n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let per_node: Vec<Vec<usize>> = p
            .nodes()
            .par_iter()
            .map(|t| {
                segments
                    .iter()
                    .map(|&(i, j)| {
                        let q = &posets[j - i];
                        q.id_of(&t.restrict(i, j).expect("valid segment")).expect("in SYT")
                    })
                    .collect()
            })
            .collect();
        let results: Vec<(u64, Vec<Witness>)> = (0..p.len())
            .into_par_iter()
            .map(|a| {
                let mut checked = 0;
                let mut bad = Vec::new();
                for b in p.up_set(a).ones().filter(|&b| b != a) {
                    for (s, &(i, j)) in segments.iter().enumerate() {
                        checked += 1;
                        let q = &posets[j - i];
                        let (ra, rb) = (per_node[a][s], per_node[b][s]);
                        if !q.leq_ids(ra, rb) {
                            bad.push(
                                Witness::new()
                                    .with("S", p.node(a))
                                    .with("T", p.node(b))
                                    .with("i", i)
                                    .with("j", j)
                                    .with("S_[i,j]", q.node(ra))
                                    .with("T_[i,j]", q.node(rb)),
                            );
                        }
                    }
                }
                (checked, bad)
            })
            .collect();
        for (checked, bad) in results {
            report.checked += checked;
            report.violations.extend(bad);
        }
    })
}

/// Descent sets are constant on Knuth classes, equal to the tableau's
/// descent set, and increase along the order.
pub fn verify_descent_lemma(p: &TableauPoset) -> VerificationReport {
    VerificationReport::new("descent_lemma", format!("n={}", p.n())).timed(|report| {
        for t in p.nodes() {
            let des = t.descent_set();
            for u in knuth_class(t).words() {
                report.checked += 1;
                if u.descents_left() != des {
                    report.violations.push(
                        Witness::new()
                            .with("T", t)
                            .with("u", u)
                            .with("Des(T)", des)
                            .with("Des(u)", u.descents_left()),
                    );
                }
            }
        }
        let monotone = crate::weakorder::check_monotone_descent(p);
        report.checked += monotone.checked;
        report.violations.extend(monotone.violations);
    })
}

/// `I(u)_[i,j] = I(st(u_[i,j]))` for every `u` in `S_n` and segment `i < j`.
pub fn verify_insertion_restriction(n: usize) -> VerificationReport {
    VerificationReport::new("insertion_restriction", format!("n={n}")).timed(|report| {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let results: Vec<(u64, Vec<Witness>)> = perms
            .par_iter()
            .map(|u| {
                let t = rsk(u).0;
                let mut checked = 0;
                let mut bad = Vec::new();
                for i in 1..n {
                    for j in i + 1..=n {
                        checked += 1;
                        let lhs = t.restrict(i, j).expect("valid segment");
                        let rhs = rsk(&u.restrict_standardize(i, j).expect("valid segment")).0;
                        if lhs != rhs {
                            bad.push(
                                Witness::new()
                                    .with("u", u)
                                    .with("i", i)
                                    .with("j", j)
                                    .with("I(u)_[i,j]", &lhs)
                                    .with("I(st(u_[i,j]))", &rhs),
                            );
                        }
                    }
                }
                (checked, bad)
            })
            .collect();
        for (checked, bad) in results {
            report.checked += checked;
            report.violations.extend(bad);
        }
    })
}

/// `S <= T` implies `evac(S) <= evac(T)` and `T^t <= S^t`.
pub fn verify_evac_transpose(p: &TableauPoset) -> VerificationReport {
    VerificationReport::new("evac_transpose", format!("n={}", p.n())).timed(|report| {
        let evac: Vec<usize> = p
            .nodes()
            .iter()
            .map(|t| p.id_of(&t.evacuate()).expect("in SYT_n"))
            .collect();
        let tr: Vec<usize> = p
            .nodes()
            .iter()
            .map(|t| p.id_of(&t.transpose()).expect("in SYT_n"))
            .collect();
        for a in 0..p.len() {
            for b in p.up_set(a).ones() {
                report.checked += 1;
                if !p.leq_ids(evac[a], evac[b]) {
                    report.violations.push(
                        Witness::new()
                            .with("S", p.node(a))
                            .with("T", p.node(b))
                            .with("map", "evac")
                            .with("evac(S)", p.node(evac[a]))
                            .with("evac(T)", p.node(evac[b])),
                    );
                }
                if !p.leq_ids(tr[b], tr[a]) {
                    report.violations.push(
                        Witness::new()
                            .with("S", p.node(a))
                            .with("T", p.node(b))
                            .with("map", "transpose")
                            .with("S^t", p.node(tr[a]))
                            .with("T^t", p.node(tr[b])),
                    );
                }
            }
        }
    })
}

/// Components of `SYT_n` under dual Knuth moves are exactly the shape
/// classes.
pub fn verify_dual_knuth_shapes(n: usize) -> VerificationReport {
    VerificationReport::new("dual_knuth_shapes", format!("n={n}")).timed(|report| {
        let nodes = Tableau::all(n);
        let index: HashMap<&Tableau, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut component = vec![usize::MAX; nodes.len()];
        let mut roots = Vec::new();
        for start in 0..nodes.len() {
            if component[start] != usize::MAX {
                continue;
            }
            let c = roots.len();
            roots.push(start);
            component[start] = c;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for (_, y) in single_moves(&nodes[x]) {
                    let y = index[&y];
                    if component[y] == usize::MAX {
                        component[y] = c;
                        stack.push(y);
                    }
                }
            }
        }
        let mut by_shape: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, t) in nodes.iter().enumerate() {
            by_shape.entry(t.shape()).or_default().push(i);
        }
        for (shape, members) in by_shape {
            report.checked += members.len() as u64;
            let c = component[members[0]];
            let whole = members.iter().all(|&m| component[m] == c)
                && component.iter().filter(|&&x| x == c).count() == members.len();
            if !whole {
                report.violations.push(
                    Witness::new()
                        .with("shape", &shape)
                        .with("T", &nodes[members[0]]),
                );
            }
        }
    })
}

/// No two distinct tableaux are mutually reachable.
pub fn verify_antisymmetry(p: &TableauPoset) -> VerificationReport {
    VerificationReport::new("antisymmetry", format!("n={}", p.n())).timed(|report| {
        report.checked = (0..p.len()).map(|a| p.up_set(a).count_ones(..) as u64).sum();
        for (a, b) in p.antisymmetry_violations() {
            report
                .violations
                .push(Witness::new().with("S", p.node(a)).with("T", p.node(b)));
        }
    })
}

/// The six structural statements on `SYT_n`, `2 <= n <= 7`, one report
/// each.
pub fn verify_structural(n: usize) -> Result<Vec<VerificationReport>> {
    check_range(n, 2, 7)?;
    let posets = build_posets(n)?;
    let p = &posets[n - 1];
    Ok(vec![
        verify_restriction_lemma(&posets),
        verify_descent_lemma(p),
        verify_insertion_restriction(n),
        verify_evac_transpose(p),
        verify_dual_knuth_shapes(n),
        verify_antisymmetry(p),
    ])
}

/// For an induced cover `S < T` of `SYT_n^R` and a single dual Knuth move
/// `R -> R'`: if `st(S_[k+1,n]) < st(T_[k+1,n])` then `V(S) < V(T)` is an
/// induced cover of `SYT_n^{R'}`. Pairs failing the hypothesis are counted
/// as skipped. `2 <= n <= 8`.
pub fn verify_upper_segment_lemma(n: usize) -> Result<VerificationReport> {
    check_range(n, 2, 8)?;
    let posets = build_posets(n)?;
    let p = &posets[n - 1];
    Ok(VerificationReport::new("upper_segment_lemma", format!("n={n}")).timed(|report| {
        for k in 3..n.saturating_sub(1) {
            let q = &posets[n - k - 1];
            let groups = inner_groups(p, k);
            let covers: HashMap<&Tableau, Vec<(usize, usize)>> = groups
                .iter()
                .map(|(r, m)| (r, group_covers(p, m, CoverScope::Induced)))
                .collect();
            let upper: Vec<usize> = p
                .nodes()
                .iter()
                .map(|t| q.id_of(&t.restrict(k + 1, n).expect("segment")).expect("in SYT"))
                .collect();
            for (r, _) in &groups {
                for (i, rp) in single_moves(r) {
                    for &(a, b) in &covers[r] {
                        let (ua, ub) = (upper[a], upper[b]);
                        if ua == ub || !q.leq_ids(ua, ub) {
                            report.skipped += 1;
                            continue;
                        }
                        report.checked += 1;
                        let va = p.id_of(&p.node(a).inner_translate(r, &rp).unwrap()).unwrap();
                        let vb = p.id_of(&p.node(b).inner_translate(r, &rp).unwrap()).unwrap();
                        if covers[&rp].binary_search(&(va, vb)).is_err() {
                            report.violations.push(
                                Witness::new()
                                    .with("k", k)
                                    .with("i", i)
                                    .with("R", r)
                                    .with("R'", &rp)
                                    .with("S", p.node(a))
                                    .with("T", p.node(b))
                                    .with("V(S)", p.node(va))
                                    .with("V(T)", p.node(vb)),
                            );
                        }
                    }
                }
            }
        }
    }))
}
