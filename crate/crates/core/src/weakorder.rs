//! The weak order on standard Young tableaux as an explicit poset.
//!
//! Raw edges are the projections `I(u) -> I(u s_i)` of the covers of the
//! right weak order on `S_n`; the order is their reflexive-transitive
//! closure, and the Hasse diagram its transitive reduction. Antisymmetry of
//! the closure is not assumed: [`TableauPoset::antisymmetry_violations`]
//! reports any mutually reachable pair.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::report::{VerificationReport, Witness};
use crate::tableau::{dominance_leq, rsk, Shape, Tableau};

pub const MAX_POSET_N: usize = 9;

/// `(SYT_n, <=)` with node ids fixed by the canonical tableau order.
#[derive(Clone, Debug)]
pub struct TableauPoset {
    n: usize,
    nodes: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    raw_edges: Vec<(usize, usize)>,
    up: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
}

/// Builds the weak order on `SYT_n`, `1 <= n <= 9`.
pub fn build_poset(n: usize) -> Result<TableauPoset> {
    if !(1..=MAX_POSET_N).contains(&n) {
        return Err(Error::SizeOutOfRange {
            n,
            min: 1,
            max: MAX_POSET_N,
        });
    }
    let nodes = Tableau::all(n);
    let index: HashMap<Tableau, usize> = nodes
        .iter()
        .enumerate()
        .map(|(id, t)| (t.clone(), id))
        .collect();

    // Permutations in lexicographic order, so a word's rank is its index.
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let class_of: Vec<usize> = perms.par_iter().map(|u| index[&rsk(u).0]).collect();
    let mut raw_edges: Vec<(usize, usize)> = perms
        .par_iter()
        .enumerate()
        .flat_map_iter(|(rank, u)| {
            let from = class_of[rank];
            let class_of = &class_of;
            u.ascent_positions().filter_map(move |p| {
                let to = class_of[u.swap_positions(p).rank()];
                (to != from).then_some((from, to))
            })
        })
        .collect();
    raw_edges.par_sort_unstable();
    raw_edges.dedup();
    Ok(TableauPoset::from_edges(n, nodes, index, raw_edges))
}

impl TableauPoset {
    fn from_edges(
        n: usize,
        nodes: Vec<Tableau>,
        index: HashMap<Tableau, usize>,
        raw_edges: Vec<(usize, usize)>,
    ) -> Self {
        let len = nodes.len();
        let mut succ = vec![Vec::new(); len];
        for &(a, b) in &raw_edges {
            succ[a].push(b);
        }
        let up = closure(&succ);

        let mut covers = Vec::new();
        for a in 0..len {
            let mut bypass = FixedBitSet::with_capacity(len);
            for &c in &succ[a] {
                bypass.union_with(&strict(&up[c], c));
            }
            for &b in &succ[a] {
                if !bypass.contains(b) {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        covers.dedup();
        let mut upper_covers = vec![Vec::new(); len];
        let mut lower_covers = vec![Vec::new(); len];
        for &(a, b) in &covers {
            upper_covers[a].push(b);
            lower_covers[b].push(a);
        }
        TableauPoset {
            n,
            nodes,
            index,
            raw_edges,
            up,
            covers,
            upper_covers,
            lower_covers,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Tableau] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &Tableau {
        &self.nodes[id]
    }

    pub fn id_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    fn require(&self, t: &Tableau) -> Result<usize> {
        self.id_of(t).ok_or_else(|| Error::UnknownNode(t.to_string()))
    }

    /// Projected weak-order covers, deduplicated, without loops.
    pub fn raw_edges(&self) -> &[(usize, usize)] {
        &self.raw_edges
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, id: usize) -> &[usize] {
        &self.upper_covers[id]
    }

    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.lower_covers[id]
    }

    /// Reflexive up-set of a node.
    pub fn up_set(&self, id: usize) -> &FixedBitSet {
        &self.up[id]
    }

    pub fn leq_ids(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn leq(&self, s: &Tableau, t: &Tableau) -> Result<bool> {
        Ok(self.leq_ids(self.require(s)?, self.require(t)?))
    }

    pub fn is_cover_ids(&self, a: usize, b: usize) -> bool {
        self.upper_covers[a].binary_search(&b).is_ok()
    }

    /// Distinct mutually reachable pairs `(a, b)` with `a < b`.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].ones().filter(|&b| b > a) {
                if self.up[b].contains(a) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn interval(&self, bottom: &Tableau, top: &Tableau) -> Result<Interval> {
        Ok(self.interval_ids(self.require(bottom)?, self.require(top)?))
    }

    /// `{x : bottom <= x <= top}` with its Hasse edges. Empty when
    /// `bottom` is not below `top`.
    pub fn interval_ids(&self, bottom: usize, top: usize) -> Interval {
        let members: Vec<usize> = self.up[bottom]
            .ones()
            .filter(|&x| self.up[x].contains(top))
            .collect();
        let covers = self.induced_covers(&members);
        Interval {
            bottom,
            top,
            members,
            covers,
        }
    }

    /// Hasse edges of the order induced on `subset` (not the global covers
    /// restricted to it).
    pub fn induced_covers(&self, subset: &[usize]) -> Vec<(usize, usize)> {
        let len = self.len();
        let mut mask = FixedBitSet::with_capacity(len);
        for &x in subset {
            mask.insert(x);
        }
        let mut out = Vec::new();
        let mut sorted: Vec<usize> = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &a in &sorted {
            let mut above = self.up[a].clone();
            above.intersect_with(&mask);
            above.set(a, false);
            let mut bypass = FixedBitSet::with_capacity(len);
            for c in above.ones() {
                bypass.union_with(&strict(&self.up[c], c));
            }
            above.difference_with(&bypass);
            out.extend(above.ones().map(|b| (a, b)));
        }
        out
    }

    /// Hasse diagram in DOT, nodes labelled by tableau text, minimum at the
    /// bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph weak_order_syt_{} {{", self.n);
        out.push_str("  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (id, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{id} [label=\"{t}\"];");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// `{n, nodes[], covers[]}`; nodes are tableau text forms, covers are
    /// `[lower, upper]` node-id pairs.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "nodes": self.nodes.iter().map(Tableau::to_string).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "weak order on SYT_{}: {} nodes, {} covers",
            self.n,
            self.len(),
            self.covers.len()
        );
        for (id, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "{id}\t{t}");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "{a} < {b}");
        }
        out
    }
}

fn strict(up: &FixedBitSet, v: usize) -> FixedBitSet {
    let mut s = up.clone();
    s.set(v, false);
    s
}

/// Reflexive-transitive closure of a successor list. Acyclic graphs are
/// closed in one pass over a topological order; anything else falls back to
/// a search from every node.
fn closure(succ: &[Vec<usize>]) -> Vec<FixedBitSet> {
    let len = succ.len();
    let mut indegree = vec![0usize; len];
    for targets in succ {
        for &b in targets {
            indegree[b] += 1;
        }
    }
    let mut order = Vec::with_capacity(len);
    let mut ready: Vec<usize> = (0..len).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = ready.pop() {
        order.push(v);
        for &b in &succ[v] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    if order.len() == len {
        let mut up: Vec<FixedBitSet> = vec![FixedBitSet::new(); len];
        for &v in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(len);
            set.insert(v);
            for &b in &succ[v] {
                set.union_with(&up[b]);
            }
            up[v] = set;
        }
        up
    } else {
        (0..len)
            .into_par_iter()
            .map(|start| {
                let mut seen = FixedBitSet::with_capacity(len);
                let mut stack = vec![start];
                seen.insert(start);
                while let Some(v) = stack.pop() {
                    for &b in &succ[v] {
                        if !seen.put(b) {
                            stack.push(b);
                        }
                    }
                }
                seen
            })
            .collect()
    }
}

/// A closed interval of a [`TableauPoset`], as node ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
    pub members: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Order structure of an interval on local indices `0..len`.
struct LocalOrder {
    leq: Vec<FixedBitSet>,
    invariant: Vec<(usize, usize, usize, usize, usize)>,
}

impl LocalOrder {
    fn new(iv: &Interval) -> Self {
        let len = iv.members.len();
        let local: HashMap<usize, usize> =
            iv.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut succ = vec![Vec::new(); len];
        let mut up_deg = vec![0; len];
        let mut down_deg = vec![0; len];
        for &(a, b) in &iv.covers {
            let (a, b) = (local[&a], local[&b]);
            succ[a].push(b);
            up_deg[a] += 1;
            down_deg[b] += 1;
        }
        let leq = closure(&succ);
        // rank: longest chain from a minimal element
        let mut rank = vec![0usize; len];
        let mut by_size: Vec<usize> = (0..len).collect();
        by_size.sort_by_key(|&v| std::cmp::Reverse(leq[v].count_ones(..)));
        for &v in &by_size {
            for &b in &succ[v] {
                rank[b] = rank[b].max(rank[v] + 1);
            }
        }
        let below: Vec<usize> = (0..len)
            .map(|v| (0..len).filter(|&u| leq[u].contains(v)).count())
            .collect();
        let invariant = (0..len)
            .map(|v| (rank[v], up_deg[v], down_deg[v], leq[v].count_ones(..), below[v]))
            .collect();
        LocalOrder { leq, invariant }
    }
}

/// Whether an order isomorphism between the two intervals exists.
/// Backtracking over nodes with equal (rank, up-degree, down-degree,
/// up-set size, down-set size).
pub fn is_isomorphic(a: &Interval, b: &Interval) -> bool {
    if a.members.len() != b.members.len() || a.covers.len() != b.covers.len() {
        return false;
    }
    let la = LocalOrder::new(a);
    let lb = LocalOrder::new(b);
    let mut ia = la.invariant.clone();
    let mut ib = lb.invariant.clone();
    ia.sort_unstable();
    ib.sort_unstable();
    if ia != ib {
        return false;
    }
    let len = a.members.len();
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by_key(|&v| la.invariant[v]);
    let mut image = vec![usize::MAX; len];
    let mut used = vec![false; len];
    extend_iso(&la, &lb, &order, 0, &mut image, &mut used)
}

fn extend_iso(
    la: &LocalOrder,
    lb: &LocalOrder,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..used.len() {
        if used[w] || lb.invariant[w] != la.invariant[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let x = image[u];
            la.leq[u].contains(v) == lb.leq[x].contains(w)
                && la.leq[v].contains(u) == lb.leq[w].contains(x)
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_iso(la, lb, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

/// `S <= T` implies `Des(S) ⊆ Des(T)`, over all comparable pairs.
pub fn check_monotone_descent(p: &TableauPoset) -> VerificationReport {
    VerificationReport::new("monotone_descent", format!("n={}", p.n())).timed(|report| {
        let des: Vec<_> = p.nodes().iter().map(Tableau::descent_set).collect();
        for a in 0..p.len() {
            for b in p.up_set(a).ones() {
                report.checked += 1;
                if !des[a].is_subset(des[b]) {
                    report.violations.push(
                        Witness::new()
                            .with("S", p.node(a))
                            .with("T", p.node(b))
                            .with("Des(S)", des[a])
                            .with("Des(T)", des[b]),
                    );
                }
            }
        }
    })
}

/// Which way comparable tableaux' shapes compare in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeDirection {
    /// `S <= T` implies `sh(T) <=dom sh(S)`.
    UpperIsDominated,
    /// `S <= T` implies `sh(S) <=dom sh(T)`.
    UpperDominates,
}

/// The dominance direction satisfied by more Hasse edges (ties go to
/// [`ShapeDirection::UpperIsDominated`]). `None` for a poset without edges.
pub fn detect_shape_direction(p: &TableauPoset) -> Option<ShapeDirection> {
    if p.covers().is_empty() {
        return None;
    }
    let shapes: Vec<_> = p.nodes().iter().map(Tableau::shape).collect();
    let failures = |dir| {
        p.covers()
            .iter()
            .filter(|&&(a, b)| !shape_holds(dir, &shapes[a], &shapes[b]))
            .count()
    };
    if failures(ShapeDirection::UpperIsDominated) <= failures(ShapeDirection::UpperDominates) {
        Some(ShapeDirection::UpperIsDominated)
    } else {
        Some(ShapeDirection::UpperDominates)
    }
}

fn shape_holds(dir: ShapeDirection, lower: &Shape, upper: &Shape) -> bool {
    match dir {
        ShapeDirection::UpperIsDominated => dominance_leq(upper, lower).unwrap(),
        ShapeDirection::UpperDominates => dominance_leq(lower, upper).unwrap(),
    }
}

/// Detects the dominance direction on the Hasse edges, then checks it on
/// every comparable pair. The direction is written to the report note.
pub fn check_monotone_shape(p: &TableauPoset) -> VerificationReport {
    VerificationReport::new("monotone_shape", format!("n={}", p.n())).timed(|report| {
        let Some(dir) = detect_shape_direction(p) else {
            report.checked = p.len() as u64;
            report.note = Some("no covers; direction undetermined".into());
            return;
        };
        let shapes: Vec<_> = p.nodes().iter().map(Tableau::shape).collect();
        for a in 0..p.len() {
            for b in p.up_set(a).ones() {
                report.checked += 1;
                if !shape_holds(dir, &shapes[a], &shapes[b]) {
                    report.violations.push(
                        Witness::new()
                            .with("S", p.node(a))
                            .with("T", p.node(b))
                            .with("sh(S)", &shapes[a])
                            .with("sh(T)", &shapes[b]),
                    );
                }
            }
        }
        report.note = Some(dir.to_string());
    })
}

impl std::fmt::Display for ShapeDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ShapeDirection::UpperIsDominated => {
                write!(f, "direction: S <= T implies sh(T) <=dom sh(S)")
            }
            ShapeDirection::UpperDominates => {
                write!(f, "direction: S <= T implies sh(S) <=dom sh(T)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn n3_is_a_diamond() {
        let p = build_poset(3).unwrap();
        assert_eq!(p.len(), 4);
        let row = t("1,2,3");
        let col = t("1/2/3");
        let a = t("1,3/2");
        let b = t("1,2/3");
        for m in [&a, &b] {
            assert!(p.leq(&row, m).unwrap());
            assert!(p.leq(m, &col).unwrap());
        }
        assert!(!p.leq(&a, &b).unwrap() && !p.leq(&b, &a).unwrap());
        assert_eq!(p.covers().len(), 4);
    }

    #[test]
    fn node_counts() {
        for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 10), (5, 26), (6, 76)] {
            assert_eq!(build_poset(n).unwrap().len(), count);
        }
        assert!(build_poset(0).is_err());
        assert!(build_poset(10).is_err());
    }

    #[test]
    fn closure_needed_for_worked_example() {
        let p = build_poset(5).unwrap();
        let r = t("1,2,5/3,4");
        let s = t("1,4,5/2/3");
        let top = t("1,4/2,5/3");
        assert!(p.leq(&r, &s).unwrap());
        assert!(p.leq(&s, &top).unwrap());
        assert!(p.leq(&r, &top).unwrap());
        let (ri, ti) = (p.id_of(&r).unwrap(), p.id_of(&top).unwrap());
        assert!(!p.raw_edges().contains(&(ri, ti)));
    }

    #[test]
    fn unknown_nodes() {
        let p = build_poset(3).unwrap();
        assert!(matches!(
            p.leq(&t("1,2"), &t("1/2")),
            Err(Error::UnknownNode(_))
        ));
    }

    #[test]
    fn leq_is_reflexive() {
        let p = build_poset(4).unwrap();
        for id in 0..p.len() {
            assert!(p.leq_ids(id, id));
        }
    }

    #[test]
    fn cyclic_fallback_matches_topological_pass() {
        let succ = vec![vec![1], vec![2], vec![3], vec![]];
        let fast = closure(&succ);
        let cyclic = closure(&[vec![1], vec![2], vec![0, 3], vec![]]);
        assert_eq!(fast[0].ones().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        for v in 0..3 {
            assert_eq!(cyclic[v].ones().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        }
        assert_eq!(cyclic[3].ones().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn covers_are_the_transitive_reduction() {
        for n in 1..=6 {
            let p = build_poset(n).unwrap();
            let len = p.len();
            let mut naive = Vec::new();
            for a in 0..len {
                for b in 0..len {
                    if a == b || !p.leq_ids(a, b) {
                        continue;
                    }
                    let between = (0..len)
                        .any(|c| c != a && c != b && p.leq_ids(a, c) && p.leq_ids(c, b));
                    if !between {
                        naive.push((a, b));
                    }
                }
            }
            assert_eq!(p.covers(), naive.as_slice(), "n={n}");
        }
    }

    #[test]
    fn antisymmetric_small() {
        for n in 1..=6 {
            assert!(build_poset(n).unwrap().antisymmetry_violations().is_empty());
        }
    }

    #[test]
    fn intervals_and_induced_covers() {
        let p = build_poset(5).unwrap();
        let iv = p.interval(&t("1,2,4/3,5"), &t("1,2/3/4/5")).unwrap();
        assert_eq!(iv.len(), 4);
        let single = p.interval(&t("1,2,4/3,5"), &t("1,2,4/3,5")).unwrap();
        assert_eq!(single.members.len(), 1);
        assert!(single.covers.is_empty());
        // induced covers on a non-convex subset skip the missing middle
        let row = p.id_of(&t("1,2,3,4,5")).unwrap();
        let col = p.id_of(&t("1/2/3/4/5")).unwrap();
        assert_eq!(p.induced_covers(&[row, col]), vec![(row, col)]);
    }

    #[test]
    fn isomorphism_basics() {
        let p = build_poset(5).unwrap();
        let iv = p.interval(&t("1,2,4/3,5"), &t("1,2/3/4/5")).unwrap();
        assert!(is_isomorphic(&iv, &iv));
        let whole = p.interval(&t("1,2,3,4,5"), &t("1/2/3/4/5")).unwrap();
        assert!(!is_isomorphic(&iv, &whole));
        // a 4-chain and a diamond have equal sizes but differ
        let chain = Interval {
            bottom: 0,
            top: 3,
            members: vec![0, 1, 2, 3],
            covers: vec![(0, 1), (1, 2), (2, 3)],
        };
        let diamond = Interval {
            bottom: 0,
            top: 3,
            members: vec![0, 1, 2, 3],
            covers: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        };
        assert!(!is_isomorphic(&chain, &diamond));
        let relabelled = Interval {
            bottom: 7,
            top: 4,
            members: vec![4, 5, 6, 7],
            covers: vec![(7, 5), (7, 6), (5, 4), (6, 4)],
        };
        assert!(is_isomorphic(&diamond, &relabelled));
    }

    #[test]
    fn monotone_maps() {
        let p = build_poset(3).unwrap();
        let d = check_monotone_descent(&p);
        assert!(d.passed());
        assert_eq!(d.checked, 4 + 4 + 1);
        let s = check_monotone_shape(&p);
        assert!(s.passed());
        assert_eq!(detect_shape_direction(&p), Some(ShapeDirection::UpperIsDominated));
        assert_eq!(detect_shape_direction(&build_poset(1).unwrap()), None);
        let single = build_poset(1).unwrap();
        assert!(check_monotone_descent(&single).passed());
        assert!(check_monotone_shape(&single).passed());
    }

    #[test]
    fn exports() {
        let p = build_poset(2).unwrap();
        assert_eq!(
            p.to_json().to_string(),
            r#"{"n":2,"nodes":["1/2","1,2"],"covers":[[1,0]]}"#
        );
        let dot = p.to_dot();
        assert!(dot.contains("n1 -> n0;"));
        assert!(dot.contains("n0 [label=\"1/2\"];"));
    }
}
