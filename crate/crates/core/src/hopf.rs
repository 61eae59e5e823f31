//! Products of plactic classes, by shuffling and by weak-order intervals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::knuthclass::knuth_class;
use crate::permutation::{shuffle, Permutation};
use crate::report::{VerificationReport, Witness};
use crate::tableau::{rsk, Shape, Tableau};
use crate::weakorder::{build_poset, is_isomorphic, Interval, TableauPoset};

/// Largest `k + l` for the shuffle route.
pub const MAX_PRODUCT_N: usize = 9;

/// A formal sum of tableaux with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlacticSum {
    terms: BTreeMap<Tableau, u64>,
}

impl PlacticSum {
    pub fn terms(&self) -> &BTreeMap<Tableau, u64> {
        &self.terms
    }

    pub fn support(&self) -> Vec<Tableau> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, t: &Tableau) -> u64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(t, m)| json!({"tableau": t.to_string(), "multiplicity": m}))
                .collect(),
        )
    }
}

impl fmt::Display for PlacticSum {
    /// One `multiplicity tableau` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, m) in &self.terms {
            writeln!(f, "{m} {t}")?;
        }
        Ok(())
    }
}

/// Number of standard tableaux of a shape, by the hook length formula.
fn count_standard(shape: &Shape) -> u64 {
    let parts = shape.parts();
    let conj = shape.transpose();
    let mut hooks: u64 = 1;
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = conj.parts()[c] - r - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    (1..=shape.n() as u64).product::<u64>() / hooks
}

/// `PC_S * PC_T`: shuffles of every `u` in the class of `S` with every `w`
/// in the class of `T` (shifted by `|S|`), grouped by insertion tableau.
/// Fails unless the shuffle words split into whole Knuth classes.
pub fn plactic_product(s: &Tableau, t: &Tableau) -> Result<PlacticSum> {
    let n = s.n() + t.n();
    if n > MAX_PRODUCT_N {
        return Err(Error::SizeOutOfRange {
            n,
            min: 0,
            max: MAX_PRODUCT_N,
        });
    }
    let left: Vec<Permutation> = knuth_class(s).words().iter().cloned().collect();
    let right: Vec<Permutation> = knuth_class(t).words().iter().cloned().collect();
    let counts: HashMap<Tableau, u64> = left
        .par_iter()
        .map(|u| {
            let mut local: HashMap<Tableau, u64> = HashMap::new();
            for w in &right {
                for x in shuffle(u, w) {
                    *local.entry(rsk(&x).0).or_default() += 1;
                }
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (t, c) in b {
                *a.entry(t).or_default() += c;
            }
            a
        });
    let mut terms = BTreeMap::new();
    for (r, count) in counts {
        let size = count_standard(&r.shape());
        if count % size != 0 {
            return Err(Error::NotClassDecomposable(format!(
                "{count} shuffle words insert to {r}, whose class has {size}"
            )));
        }
        terms.insert(r, count / size);
    }
    Ok(PlacticSum { terms })
}

/// Members of the interval `[S\T, S/T]` in `p`, in canonical order.
pub fn interval_product(s: &Tableau, t: &Tableau, p: &TableauPoset) -> Result<Vec<Tableau>> {
    Ok(product_interval(s, t, p)?
        .members
        .iter()
        .map(|&id| p.node(id).clone())
        .collect())
}

fn product_interval(s: &Tableau, t: &Tableau, p: &TableauPoset) -> Result<Interval> {
    let n = s.n() + t.n();
    if n != p.n() {
        return Err(Error::SizeMismatch {
            left: n,
            right: p.n(),
        });
    }
    p.interval(&Tableau::beside(s, t), &Tableau::over(s, t))
}

/// The shuffle product and the interval agree for every `S`, `T` with
/// `|S|, |T| >= 1` and `|S| + |T| <= max_n`, and every product is
/// multiplicity free.
pub fn verify_product_interval(max_n: usize) -> Result<VerificationReport> {
    if !(2..=MAX_PRODUCT_N).contains(&max_n) {
        return Err(Error::SizeOutOfRange {
            n: max_n,
            min: 2,
            max: MAX_PRODUCT_N,
        });
    }
    let posets: Vec<TableauPoset> = (2..=max_n).map(build_poset).collect::<Result<_>>()?;
    Ok(
        VerificationReport::new("product_interval", format!("k+l<={max_n}")).timed(|report| {
            for p in &posets {
                let n = p.n();
                for k in 1..n {
                    let pairs: Vec<(Tableau, Tableau)> = Tableau::all(k)
                        .into_iter()
                        .flat_map(|s| Tableau::all(n - k).into_iter().map(move |t| (s.clone(), t)))
                        .collect();
                    let bad: Vec<Option<Witness>> = pairs
                        .par_iter()
                        .map(|(s, t)| {
                            let product = plactic_product(s, t);
                            let interval = interval_product(s, t, p).expect("sizes match");
                            let agree = match &product {
                                Ok(sum) => sum.is_multiplicity_free() && sum.support() == interval,
                                Err(_) => false,
                            };
                            (!agree).then(|| {
                                let shown = match &product {
                                    Ok(sum) => sum
                                        .terms()
                                        .iter()
                                        .map(|(r, m)| format!("{m}*{r}"))
                                        .collect::<Vec<_>>()
                                        .join(" + "),
                                    Err(e) => e.to_string(),
                                };
                                let members: Vec<String> =
                                    interval.iter().map(Tableau::to_string).collect();
                                Witness::new()
                                    .with("S", s)
                                    .with("T", t)
                                    .with("product", shown)
                                    .with("interval", members.join(" ; "))
                            })
                        })
                        .collect();
                    report.checked += pairs.len() as u64;
                    report.violations.extend(bad.into_iter().flatten());
                }
            }
        }),
    )
}

/// `[S\T, S/T]` is isomorphic to `[S'\T', S'/T']` whenever `S`, `S'` and
/// `T`, `T'` share shapes; `k, l >= 1`, `k + l <= 7`. Each interval is
/// compared with the one built from the first tableau of each shape.
pub fn verify_interval_isomorphism(k: usize, l: usize) -> Result<VerificationReport> {
    if k == 0 || l == 0 || k + l > 7 {
        return Err(Error::SizeOutOfRange {
            n: k + l,
            min: 2,
            max: 7,
        });
    }
    let p = build_poset(k + l)?;
    Ok(
        VerificationReport::new("interval_isomorphism", format!("k={k} l={l}")).timed(|report| {
            for lambda in Shape::partitions(k) {
                let ss = Tableau::all_of_shape(&lambda);
                for mu in Shape::partitions(l) {
                    let ts = Tableau::all_of_shape(&mu);
                    let reference = product_interval(&ss[0], &ts[0], &p).expect("sizes match");
                    for s in &ss {
                        for t in &ts {
                            report.checked += 1;
                            let other = product_interval(s, t, &p).expect("sizes match");
                            if !is_isomorphic(&reference, &other) {
                                report.violations.push(
                                    Witness::new()
                                        .with("S", &ss[0])
                                        .with("T", &ts[0])
                                        .with("S'", s)
                                        .with("T'", t),
                                );
                            }
                        }
                    }
                }
            }
        }),
    )
}
