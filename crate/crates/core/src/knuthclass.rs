//! Knuth classes: the permutations sharing one insertion tableau.

use std::collections::{BTreeSet, VecDeque};

use crate::permutation::Permutation;
use crate::tableau::Tableau;

/// All words whose insertion tableau is `tableau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnuthClass {
    tableau: Tableau,
    words: BTreeSet<Permutation>,
}

impl KnuthClass {
    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn words(&self) -> &BTreeSet<Permutation> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, u: &Permutation) -> bool {
        self.words.contains(u)
    }
}

/// Breadth-first closure of the row word under Knuth moves.
///
/// Panics if `t` is not standard.
pub fn knuth_class(t: &Tableau) -> KnuthClass {
    let start = t.row_word();
    let mut words = BTreeSet::new();
    let mut queue = VecDeque::new();
    words.insert(start.clone());
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        for v in u.knuth_neighbors() {
            if words.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    KnuthClass {
        tableau: t.clone(),
        words,
    }
}

pub fn row_word(t: &Tableau) -> Permutation {
    t.row_word()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::rsk;
    use std::collections::BTreeMap;

    fn words(list: &[&str]) -> BTreeSet<Permutation> {
        list.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn worked_classes() {
        let r: Tableau = "1,2,5/3,4".parse().unwrap();
        assert_eq!(
            knuth_class(&r).words(),
            &words(&["31425", "34125", "31452", "34152", "34512"])
        );
        let s: Tableau = "1,4,5/2/3".parse().unwrap();
        assert_eq!(
            knuth_class(&s).words(),
            &words(&["32145", "32415", "32451", "34215", "34251", "34521"])
        );
        let t: Tableau = "1,4/2,5/3".parse().unwrap();
        assert_eq!(
            knuth_class(&t).words(),
            &words(&["32154", "32514", "35214", "32541", "35241"])
        );
    }

    #[test]
    fn single_row_class_is_identity() {
        let t: Tableau = "1,2,3,4".parse().unwrap();
        assert_eq!(knuth_class(&t).words(), &words(&["1234"]));
    }

    #[test]
    fn row_words() {
        let t: Tableau = "1,3/2,4/5".parse().unwrap();
        assert_eq!(row_word(&t).to_string(), "52413");
        assert_eq!(rsk(&row_word(&t)).0, t);
    }

    #[test]
    fn classes_partition_symmetric_group() {
        for n in 1..=7 {
            let mut total = 0;
            let mut seen = BTreeSet::new();
            for t in Tableau::all(n) {
                let class = knuth_class(&t);
                let des = t.descent_set();
                for u in class.words() {
                    assert!(seen.insert(u.clone()));
                    assert_eq!(u.descents_left(), des);
                }
                total += class.len();
            }
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn bfs_matches_insertion_filter() {
        for n in 1..=6 {
            let mut by_tableau: BTreeMap<Tableau, BTreeSet<Permutation>> = BTreeMap::new();
            for u in Permutation::all(n) {
                by_tableau.entry(rsk(&u).0).or_default().insert(u);
            }
            for (t, ws) in by_tableau {
                assert_eq!(knuth_class(&t).words(), &ws);
            }
        }
    }

    #[test]
    fn knuth_moves_preserve_insertion() {
        for n in 3..=7 {
            for u in Permutation::all(n) {
                let i = rsk(&u).0;
                for v in u.knuth_neighbors() {
                    assert_eq!(rsk(&v).0, i);
                }
            }
        }
    }

    #[test]
    fn dual_knuth_moves_preserve_recording() {
        for n in 3..=6 {
            for u in Permutation::all(n) {
                let r = rsk(&u).1;
                for v in u.dual_knuth_neighbors() {
                    assert_eq!(rsk(&v).1, r);
                }
            }
        }
    }
}
