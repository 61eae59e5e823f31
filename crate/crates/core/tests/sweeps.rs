use std::collections::HashMap;

use weak_syt::verify::{
    self, scan_inner_translation, translation_cases, verify_special_cases_with, CoverScope,
    Family, Mode,
};
use weak_syt::{build_poset, Tableau, Witness};

#[test]
fn special_cases_equal_filtered_full_sweep() {
    for n in 4..=7 {
        let p = build_poset(n).unwrap();
        let full = translation_cases(&p, Mode::Cover, CoverScope::Induced, &|_| true);
        for family in [Family::TwoRow, Family::TwoCol, Family::Hook] {
            let filtered: Vec<_> = full.iter().filter(|c| family.contains(&c.inner)).collect();
            let report = verify_special_cases_with(&p, family, CoverScope::Induced);
            let checked: u64 = filtered.iter().map(|c| c.checked).sum();
            let violations: Vec<Witness> =
                filtered.iter().flat_map(|c| c.violations.clone()).collect();
            assert_eq!(report.checked, checked);
            assert_eq!(report.violations, violations);
        }
    }
}

#[test]
fn two_col_run_is_transpose_of_two_row_run() {
    for n in 4..=7 {
        let p = build_poset(n).unwrap();
        let keep_rows = |r: &Tableau| Family::TwoRow.contains(r);
        let keep_cols = |r: &Tableau| Family::TwoCol.contains(r);
        let rows = translation_cases(&p, Mode::Cover, CoverScope::Induced, &keep_rows);
        let cols = translation_cases(&p, Mode::Cover, CoverScope::Induced, &keep_cols);
        assert_eq!(rows.len(), cols.len());
        let by_key: HashMap<(Tableau, usize), u64> = cols
            .iter()
            .map(|c| ((c.inner.clone(), c.i), c.checked))
            .collect();
        for c in &rows {
            let mirrored = by_key[&(c.inner.transpose(), c.i)];
            assert_eq!(mirrored, c.checked, "R={} i={}", c.inner, c.i);
        }
        let total = |cs: &[verify::TranslationCase]| cs.iter().map(|c| c.checked).sum::<u64>();
        assert_eq!(total(&rows), total(&cols));
    }
}

#[test]
fn order_mode_covers_cover_mode() {
    for n in 4..=8 {
        let p = build_poset(n).unwrap();
        let cover = translation_cases(&p, Mode::Cover, CoverScope::Induced, &|_| true);
        let order = translation_cases(&p, Mode::Order, CoverScope::Induced, &|_| true);
        assert_eq!(cover.len(), order.len());
        for (c, o) in cover.iter().zip(&order) {
            assert_eq!((&c.inner, c.i), (&o.inner, o.i));
            assert!(o.checked >= c.checked);
            if !c.violations.is_empty() {
                assert!(!o.violations.is_empty());
            }
        }
    }
}

#[test]
fn global_scope_matches_induced_scope() {
    for n in 4..=8 {
        let p = build_poset(n).unwrap();
        let a = verify::verify_inner_tableau_translation_with(&p, Mode::Cover, CoverScope::Induced);
        let b = verify::verify_inner_tableau_translation_with(&p, Mode::Cover, CoverScope::Global);
        assert_eq!(a.checked, b.checked);
        assert!(a.passed() && b.passed());
    }
}

#[test]
fn reports_are_deterministic() {
    let p = build_poset(7).unwrap();
    let run = || {
        verify::verify_inner_tableau_translation_with(&p, Mode::Order, CoverScope::Induced)
            .to_json(false)
    };
    assert_eq!(run(), run());
    let scan = || scan_inner_translation(&build_poset(6).unwrap()).to_json(false);
    assert_eq!(scan(), scan());
}

#[test]
fn scan_witnesses_replay() {
    let p = build_poset(6).unwrap();
    let report = scan_inner_translation(&p);
    assert!(!report.violations.is_empty());
    for w in &report.violations {
        let get = |k: &str| w.get(k).unwrap().parse::<Tableau>().unwrap();
        let (s, t, s2, t2) = (get("S"), get("T"), get("S'"), get("T'"));
        let triple = w.get("triple").unwrap();
        let i: usize = triple[1..].split(',').next().unwrap().parse().unwrap();
        assert!(p.leq(&s, &t).unwrap());
        assert_eq!(s.dual_knuth_move(i).unwrap(), s2);
        assert_eq!(t.dual_knuth_move(i).unwrap(), t2);
        assert!(!p.leq(&s2, &t2).unwrap());
    }
}

#[test]
fn failure_witness_replays() {
    let report = verify::verify_inner_translation_fails();
    let p = build_poset(6).unwrap();
    for w in &report.violations {
        let get = |k: &str| w.get(k).unwrap().parse::<Tableau>().unwrap();
        assert!(p.leq(&get("S"), &get("T")).unwrap());
        assert!(!p.leq(&get("S'"), &get("T'")).unwrap());
    }
}

#[test]
fn structural_reports_at_six() {
    let reports = verify::verify_structural(6).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
    assert_eq!(
        names,
        [
            "restriction_lemma",
            "descent_lemma",
            "insertion_restriction",
            "evac_transpose",
            "dual_knuth_shapes",
            "antisymmetry"
        ]
    );
    assert!(reports.iter().all(|r| r.passed()));
    assert!(verify::verify_structural(8).is_err());
}
