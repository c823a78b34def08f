//! Acceptance suite: the executable exit criteria for the toolkit, one test
//! per criterion, each printing a PASS/FAIL line (run with `--nocapture` to
//! see them).
//!
//! Wherever a criterion calls for an independent oracle, the oracle here is
//! written from the raw definitions against the bare multiplication table
//! (direct index loops, no library set machinery), so that it cannot share a
//! bug with the code under test.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use sgkit::enumerate::{count_semigroups, enumerate_and_check, enumerate_semigroups};
use sgkit::factor;
use sgkit::set::ElementSet;
use sgkit::setops;
use sgkit::structure;
use sgkit::table::CayleyTable;

fn criterion(number: u32, name: &str, body: impl FnOnce() + UnwindSafe) {
    match catch_unwind(body) {
        Ok(()) => println!("ACCEPTANCE {number} ({name}): PASS"),
        Err(panic) => {
            println!("ACCEPTANCE {number} ({name}): FAIL");
            resume_unwind(panic);
        }
    }
}

// ---------------------------------------------------------------------------
// Shared enumeration caches and definitional oracles.

/// All semigroups of the given order, via the library enumerator.
fn semigroups(order: usize) -> &'static [CayleyTable] {
    static CACHE: OnceLock<Vec<Vec<CayleyTable>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (1..=4)
            .map(|n| {
                let mut tables = Vec::new();
                enumerate_semigroups(n, |t| tables.push(t.clone())).unwrap();
                tables
            })
            .collect()
    });
    &all[order - 1]
}

/// Visits every magma table of order `n` in lexicographic order, flagging
/// associativity by a direct triple loop.
fn for_each_magma(n: usize, mut visit: impl FnMut(&[usize], bool)) {
    let cells = n * n;
    let mut entries = vec![0usize; cells];
    loop {
        visit(&entries, naive_associative(n, &entries));
        // Mixed-radix increment, last cell fastest.
        let mut done = true;
        for cell in entries.iter_mut().rev() {
            *cell += 1;
            if *cell < n {
                done = false;
                break;
            }
            *cell = 0;
        }
        if done {
            return;
        }
    }
}

fn naive_associative(n: usize, e: &[usize]) -> bool {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if e[e[i * n + j] * n + k] != e[i * n + e[j * n + k]] {
                    return false;
                }
            }
        }
    }
    true
}

/// All subsets of `[0, n)` containing `anchor`, as membership vectors.
fn subsets_with(n: usize, anchor: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask >> anchor & 1 == 1 {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Definitional set product on plain member lists.
fn multiply(t: &CayleyTable, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| t.product(x, y)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn closed(t: &CayleyTable, members: &[usize]) -> bool {
    members
        .iter()
        .all(|&a| members.iter().all(|&b| members.contains(&t.product(a, b))))
}

fn is_left_zero_subset(t: &CayleyTable, m: &[usize]) -> bool {
    m.iter().all(|&a| m.iter().all(|&b| t.product(a, b) == a))
}

fn is_right_zero_subset(t: &CayleyTable, m: &[usize]) -> bool {
    m.iter().all(|&a| m.iter().all(|&b| t.product(a, b) == b))
}

fn is_monoid_at(t: &CayleyTable, m: &[usize], e: usize) -> bool {
    closed(t, m)
        && m.iter()
            .all(|&a| t.product(e, a) == a && t.product(a, e) == a)
}

fn is_zero_max_at(t: &CayleyTable, m: &[usize], e: usize) -> bool {
    closed(t, m)
        && m.iter()
            .all(|&a| t.product(e, a) == e && t.product(a, e) == e)
}

fn is_rect_band_subset(t: &CayleyTable, m: &[usize]) -> bool {
    closed(t, m)
        && m.iter()
            .all(|&a| m.iter().all(|&b| t.product(t.product(a, b), a) == a))
}

fn is_right_group_subset(t: &CayleyTable, m: &[usize]) -> bool {
    if m.is_empty() || !closed(t, m) {
        return false;
    }
    // Left cancellative and right simple inside the subset.
    m.iter().all(|&a| {
        let mut row: Vec<usize> = m.iter().map(|&x| t.product(a, x)).collect();
        row.sort_unstable();
        row.dedup();
        row == *m
    })
}

fn is_left_group_subset(t: &CayleyTable, m: &[usize]) -> bool {
    if m.is_empty() || !closed(t, m) {
        return false;
    }
    m.iter().all(|&a| {
        let mut col: Vec<usize> = m.iter().map(|&x| t.product(x, a)).collect();
        col.sort_unstable();
        col.dedup();
        col == *m
    })
}

fn is_subgroup_at(t: &CayleyTable, m: &[usize], e: usize) -> bool {
    is_monoid_at(t, m, e)
        && m.iter().all(|&a| {
            m.iter()
                .any(|&b| t.product(a, b) == e && t.product(b, a) == e)
        })
}

/// `LZ(e)` from the raw definition: `be = b` and `eb = e`.
fn lz_oracle(t: &CayleyTable, e: usize) -> Vec<usize> {
    (0..t.order())
        .filter(|&b| t.product(b, e) == b && t.product(e, b) == e)
        .collect()
}

/// `RZ(e)` from the raw definition: `be = e` and `eb = b`.
fn rz_oracle(t: &CayleyTable, e: usize) -> Vec<usize> {
    (0..t.order())
        .filter(|&b| t.product(b, e) == e && t.product(e, b) == b)
        .collect()
}

/// `H(e)` from the raw definition: units of `eSe`.
fn h_oracle(t: &CayleyTable, e: usize) -> Vec<usize> {
    let mut ese: Vec<usize> = (0..t.order())
        .map(|x| t.product(t.product(e, x), e))
        .collect();
    ese.sort_unstable();
    ese.dedup();
    ese.iter()
        .copied()
        .filter(|&x| {
            ese.iter()
                .any(|&y| t.product(x, y) == e && t.product(y, x) == e)
        })
        .collect()
}

fn idempotents_of(t: &CayleyTable) -> Vec<usize> {
    (0..t.order()).filter(|&e| t.product(e, e) == e).collect()
}

fn set_of(t: &CayleyTable, members: &[usize]) -> ElementSet {
    ElementSet::from_members(t.order(), members.iter().copied())
}

// ---------------------------------------------------------------------------
// Criteria.

#[test]
fn acceptance_1_enumeration_counts() {
    criterion(1, "enumeration counts", || {
        let started = Instant::now();

        // Orders 1..=3 confirmed by the naive full-scan oracle.
        let mut naive = Vec::new();
        for n in 1..=3 {
            let mut count = 0u64;
            for_each_magma(n, |_, associative| {
                if associative {
                    count += 1;
                }
            });
            naive.push(count);
        }
        assert_eq!(naive, [1, 8, 113], "naive full-scan counts");

        let pruned: Vec<u64> = (1..=4).map(|n| count_semigroups(n).unwrap()).collect();
        assert_eq!(pruned, [1, 8, 113, 3492], "pruned search counts");

        assert!(
            started.elapsed() < Duration::from_secs(120),
            "enumeration budget exceeded: {:?}",
            started.elapsed()
        );
    });
}

#[test]
fn acceptance_2_theorem_suite() {
    criterion(2, "theorem suite over orders 1-4", || {
        let started = Instant::now();
        let mut tables = 0u64;
        for n in 1..=4 {
            let report = enumerate_and_check(n, 1).unwrap();
            tables += report.labeled_count;
            assert!(
                report.violations.is_empty(),
                "order {n}: {} violations, first: {}",
                report.violations.len(),
                report.violations[0]
            );
        }
        assert_eq!(tables, 3614);
        assert!(
            started.elapsed() < Duration::from_secs(300),
            "theorem suite budget exceeded: {:?}",
            started.elapsed()
        );
    });
}

#[test]
fn acceptance_3_duality_law() {
    criterion(3, "duality law", || {
        for n in 1..=3usize {
            for table in semigroups(n) {
                let subsets: Vec<ElementSet> = (1u32..1 << n)
                    .map(|mask| {
                        ElementSet::from_members(n, (0..n).filter(|&i| mask >> i & 1 == 1))
                    })
                    .collect();
                for a in &subsets {
                    let lid = setops::left_identity_set(table, a).unwrap();
                    let rid = setops::right_identity_set(table, a).unwrap();
                    for b in &subsets {
                        let rzero_b = setops::right_zero_set(table, b).unwrap();
                        let lzero_b = setops::left_zero_set(table, b).unwrap();
                        assert_eq!(
                            b.is_subset(&lid),
                            a.is_subset(&rzero_b),
                            "B ⊆ lidentity(A) ⇔ A ⊆ rzero(B) fails on {table:?}, A = {a}, B = {b}"
                        );
                        assert_eq!(
                            b.is_subset(&rid),
                            a.is_subset(&lzero_b),
                            "B ⊆ ridentity(A) ⇔ A ⊆ lzero(B) fails on {table:?}, A = {a}, B = {b}"
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_4_maximality_oracles() {
    criterion(4, "maximality oracles", || {
        for n in 1..=4usize {
            for table in semigroups(n) {
                for e in idempotents_of(table) {
                    let families: [(&str, Vec<Vec<usize>>, Vec<usize>); 6] = [
                        (
                            "LZ",
                            kind_family(table, e, is_left_zero_subset),
                            structure::max_left_zero(table, e).unwrap().to_vec(),
                        ),
                        (
                            "RZ",
                            kind_family(table, e, is_right_zero_subset),
                            structure::max_right_zero(table, e).unwrap().to_vec(),
                        ),
                        (
                            "eSe",
                            kind_family_at(table, e, is_monoid_at),
                            structure::local_monoid(table, e).unwrap().to_vec(),
                        ),
                        (
                            "zero-maximal",
                            kind_family_at(table, e, is_zero_max_at),
                            structure::zero_maximal_subsemigroup(table, e)
                                .unwrap()
                                .to_vec(),
                        ),
                        (
                            "RG",
                            kind_family(table, e, is_right_group_subset),
                            factor::max_right_subgroup(table, e).unwrap().to_vec(),
                        ),
                        (
                            "LG",
                            kind_family(table, e, is_left_group_subset),
                            factor::max_left_subgroup(table, e).unwrap().to_vec(),
                        ),
                    ];
                    for (kind, family, computed) in families {
                        assert!(
                            family.contains(&computed),
                            "{kind}({e}) = {computed:?} is not in its own family on {table:?}"
                        );
                        for member in &family {
                            assert!(
                                member.iter().all(|x| computed.contains(x)),
                                "{kind}({e}): {member:?} escapes {computed:?} on {table:?}"
                            );
                        }
                    }
                }
            }
        }
    });
}

fn kind_family(
    table: &CayleyTable,
    e: usize,
    pred: fn(&CayleyTable, &[usize]) -> bool,
) -> Vec<Vec<usize>> {
    subsets_with(table.order(), e)
        .into_iter()
        .filter(|m| pred(table, m))
        .collect()
}

fn kind_family_at(
    table: &CayleyTable,
    e: usize,
    pred: fn(&CayleyTable, &[usize], usize) -> bool,
) -> Vec<Vec<usize>> {
    subsets_with(table.order(), e)
        .into_iter()
        .filter(|m| pred(table, m, e))
        .collect()
}

#[test]
fn acceptance_5_rect_band_equivalence() {
    criterion(5, "rectangular band equivalence", || {
        // The three characterizations on every semigroup of order <= 4.
        for n in 1..=4usize {
            for table in semigroups(n) {
                assert_rect_band_routes_agree(table);
            }
        }
        // Every table of order <= 3, associative or not: the set-based forms
        // run only on semigroups; non-semigroups must be refused.
        for n in 1..=3usize {
            for_each_magma(n, |entries, associative| {
                let table = CayleyTable::from_entries(n, entries)
                    .unwrap()
                    .into_validated();
                if associative {
                    assert_rect_band_routes_agree(&table);
                } else {
                    assert!(
                        table.is_rectangular_band().is_err(),
                        "non-associative table {entries:?} was not refused"
                    );
                }
            });
        }
    });
}

fn assert_rect_band_routes_agree(table: &CayleyTable) {
    let n = table.order();
    let by_equation =
        (0..n).all(|a| (0..n).all(|b| table.product(table.product(a, b), a) == a));
    let band = (0..n).all(|a| table.product(a, a) == a);
    let by_band_swap = band
        && (0..n).all(|a| {
            (0..n).all(|b| (table.product(a, b) == b) == (table.product(b, a) == a))
        });
    let by_sets = (0..n).all(|a| {
        let lid: Vec<usize> = (0..n).filter(|&b| table.product(b, a) == a).collect();
        let rzero: Vec<usize> = (0..n).filter(|&b| table.product(a, b) == b).collect();
        !lid.is_empty() && lid == rzero
    });
    assert_eq!(by_equation, by_band_swap, "equation vs band+swap on {table:?}");
    assert_eq!(by_equation, by_sets, "equation vs identity/zero sets on {table:?}");
    assert_eq!(
        table.is_rectangular_band(),
        Ok(by_equation),
        "library disagrees with the oracle on {table:?}"
    );
}

#[test]
fn acceptance_6_factorization_uniqueness() {
    criterion(6, "factorization uniqueness", || {
        for n in 1..=4usize {
            for table in semigroups(n) {
                assert_factorizations_unique(table);
            }
        }
        // Order 5 streamed straight off the enumerator.
        enumerate_semigroups(5, assert_factorizations_unique).unwrap();
    });
}

fn assert_factorizations_unique(table: &CayleyTable) {
    let n = table.order();
    for e in idempotents_of(table) {
        let lz = lz_oracle(table, e);
        let rz = rz_oracle(table, e);

        // Every admissible pair (T_L, T_R), by definition.
        let mut rect_pairs: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::new();
        for t_l in subsets_of_members(&lz, e) {
            for t_r in subsets_of_members(&rz, e) {
                if multiply(table, &t_r, &t_l) == [e] {
                    let product = multiply(table, &t_l, &t_r);
                    rect_pairs.push((t_l.clone(), t_r, product));
                }
            }
        }

        let rect_bands: Vec<Vec<usize>> = subsets_with(n, e)
            .into_iter()
            .filter(|m| is_rect_band_subset(table, m))
            .collect();

        // The admissible products are exactly the rectangular band
        // subsemigroups through e, one pair each, and the pair is (Te, eT).
        for t in &rect_bands {
            let matching: Vec<_> = rect_pairs.iter().filter(|(_, _, p)| p == t).collect();
            assert_eq!(
                matching.len(),
                1,
                "{} admissible pairs produce {t:?} at e = {e} on {table:?}",
                matching.len()
            );
            let (t_l, t_r, _) = matching[0];
            assert_eq!(*t_l, multiply(table, t, &[e]), "T_L ≠ T·e on {table:?}");
            assert_eq!(*t_r, multiply(table, &[e], t), "T_R ≠ e·T on {table:?}");

            let lib = factor::rect_band_factorize(table, &set_of(table, t), e).unwrap();
            assert_eq!(lib.left.to_vec(), *t_l);
            assert_eq!(lib.right.to_vec(), *t_r);
        }
        assert_eq!(
            rect_pairs.len(),
            rect_bands.len(),
            "pair count differs from rect band count at e = {e} on {table:?}"
        );

        // Right subgroups: exactly one (H', RZ') per right subgroup.
        let h = h_oracle(table, e);
        let subgroups: Vec<Vec<usize>> = subsets_of_members(&h, e)
            .into_iter()
            .filter(|m| is_subgroup_at(table, m, e))
            .collect();
        let mut group_pairs: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> = Vec::new();
        for h_sub in &subgroups {
            for rz_sub in subsets_of_members(&rz, e) {
                let product = multiply(table, h_sub, &rz_sub);
                group_pairs.push((h_sub.clone(), rz_sub, product));
            }
        }
        let right_groups: Vec<Vec<usize>> = subsets_with(n, e)
            .into_iter()
            .filter(|m| is_right_group_subset(table, m))
            .collect();
        for t in &right_groups {
            let matching: Vec<_> = group_pairs.iter().filter(|(_, _, p)| p == t).collect();
            assert_eq!(
                matching.len(),
                1,
                "{} (H', RZ') pairs produce {t:?} at e = {e} on {table:?}",
                matching.len()
            );
        }
        assert_eq!(
            group_pairs.len(),
            right_groups.len(),
            "pair count differs from right subgroup count at e = {e} on {table:?}"
        );
    }
}

/// All subsets of `members` containing `anchor`.
fn subsets_of_members(members: &[usize], anchor: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = members.iter().copied().filter(|&x| x != anchor).collect();
    (0u32..1 << rest.len())
        .map(|mask| {
            let mut subset: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &m)| m)
                .collect();
            subset.push(anchor);
            subset.sort_unstable();
            subset
        })
        .collect()
}

#[test]
fn acceptance_7_overlap_chains() {
    criterion(7, "overlap chain equivalences", || {
        for n in 1..=4usize {
            for table in semigroups(n) {
                let idem = idempotents_of(table);
                for &e in &idem {
                    for &f in &idem {
                        let rg_e = factor::max_right_subgroup(table, e).unwrap();
                        let rg_f = factor::max_right_subgroup(table, f).unwrap();
                        let rz_e = structure::max_right_zero(table, e).unwrap();
                        let rz_f = structure::max_right_zero(table, f).unwrap();
                        let chain = [
                            !rg_e.is_disjoint(&rg_f),
                            table.product(e, f) == f && table.product(f, e) == e,
                            rz_e == rz_f,
                            rg_e == rg_f,
                        ];
                        assert!(
                            chain.iter().all(|&x| x == chain[0]),
                            "RG chain {chain:?} breaks at ({e}, {f}) on {table:?}"
                        );
                        assert_eq!(
                            factor::overlap_criterion_rg(table, e, f).unwrap(),
                            chain[1]
                        );

                        let lg_e = factor::max_left_subgroup(table, e).unwrap();
                        let lg_f = factor::max_left_subgroup(table, f).unwrap();
                        let lz_e = structure::max_left_zero(table, e).unwrap();
                        let lz_f = structure::max_left_zero(table, f).unwrap();
                        let chain = [
                            !lg_e.is_disjoint(&lg_f),
                            table.product(e, f) == e && table.product(f, e) == f,
                            lz_e == lz_f,
                            lg_e == lg_f,
                        ];
                        assert!(
                            chain.iter().all(|&x| x == chain[0]),
                            "LG chain {chain:?} breaks at ({e}, {f}) on {table:?}"
                        );
                        assert_eq!(
                            factor::overlap_criterion_lz(table, e, f).unwrap(),
                            chain[1]
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_8_cli_contract() {
    criterion(8, "CLI golden contract", || {
        let fixtures = ["l2", "r2", "c2", "rb4", "rg4"];
        for fix in fixtures {
            assert_cli_golden(&["validate"], fix, "validate.txt");
            assert_cli_golden(&["analyze", "--json"], fix, "analyze.json");
            assert_cli_golden(&["check"], fix, "check.txt");
        }
        let factorize_args: &[(&str, &[&str])] = &[
            ("l2", &["--e", "0", "--kind", "rect", "--enumerate"]),
            ("r2", &["--e", "0", "--kind", "right-group", "--enumerate"]),
            ("c2", &["--e", "0", "--kind", "right-group", "--enumerate"]),
            ("rb4", &["--e", "0", "--kind", "rect", "--enumerate"]),
            ("rg4", &["--e", "0", "--kind", "right-group", "--enumerate"]),
        ];
        for (fix, args) in factorize_args {
            let mut full = vec!["factorize"];
            full.extend_from_slice(args);
            assert_cli_golden_with(&full, fix, "factorize.txt", 1);
        }
    });
}

fn test_path(sub: &str, name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(sub).join(name)
}

fn assert_cli_golden(command: &[&str], fixture: &str, suffix: &str) {
    assert_cli_golden_with(command, fixture, suffix, command.len());
}

/// Runs the binary with `command` (the fixture path spliced in at
/// `file_position`) and compares stdout byte-for-byte with the golden file.
fn assert_cli_golden_with(command: &[&str], fixture: &str, suffix: &str, file_position: usize) {
    let file = test_path("tests/fixtures", &format!("{fixture}.tbl"));
    let mut args: Vec<&str> = command.to_vec();
    let file_str = file.to_str().unwrap().to_string();
    args.insert(file_position.min(args.len()), &file_str);

    let output = Command::new(env!("CARGO_BIN_EXE_sgkit"))
        .args(&args)
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let golden_path = test_path("tests/golden", &format!("{fixture}.{suffix}"));
    let expected = std::fs::read(&golden_path)
        .unwrap_or_else(|e| panic!("missing golden file {golden_path:?}: {e}"));
    assert!(
        output.stdout == expected,
        "{args:?} differs from golden {fixture}.{suffix}:\n--- expected\n{}\n--- actual\n{}",
        String::from_utf8_lossy(&expected),
        String::from_utf8_lossy(&output.stdout)
    );
}
