//! Independent oracles for the library's derived values: the hook-content
//! formula for dimensions, semistandard tableaux for weight multiplicities,
//! brute-force weight multisets for symmetric and exterior powers, and
//! integer power series for the dimensions of the peeled levels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use sl5susy::e510::graded_dimension_crosscheck;
use sl5susy::koszul::{minimal_orbit_series, peel_levels};
use sl5susy::liecore::{sl5, Weight, WeightMultiset};
use sl5susy::pscohomology::{lambda_quotient_basis, quotient_dimension};
use sl5susy::repring::VirtualModule;

/// Partition of an sl(5) highest weight, rows `lambda_i = sum_{j>=i} a_j`.
fn partition(labels: &[i32]) -> Vec<usize> {
    (0..5).map(|i| labels.iter().skip(i).sum::<i32>() as usize).collect()
}

/// `prod (n + c(box)) / hook(box)` for GL(5).
fn hook_content_dim(labels: &[i32]) -> u128 {
    let lambda = partition(labels);
    let conj: Vec<usize> = (0..lambda[0]).map(|j| lambda.iter().filter(|&&r| r > j).count()).collect();
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            num *= (5 + j as i64 - i as i64) as u128;
            den *= (row - j + conj[j] - i - 1) as u128;
        }
    }
    num / den
}

/// Dynkin labels of a GL(5) content vector.
fn content_weight(c: &[usize; 5]) -> Weight {
    Weight::new(&[0, 1, 2, 3].map(|i| c[i] as i32 - c[i + 1] as i32))
}

/// Weight multiset of an irrep by enumerating semistandard tableaux.
fn ssyt_character(labels: &[i32]) -> WeightMultiset {
    let lambda: Vec<usize> = partition(labels).into_iter().filter(|&r| r > 0).collect();
    let cells: Vec<(usize, usize)> = lambda.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut fill = vec![vec![0usize; lambda.first().copied().unwrap_or(0)]; lambda.len()];
    let mut out = WeightMultiset::new();
    fn rec(k: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, out: &mut WeightMultiset) {
        if k == cells.len() {
            let mut c = [0usize; 5];
            for row in fill.iter() {
                for &v in row.iter().filter(|&&v| v > 0) {
                    c[v - 1] += 1;
                }
            }
            out.add(content_weight(&c), 1);
            return;
        }
        let (i, j) = cells[k];
        let lo = if j > 0 { fill[i][j - 1] } else { 1 };
        let lo = if i > 0 { lo.max(fill[i - 1][j] + 1) } else { lo };
        for v in lo..=5 {
            fill[i][j] = v;
            rec(k + 1, cells, fill, out);
        }
        fill[i][j] = 0;
    }
    if cells.is_empty() {
        out.add(Weight::zero(4), 1);
    } else {
        rec(0, &cells, &mut fill, &mut out);
    }
    out
}

fn dominant_weights(max_label: i32) -> Vec<Weight> {
    let mut out = Vec::new();
    for a in 0..=max_label {
        for b in 0..=max_label {
            for c in 0..=max_label {
                for d in 0..=max_label {
                    out.push(Weight::new(&[a, b, c, d]));
                }
            }
        }
    }
    out
}

#[test]
fn partition_of_weights() {
    assert_eq!(partition(&[0, 0, 1, 0]), vec![1, 1, 1, 0, 0]);
    assert_eq!(partition(&[2, 0, 0, 1]), vec![3, 1, 1, 1, 0]);
    assert_eq!(hook_content_dim(&[1, 0, 0, 1]), 24);
}

#[test]
fn weyl_dimension_matches_hook_content() {
    let rs = sl5();
    for w in dominant_weights(3) {
        let ours = rs.weyl_dim(&w).unwrap();
        assert_eq!(ours, BigInt::from(hook_content_dim(w.labels())), "{w}");
    }
}

#[test]
fn freudenthal_matches_semistandard_tableaux() {
    let rs = sl5();
    for w in dominant_weights(2) {
        let ours = rs.freudenthal_multiplicities(&w).unwrap();
        assert_eq!(ours, ssyt_character(w.labels()), "{w}");
    }
}

fn brute_power(module: &VirtualModule, k: usize, exterior: bool) -> WeightMultiset {
    let weights: Vec<Weight> = module
        .character()
        .unwrap()
        .iter()
        .flat_map(|(w, m)| std::iter::repeat(w.clone()).take(u32::try_from(m).unwrap() as usize))
        .collect();
    let mut out = WeightMultiset::new();
    fn rec(start: usize, left: usize, exterior: bool, ws: &[Weight], acc: &Weight, out: &mut WeightMultiset) {
        if left == 0 {
            out.add(acc.clone(), 1);
            return;
        }
        for i in start..ws.len() {
            let next = acc + &ws[i];
            rec(if exterior { i + 1 } else { i }, left - 1, exterior, ws, &next, out);
        }
    }
    rec(0, k, exterior, &weights, &Weight::zero(4), &mut out);
    out
}

#[test]
fn symmetric_and_exterior_powers_match_brute_force() {
    let rs = sl5();
    for label in ["(1000)", "(0010)", "(0100)", "(1001)"] {
        let m = VirtualModule::parse(&rs, label).unwrap();
        for k in 0..=3 {
            assert_eq!(m.sym_power(k).unwrap().character().unwrap(), brute_power(&m, k, false), "Sym^{k} {label}");
            assert_eq!(m.ext_power(k).unwrap().character().unwrap(), brute_power(&m, k, true), "Ext^{k} {label}");
        }
    }
}

#[test]
fn tensor_product_matches_character_product() {
    let rs = sl5();
    let labels = ["(1000)", "(0011)", "(2000)", "(0101)", "(1001)"];
    for a in labels {
        for b in labels {
            let (ma, mb) = (VirtualModule::parse(&rs, a).unwrap(), VirtualModule::parse(&rs, b).unwrap());
            let product = ma.character().unwrap().product(&mb.character().unwrap());
            assert_eq!(ma.tensor(&mb).unwrap().character().unwrap(), product, "{a} x {b}");
        }
    }
}

/// Exponents `e_p` with `prod (1 - t^p)^{e_p} = 1 / sum_p d_p t^p` over
/// the integers, from the dimensions alone.
fn integer_peel(dims: &[i128]) -> Vec<i128> {
    let n = dims.len() - 1;
    // residual = 1 / Z
    let mut residual = vec![0i128; n + 1];
    residual[0] = 1;
    for p in 1..=n {
        residual[p] = -(1..=p).map(|q| dims[q] * residual[p - q]).sum::<i128>();
    }
    let mut exps = vec![0i128; n + 1];
    for p in 1..=n {
        // residual = prod_{q >= p} (1 - t^q)^{e_q}, so e_p = -residual[p].
        let e = -residual[p];
        exps[p] = e;
        // divide by (1 - t^p)^e: multiply by (1 - t^p)^{-e}
        let mut factor = vec![0i128; n + 1];
        factor[0] = 1;
        let mut binom: i128 = 1;
        let mut k = 1;
        while k * p <= n {
            // coefficient of x^k in (1 - x)^{-e} = (-1)^k C(-e, k)
            binom = binom * (-e - (k as i128 - 1)) / k as i128;
            factor[k * p] = if k % 2 == 0 { binom } else { -binom };
            k += 1;
        }
        let mut next = vec![0i128; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += residual[i] * factor[j];
            }
        }
        residual = next;
    }
    exps
}

#[test]
fn peeled_dimensions_match_integer_peeling() {
    let n = 10;
    let dims: Vec<i128> = (0..=n).map(|p| hook_content_dim(&[0, 0, p as i32, 0]) as i128).collect();
    let exps = integer_peel(&dims);
    let levels = peel_levels(&minimal_orbit_series(n), n).unwrap();
    for p in 1..=n {
        let module = levels.level(p as i64).unwrap();
        // (1 - t^p)^{-(-1)^p R_p}: exponent -(-1)^p dim R_p
        let sign: i128 = if p % 2 == 0 { 1 } else { -1 };
        let want = -sign * i128::try_from(module.dim()).unwrap();
        assert_eq!(exps[p], want, "level {p}");
    }
}

#[test]
fn quotient_ring_dimensions_match_hook_content() {
    for g in 0..=4 {
        let want = hook_content_dim(&[0, 0, g as i32, 0]) as usize;
        assert_eq!(quotient_dimension(g), want);
        assert_eq!(lambda_quotient_basis(g).unwrap().basis.len(), want);
    }
}

#[test]
fn e510_graded_dimensions_match_hook_content() {
    let report = graded_dimension_crosscheck(4).unwrap();
    let dims: BTreeMap<usize, (u64, u64)> = report.rows.iter().map(|r| (r.degree, (r.vector_rank, r.form_rank))).collect();
    for i in 0..=4usize {
        let vector = hook_content_dim(&[1, 0, 0, i as i32]) as u64;
        let form = hook_content_dim(&[0, 0, 1, i as i32]) as u64;
        assert_eq!(dims[&i], (vector, form), "degree {i}");
    }
}
