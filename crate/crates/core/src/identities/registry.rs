use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Evaluator, Expectation, Formulas, IdentityRecord, Shape, Variant};
use crate::arith::{binom, factorial, ipow, sign};
use crate::closedforms::{step_two_rising, BellInput, BellTable};
use crate::error::Result;
use crate::oracle::{count_ballot, ternary_histogram, HillHistogram, MAX_BALLOT_LEN, MAX_SEMILENGTH, MAX_TERNARY_LEN};
use crate::sequence::{catalan, catalan_prefix, invert_transform, Tower};
use crate::triangle::Triangle;

fn pair(k: Option<usize>) -> usize {
    k.expect("pair-shaped identity evaluated without k")
}

fn cell_1kn(n: usize, k: usize) -> bool {
    1 <= k && k <= n
}

fn cell_k_below_n(n: usize, k: usize) -> bool {
    1 <= k && k < n
}

fn n_at_least_1(n: usize, _: usize) -> bool {
    n >= 1
}

fn n_at_least_2(n: usize, _: usize) -> bool {
    n >= 2
}

fn tower(max_n: usize) -> Result<Tower> {
    Tower::fine(max_n.max(1))
}

fn record(
    id: &'static str,
    description: &'static str,
    shape: Shape,
    domain: fn(usize, usize) -> bool,
    prepare: fn(Formulas, usize) -> Result<Evaluator>,
) -> IdentityRecord {
    IdentityRecord {
        id,
        description,
        variant: Variant::AsPrinted,
        expected: Expectation::Pass,
        shape,
        domain,
        oracle_bound: None,
        prepare,
    }
}

fn printed_typo(mut r: IdentityRecord) -> IdentityRecord {
    r.variant = Variant::AsPrinted;
    r.expected = Expectation::FailAsPrinted;
    r
}

fn corrected(mut r: IdentityRecord) -> IdentityRecord {
    r.variant = Variant::Corrected;
    r
}

fn oracle(mut r: IdentityRecord, bound: usize) -> IdentityRecord {
    r.oracle_bound = Some(bound);
    r
}

// Partial Bell polynomial identities relating consecutive tower levels:
// (k-1)! B_{n,k}(upper) = sum_{i=k}^{n} C(i,k) (i-1)! B_{n,j}(lower), with
// j = k as printed and j = i once the index is made consistent.
fn bell_evaluator(upper: BellInput, lower: BellInput, max_n: usize, inner_index_is_i: bool) -> Result<Evaluator> {
    let upper = BellTable::new(max_n, &upper)?;
    let lower = BellTable::new(max_n, &lower)?;
    Ok(Box::new(move |n, k| {
        let k = pair(k);
        let lhs = factorial(k as u64 - 1) * upper.get(n, k);
        let rhs = (k..=n)
            .map(|i| {
                let j = if inner_index_is_i { i } else { k };
                binom(i as i64, k as i64) * factorial(i as u64 - 1) * lower.get(n, j)
            })
            .sum();
        Ok((lhs, rhs))
    }))
}

fn bell_args(seq: &[BigInt]) -> BellInput {
    BellInput::factorial_weighted(seq.len(), |i| seq[i - 1].clone())
}

fn prepare_bell_fine(inner_index_is_i: bool, max_n: usize) -> Result<Evaluator> {
    let t = tower(max_n)?;
    bell_evaluator(
        bell_args(t.level(1)?.values()),
        bell_args(t.level(0)?.values()),
        max_n,
        inner_index_is_i,
    )
}

/// `(C_1, 2! C_1, 3! C_3, 4! C_4, ...)`, the argument list exactly as printed.
fn printed_catalan_args(len: usize) -> BellInput {
    BellInput::factorial_weighted(len, |i| if i == 2 { catalan(1) } else { catalan(i as u64) })
}

fn prepare_bell_catalan(fixed: bool, max_n: usize) -> Result<Evaluator> {
    let len = max_n.max(1);
    let upper = if fixed {
        bell_args(catalan_prefix(len, 1).values())
    } else {
        printed_catalan_args(len)
    };
    bell_evaluator(upper, bell_args(catalan_prefix(len, 0).values()), max_n, fixed)
}

fn alternating_shapiro_sum(n: usize, k: usize, base: i64) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    (k..=n)
        .map(|i| ipow(base, (i - k) as u32) * binom(i, k) * binom(2 * n, n - i))
        .sum()
}

/// `sum_{i=1}^{n} base^(i-1) i C(2n, n-i)`.
fn weighted_central_sum(n: usize, base: i64) -> BigInt {
    let n = n as i64;
    (1..=n)
        .map(|i| ipow(base, (i - 1) as u32) * i * binom(2 * n, n - i))
        .sum()
}

fn lcm_up_to(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)))
}

/// `(n-k-1)! sum_{i=0}^{k-1} (k-i) C(k,i) C(2n-2k, lower(i))` against `k prod_{i=1}^{n-k-1} (n+i)`.
fn exotic8(n: usize, k: usize, lower: impl Fn(i64, i64, i64) -> i64) -> (BigInt, BigInt) {
    let lhs = BigInt::from(k) * (1..n - k).fold(BigInt::one(), |acc, i| acc * (n + i));
    let (n_, k_) = (n as i64, k as i64);
    let sum: BigInt = (0..k_)
        .map(|i| (k_ - i) * binom(k_, i) * binom(2 * n_ - 2 * k_, lower(n_, k_, i)))
        .sum();
    (lhs, factorial((n - k - 1) as u64) * sum)
}

fn triangle_evaluator(formula: fn(usize, usize) -> Result<BigInt>, triangle: Triangle) -> Evaluator {
    Box::new(move |n, k| {
        let k = pair(k);
        Ok((formula(n, k)?, triangle[(n, k)].clone()))
    })
}

fn hills_evaluator(m: usize, f: Formulas, max_n: usize) -> Result<Evaluator> {
    let histograms = (1..=max_n)
        .map(|n| HillHistogram::new(n - 1))
        .collect::<Result<Vec<_>>>()?;
    let g = f.g(m);
    Ok(Box::new(move |n, k| {
        let k = pair(k);
        Ok((histograms[n - 1].colored(k - 1, m as u32), g(n, k)?))
    }))
}

fn ternary_histograms(max_n: usize) -> Result<Vec<Vec<u64>>> {
    (1..=max_n).map(ternary_histogram).collect()
}

/// Every identity and proposition-level check, in reporting order.
pub fn standard_records() -> Vec<IdentityRecord> {
    let ternary_bound = MAX_TERNARY_LEN.div_ceil(2);
    let hills_bound = MAX_SEMILENGTH + 1;
    let ballot_bound = MAX_BALLOT_LEN / 2 + 1;
    vec![
        printed_typo(record(
            "I-bell-fine.as_printed",
            "(k-1)! B_{n,k}(C_0, 2!C_1, ...) = sum_{i=k}^n C(i,k) (i-1)! B_{n,k}(F_1, 2!F_2, ...)",
            Shape::Pair,
            cell_1kn,
            |_, max_n| prepare_bell_fine(false, max_n),
        )),
        corrected(record(
            "I-bell-fine.corrected",
            "(k-1)! B_{n,k}(C_0, 2!C_1, ...) = sum_{i=k}^n C(i,k) (i-1)! B_{n,i}(F_1, 2!F_2, ...)",
            Shape::Pair,
            cell_1kn,
            |_, max_n| prepare_bell_fine(true, max_n),
        )),
        printed_typo(record(
            "I-bell-catalan.as_printed",
            "(k-1)! B_{n,k}(C_1, 2!C_1, 3!C_3, ...) = sum_{i=k}^n C(i,k) (i-1)! B_{n,k}(C_0, 2!C_1, ...)",
            Shape::Pair,
            cell_1kn,
            |_, max_n| prepare_bell_catalan(false, max_n),
        )),
        corrected(record(
            "I-bell-catalan.corrected",
            "(k-1)! B_{n,k}(C_1, 2!C_2, 3!C_3, ...) = sum_{i=k}^n C(i,k) (i-1)! B_{n,i}(C_0, 2!C_1, ...)",
            Shape::Pair,
            cell_1kn,
            |_, max_n| prepare_bell_catalan(true, max_n),
        )),
        record(
            "I-vanish",
            "n < k: sum_{i=0}^k (-1)^(i+n) C(k,i) prod_{t<n} (i-2t) = 0",
            Shape::Pair,
            |n, k| n < k,
            |_, _| {
                Ok(Box::new(|n, k| {
                    let (n, k) = (n as i64, pair(k) as i64);
                    let lhs = (0..=k)
                        .map(|i| {
                            let prod = (0..n).fold(BigInt::one(), |acc, t| acc * (i - 2 * t));
                            sign(i + n) * binom(k, i) * prod
                        })
                        .sum();
                    Ok((lhs, BigInt::zero()))
                }))
            },
        ),
        record(
            "I-vertical",
            "n > k > 1: k/(n-k) C(2n-k-1,n) = sum_{i=k-1}^{n-2} i/(n-i-1) C(2n-3-i,n-1) + 1 (denominators cleared)",
            Shape::Pair,
            |n, k| 1 < k && k < n,
            |_, _| {
                Ok(Box::new(|n, k| {
                    let k = pair(k);
                    // Every denominator divides lcm(1..=n-k).
                    let d = lcm_up_to(n - k);
                    let (n_, k_) = (n as i64, k as i64);
                    let lhs = k_ * binom(2 * n_ - k_ - 1, n_) * (&d / (n_ - k_));
                    let mut rhs = d.clone();
                    for i in k_ - 1..=n_ - 2 {
                        rhs += i * binom(2 * n_ - 3 - i, n_ - 1) * (&d / (n_ - i - 1));
                    }
                    Ok((lhs, rhs))
                }))
            },
        ),
        oracle(
            record(
                "I-card-ballot",
                "ballot words with n-1 ones and k-1 zeros are counted by A(n,k)",
                Shape::Pair,
                cell_1kn,
                |f, _| {
                    Ok(Box::new(move |n, k| {
                        let k = pair(k);
                        Ok((count_ballot(n, k)?, f.mirror_a(n, k)?))
                    }))
                },
            ),
            ballot_bound,
        ),
        record(
            "I-binom",
            "C(2n, n+k) = sum_{i=k}^n C(i,k) C(2n-i-1, n-1)",
            Shape::Pair,
            cell_1kn,
            |_, _| {
                Ok(Box::new(|n, k| {
                    let (n, k) = (n as i64, pair(k) as i64);
                    let rhs = (k..=n).map(|i| binom(i, k) * binom(2 * n - i - 1, n - 1)).sum();
                    Ok((binom(2 * n, n + k), rhs))
                }))
            },
        ),
        oracle(
            record(
                "I-card-ternary",
                "valid ternary words of length 2n-1 with k-1 twos are counted by g4(n,k)",
                Shape::Pair,
                cell_1kn,
                |f, max_n| {
                    let hist = ternary_histograms(max_n)?;
                    Ok(Box::new(move |n, k| {
                        let k = pair(k);
                        Ok((BigInt::from(hist[n - 1][k - 1]), (f.g4)(n, k)?))
                    }))
                },
            ),
            ternary_bound,
        ),
        oracle(
            record(
                "I-card-ternary-total",
                "valid ternary words of length 2n-1 are counted by f4(n)",
                Shape::Single,
                n_at_least_1,
                |_, max_n| {
                    let hist = ternary_histograms(max_n)?;
                    let t = tower(max_n)?;
                    Ok(Box::new(move |n, _| {
                        let total: u64 = hist[n - 1].iter().sum();
                        Ok((BigInt::from(total), t.level(4)?[n].clone()))
                    }))
                },
            ),
            ternary_bound,
        ),
        record(
            "I-fine-alt",
            "n F_n = sum_{i=1}^n (-2)^(i-1) i C(2n, n-i)",
            Shape::Single,
            n_at_least_1,
            |_, max_n| {
                let t = tower(max_n)?;
                Ok(Box::new(move |n, _| {
                    Ok((BigInt::from(n) * &t.level(0)?[n], weighted_central_sum(n, -2)))
                }))
            },
        ),
        record(
            "I-central-alt",
            "C(2n-2, n-1) = sum_{i=1}^n (-1)^(i-1) i C(2n, n-i)",
            Shape::Single,
            n_at_least_1,
            |_, _| {
                Ok(Box::new(|n, _| {
                    let n_ = n as i64;
                    Ok((binom(2 * n_ - 2, n_ - 1), weighted_central_sum(n, -1)))
                }))
            },
        ),
        printed_typo(record(
            "I-g2-alt.as_printed",
            "n > k: C(2n-k-1, n) = (n-k)/k sum_{i=k}^n (-1)^(i-k) C(i,k) C(2n, n-i) (k cleared)",
            Shape::Pair,
            cell_k_below_n,
            |_, _| {
                Ok(Box::new(|n, k| {
                    let k = pair(k);
                    let (n_, k_) = (n as i64, k as i64);
                    let lhs = k_ * binom(2 * n_ - k_ - 1, n_);
                    Ok((lhs, (n_ - k_) * alternating_shapiro_sum(n, k, -1)))
                }))
            },
        )),
        corrected(record(
            "I-g2-alt.corrected",
            "n > k: C(2n-k-1, n) = (n-k)/n sum_{i=k}^n (-1)^(i-k) C(i,k) C(2n, n-i) (n cleared)",
            Shape::Pair,
            cell_k_below_n,
            |_, _| {
                Ok(Box::new(|n, k| {
                    let k = pair(k);
                    let (n_, k_) = (n as i64, k as i64);
                    let lhs = n_ * binom(2 * n_ - k_ - 1, n_);
                    Ok((lhs, (n_ - k_) * alternating_shapiro_sum(n, k, -1)))
                }))
            },
        )),
        record(
            "I-catalan-alt",
            "n C_{n-1} = sum_{i=1}^n (-1)^(i-1) i C(2n, n-i)",
            Shape::Single,
            n_at_least_1,
            |_, _| {
                Ok(Box::new(|n, _| {
                    Ok((BigInt::from(n) * catalan(n as u64 - 1), weighted_central_sum(n, -1)))
                }))
            },
        ),
        printed_typo(record(
            "I-exotic-8.as_printed",
            "k prod_{i=1}^{n-k-1} (n+i) = (n-k-1)! sum_{i=0}^{k-1} (k-i) C(k,i) C(2n-2k, n+2k-i)",
            Shape::Pair,
            cell_k_below_n,
            |_, _| Ok(Box::new(|n, k| Ok(exotic8(n, pair(k), |n, k, i| n + 2 * k - i)))),
        )),
        corrected(record(
            "I-exotic-8.corrected",
            "k prod_{i=1}^{n-k-1} (n+i) = (n-k-1)! sum_{i=0}^{k-1} (k-i) C(k,i) C(2n-2k, n-i)",
            Shape::Pair,
            cell_k_below_n,
            |_, _| Ok(Box::new(|n, k| Ok(exotic8(n, pair(k), |n, _, i| n - i)))),
        )),
        record(
            "I-exotic-10",
            "sum_{i=k}^n i C(i-1,k-1) C(2n,n-i) = 2^(n-k)/(n-1)! sum_{i=1}^k (-1)^(k+i) C(k,i) i(i+2)...(i+2n-2) ((n-1)! cleared)",
            Shape::Pair,
            cell_1kn,
            |_, _| {
                Ok(Box::new(|n, k| {
                    let k = pair(k);
                    let (n_, k_) = (n as i64, k as i64);
                    let left: BigInt = (k_..=n_)
                        .map(|i| i * binom(i - 1, k_ - 1) * binom(2 * n_, n_ - i))
                        .sum();
                    let right: BigInt = (1..=k_)
                        .map(|i| sign(k_ + i) * binom(k_, i) * step_two_rising(i, n))
                        .sum();
                    Ok((factorial(n as u64 - 1) * left, ipow(2, (n - k) as u32) * right))
                }))
            },
        ),
        record(
            "P-segner",
            "the invert transform of C_0, C_1, ... is C_1, C_2, ...",
            Shape::Single,
            n_at_least_1,
            |_, max_n| {
                let len = max_n.max(1);
                let inverted = invert_transform(&catalan_prefix(len, 0), len)?;
                Ok(Box::new(move |n, _| Ok((inverted[n].clone(), catalan(n as u64)))))
            },
        ),
        record(
            "P-cik",
            "1 <= k < n: g2(n+1,k+1) = g2(n+1,k+2) + g2(n,k)",
            Shape::Pair,
            cell_k_below_n,
            |f, _| {
                Ok(Box::new(move |n, k| {
                    let k = pair(k);
                    Ok(((f.g2)(n + 1, k + 1)?, (f.g2)(n + 1, k + 2)? + (f.g2)(n, k)?))
                }))
            },
        ),
        record(
            "P-rr1",
            "n, k > 1: g2(n,k) = sum_{i=k-1}^{n-2} g2(n-1,i) + 1",
            Shape::Pair,
            |n, k| 1 < k && k <= n,
            |f, _| {
                Ok(Box::new(move |n, k| {
                    let k = pair(k);
                    let mut rhs = BigInt::one();
                    for i in k - 1..=n - 2 {
                        rhs += (f.g2)(n - 1, i)?;
                    }
                    Ok(((f.g2)(n, k)?, rhs))
                }))
            },
        ),
        record(
            "P-mirror",
            "A(n,1) = 1, A(n,n) = C_{n-1}, A(n,k) = A(n,k-1) + A(n-1,k) for 1 < k < n",
            Shape::Pair,
            cell_1kn,
            |f, _| {
                Ok(Box::new(move |n, k| {
                    let k = pair(k);
                    let lhs = f.mirror_a(n, k)?;
                    let rhs = if k == 1 {
                        BigInt::one()
                    } else if k == n {
                        catalan(n as u64 - 1)
                    } else {
                        f.mirror_a(n, k - 1)? + f.mirror_a(n - 1, k)?
                    };
                    Ok((lhs, rhs))
                }))
            },
        ),
        record(
            "P-mirror-subdiagonal",
            "n >= 2: A(n,n-1) = C_{n-1}",
            Shape::Single,
            n_at_least_2,
            |f, _| Ok(Box::new(move |n, _| Ok((f.mirror_a(n, n - 1)?, catalan(n as u64 - 1))))),
        ),
        record(
            "P-f3",
            "f3(n) = C(2n-1, n)",
            Shape::Single,
            n_at_least_1,
            |f, max_n| {
                let t = tower(max_n)?;
                Ok(Box::new(move |n, _| Ok(((f.f3)(n)?, t.level(3)?[n].clone()))))
            },
        ),
        record(
            "P-euler",
            "n > 1: C_{n-1} = 2^(n-1) (2n-3)!! / n!",
            Shape::Single,
            n_at_least_2,
            |f, _| Ok(Box::new(move |n, _| Ok(((f.euler_catalan)(n)?, catalan(n as u64 - 1))))),
        ),
        record(
            "P-pr1",
            "double-factorial form of g2 equals the binomial form",
            Shape::Pair,
            cell_1kn,
            |f, _| Ok(Box::new(move |n, k| Ok(((f.g2_dfact)(n, pair(k))?, (f.g2)(n, pair(k))?)))),
        ),
        record(
            "P-g2-alternating",
            "alternating-sum form of g2 (from G2 = G3 L^-1) equals the binomial form",
            Shape::Pair,
            cell_1kn,
            |f, _| Ok(Box::new(move |n, k| Ok(((f.g2_alternating)(n, pair(k))?, (f.g2)(n, pair(k))?)))),
        ),
        record(
            "P-cc2",
            "k < n: g2(n,k) = sum_{i=0}^{k-1} C(k,i) g3(n-k, k-i)",
            Shape::Pair,
            cell_k_below_n,
            |f, _| Ok(Box::new(move |n, k| Ok(((f.g2_from_g3)(n, pair(k))?, (f.g2)(n, pair(k))?)))),
        ),
        record(
            "P-g1",
            "explicit g1 equals the convolution triangle of the Fine numbers",
            Shape::Pair,
            cell_1kn,
            |f, max_n| Ok(triangle_evaluator(f.g1, tower(max_n)?.triangle(1)?)),
        ),
        record(
            "P-g2",
            "closed g2 equals the convolution triangle of C_0, C_1, ...",
            Shape::Pair,
            cell_1kn,
            |f, max_n| Ok(triangle_evaluator(f.g2, tower(max_n)?.triangle(2)?)),
        ),
        record(
            "P-bnk",
            "g3(n,k) = k/n C(2n, n-k) equals the convolution triangle of C_1, C_2, ...",
            Shape::Pair,
            cell_1kn,
            |f, max_n| Ok(triangle_evaluator(f.g3, tower(max_n)?.triangle(3)?)),
        ),
        record(
            "P-ehe",
            "explicit g4 equals the convolution triangle of f3",
            Shape::Pair,
            cell_1kn,
            |f, max_n| Ok(triangle_evaluator(f.g4, tower(max_n)?.triangle(4)?)),
        ),
        oracle(
            record(
                "T-hills-g1",
                "Dyck paths of semilength n-1 with exactly k-1 hills are counted by g1(n,k)",
                Shape::Pair,
                cell_1kn,
                |f, max_n| hills_evaluator(1, f, max_n),
            ),
            hills_bound,
        ),
        oracle(
            record(
                "T-hills-g2",
                "paths with hills in 2 colours, k-1 of colour 2, are counted by g2(n,k)",
                Shape::Pair,
                cell_1kn,
                |f, max_n| hills_evaluator(2, f, max_n),
            ),
            hills_bound,
        ),
        oracle(
            record(
                "T-hills-g3",
                "paths with hills in 3 colours, k-1 of colour 3, are counted by g3(n,k)",
                Shape::Pair,
                cell_1kn,
                |f, max_n| hills_evaluator(3, f, max_n),
            ),
            hills_bound,
        ),
        oracle(
            record(
                "T-hills-g4",
                "paths with hills in 4 colours, k-1 of colour 4, are counted by g4(n,k)",
                Shape::Pair,
                cell_1kn,
                |f, max_n| hills_evaluator(4, f, max_n),
            ),
            hills_bound,
        ),
        oracle(
            record(
                "T-fine-hill-free",
                "hill-free Dyck paths of semilength n-1 are counted by F_n",
                Shape::Single,
                n_at_least_1,
                |_, max_n| {
                    let t = tower(max_n)?;
                    Ok(Box::new(move |n, _| {
                        let free = HillHistogram::new(n - 1)?.paths_with_hills(0);
                        Ok((BigInt::from(free), t.level(0)?[n].clone()))
                    }))
                },
            ),
            hills_bound,
        ),
    ]
}
