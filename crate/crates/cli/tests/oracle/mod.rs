//! Naive reference evaluations used to cross-check the library.
//!
//! Every function here works on a plain `Vec<Vec<f64>>`, enumerates triads,
//! cells and pairs literally, and uses direct products instead of
//! log-domain sums. Nothing is shared with `pcmkit_core`.

#![allow(dead_code, clippy::needless_range_loop)]

pub type Raw = Vec<Vec<f64>>;

fn order(a: &Raw) -> usize {
    a.len()
}

fn triads(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i < j && j < k {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

pub fn k(a: &Raw) -> f64 {
    let mut best: f64 = 0.0;
    for (i, j, k) in triads(order(a)) {
        let first = (1.0 - a[i][k] / (a[i][j] * a[j][k])).abs();
        let second = (1.0 - (a[i][j] * a[j][k]) / a[i][k]).abs();
        let local = if first < second { first } else { second };
        if local > best {
            best = local;
        }
    }
    best
}

/// All indirect estimates `a_ik * a_kj`, duplicates kept.
pub fn indirect(a: &Raw, i: usize, j: usize) -> Vec<f64> {
    (0..order(a)).map(|k| a[i][k] * a[k][j]).collect()
}

fn max_min(values: &[f64]) -> (f64, f64) {
    let mut hi = values[0];
    let mut lo = values[0];
    for &v in values {
        if v > hi {
            hi = v;
        }
        if v < lo {
            lo = v;
        }
    }
    (hi, lo)
}

pub fn ai(a: &Raw) -> f64 {
    let n = order(a);
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i < j {
                let (hi, lo) = max_min(&indirect(a, i, j));
                sum += (hi - lo) / ((1.0 + hi) * (1.0 + lo));
            }
        }
    }
    2.0 / (n as f64 * (n as f64 - 1.0)) * sum
}

pub fn ai_star(a: &Raw) -> f64 {
    let n = order(a);
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (hi, lo) = max_min(&indirect(a, i, j));
            sum += hi - lo;
        }
    }
    sum / (n as f64 * (n as f64 - 1.0))
}

pub fn g(a: &Raw, i: usize, j: usize) -> f64 {
    let n = order(a);
    let mut product = 1.0;
    for k in 0..n {
        product *= a[i][k] * a[k][j];
    }
    product.powf(1.0 / n as f64)
}

pub fn ci_h(a: &Raw) -> f64 {
    let n = order(a);
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            sum += a[i][j] * g(a, j, i);
        }
    }
    sum / (n * n) as f64
}

pub fn cci(a: &Raw) -> f64 {
    let n = order(a);
    let mut total = 0.0;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            let mut column_sq = 0.0;
            for k in 0..n {
                column_sq += a[k][j] * a[k][j];
            }
            row += a[i][j] / column_sq.sqrt();
        }
        total += row * row;
    }
    total.sqrt() / n as f64
}

fn re_parts(a: &Raw) -> (f64, f64) {
    let n = order(a);
    let p = |i: usize, j: usize| a[i][j].ln();
    let d = |i: usize| {
        let mut s = 0.0;
        for k in 0..n {
            s += p(i, k);
        }
        s / n as f64
    };
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    for i in 0..n {
        for j in 0..n {
            let e = p(i, j) - d(i) + d(j);
            numerator += e * e;
            denominator += p(i, j) * p(i, j);
        }
    }
    (numerator, denominator)
}

pub fn re(a: &Raw) -> Option<f64> {
    let (num, den) = re_parts(a);
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

pub fn re_star(a: &Raw) -> f64 {
    re_parts(a).0
}

pub fn i_star(a: &Raw) -> f64 {
    let mut sum = 0.0;
    for (i, j, k) in triads(order(a)) {
        let x = a[i][k] / (a[i][j] * a[j][k]);
        sum += x + 1.0 / x - 2.0;
    }
    sum
}

pub fn i_not6(a: &Raw) -> f64 {
    let n = order(a);
    let mut h = 0;
    let mut greatest = f64::NEG_INFINITY;
    for i in 0..n {
        for j in 0..n {
            if i != j && a[i][j] > greatest {
                greatest = a[i][j];
                h = i;
            }
        }
    }
    let mut row_min = f64::INFINITY;
    for j in 0..n {
        if j != h && a[h][j] - 1.0 < row_min {
            row_min = a[h][j] - 1.0;
        }
    }
    let m = 1.0 + if row_min > 0.0 { row_min } else { 0.0 };
    i_star(a) * m
}

/// Upper triangle from `upper` (row-major, i < j), reciprocal below.
pub fn from_upper(n: usize, upper: &[f64]) -> Raw {
    let mut a = vec![vec![1.0; n]; n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = *it.next().expect("enough upper entries");
            a[i][j] = v;
            a[j][i] = 1.0 / v;
        }
    }
    a
}
