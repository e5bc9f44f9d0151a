//! Exact streaming dynamic programming for the two-edge laws: the
//! distribution of the minority edge count `Z_k`, its limit `Z_inf`, and
//! the attraction time `T`.
//!
//! Two laws are supported: the *pair* law (two vertices joined by two
//! parallel edges; one edge count increments per step) and the *path* law
//! (a three-vertex path observed at center visits; counts increment in
//! steps of two). `T` is the total edge count immediately after the last
//! traversal of the non-attracting edge, with `T = a + b` when that edge
//! is never traversed at all. For the path law with initial counts of
//! equal parity, the stride-2 law coincides with a pair law under the
//! reindexed weight `w'(a+j) = w(a+2j)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::series::{self, CertifiedValue};
use crate::weights::WeightFunction;

/// Largest horizon accepted before reporting a resource error (the
/// engine keeps several O(K) vectors).
const MAX_HORIZON: u64 = 20_000_000;
/// Log-space floor: product factors certified below this are treated as
/// zero mass (well under any reported precision).
const LN_FLOOR: f64 = -745.0;

/// Which two-edge law is being computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum LawKind {
    /// Two parallel edges; counts increment by one per step.
    Pair,
    /// Three-vertex path observed at center visits; counts increment by
    /// two per observed step.
    Path,
}

/// A two-edge law with initial edge counts `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct TwoEdgeLaw {
    pub kind: LawKind,
    pub a: u64,
    pub b: u64,
}

impl TwoEdgeLaw {
    pub fn pair(a: u64, b: u64) -> Result<Self> {
        Self::new(LawKind::Pair, a, b)
    }

    pub fn path(a: u64, b: u64) -> Result<Self> {
        Self::new(LawKind::Path, a, b)
    }

    fn new(kind: LawKind, a: u64, b: u64) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::Argument(format!(
                "initial counts must be >= 1, got ({a},{b})"
            )));
        }
        Ok(TwoEdgeLaw { kind, a, b })
    }

    /// Initial total edge count.
    pub fn t0(&self) -> u64 {
        self.a + self.b
    }

    /// Count increment per observed step (1 for pair, 2 for path).
    pub fn step(&self) -> u64 {
        match self.kind {
            LawKind::Pair => 1,
            LawKind::Path => 2,
        }
    }

    /// Parses `pair:a=1,b=1` or `path:a=1,b=2` (alias `path2`).
    pub fn parse_spec(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut a = 1u64;
        let mut b = 1u64;
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad law parameter `{part}`")))?;
            let v: u64 = val
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{val}` in law spec")))?;
            match key {
                "a" => a = v,
                "b" => b = v,
                _ => return Err(Error::Parse(format!("unknown law parameter `{key}`"))),
            }
        }
        match name {
            "pair" => Self::pair(a, b),
            "path" | "path2" => Self::path(a, b),
            _ => Err(Error::Parse(format!("unknown law `{name}`"))),
        }
    }
}

impl std::str::FromStr for TwoEdgeLaw {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_spec(s)
    }
}

impl std::fmt::Display for TwoEdgeLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self.kind {
            LawKind::Pair => "pair",
            LawKind::Path => "path",
        };
        write!(f, "{name}:a={},b={}", self.a, self.b)
    }
}

/// Result table for the exact computations.
#[derive(Debug, Clone)]
pub struct ExactTable {
    pub law: TwoEdgeLaw,
    pub horizon: u64,
    /// Snapshot rows `(k, row)` with `row[l] = P(Z_k = l)`.
    pub z_rows: Vec<(u64, Vec<f64>)>,
    /// `t_pmf[t] = P(T = t)` indexed by absolute total count `t`.
    pub t_pmf: Vec<f64>,
    /// Upper bound on the probability mass beyond the horizon.
    pub t_mass_remainder_upper: f64,
    /// `zinf[l]` encloses `P(Z_inf = l)` (empty unless requested).
    pub zinf: Vec<CertifiedValue>,
}

impl ExactTable {
    /// Total T mass captured within the horizon.
    pub fn t_mass(&self) -> f64 {
        self.t_pmf.iter().sum()
    }
}

/// Cached log-weights `lnw[k] = ln w(k)` for `1 <= k <= max`.
fn ln_w_cache(w: &WeightFunction, max: u64) -> Result<Vec<f64>> {
    let mut lnw = vec![f64::NAN; (max + 1) as usize];
    for (k, slot) in lnw.iter_mut().enumerate().skip(1) {
        *slot = w.ln_w(k as u64)?;
    }
    Ok(lnw)
}

/// Probability that the edge with count `lo` is chosen over the edge
/// with count `hi`: `w(lo) / (w(lo) + w(hi))`, from cached logs.
#[inline]
fn choose_prob(lnw: &[f64], lo: u64, hi: u64) -> f64 {
    1.0 / (1.0 + (lnw[hi as usize] - lnw[lo as usize]).exp())
}

/// Advances the minority-count distribution one observed step, from
/// total count `k` to `k + step`. `row[l] = P(Z_k = l)`.
fn advance_row(row: &[f64], out: &mut [f64], k: u64, step: u64, lnw: &[f64]) {
    out.iter_mut().for_each(|x| *x = 0.0);
    for (li, &p) in row.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let ell = li as u64;
        if 2 * ell == k {
            // Tie: whichever edge steps, the other remains the minority.
            out[li] += p;
        } else {
            let ps = choose_prob(lnw, ell, k - ell);
            // Minority edge steps; the new minority is the smaller of
            // the advanced count and the untouched majority count.
            let new_min = (ell + step).min(k - ell) as usize;
            out[new_min] += p * ps;
            out[li] += p * (1.0 - ps);
        }
    }
}

fn check_horizon(law: TwoEdgeLaw, k_max: u64) -> Result<()> {
    if k_max < law.t0() {
        return Err(Error::OutOfRange(format!(
            "horizon {k_max} below initial total {}",
            law.t0()
        )));
    }
    if k_max > MAX_HORIZON {
        return Err(Error::Resource(format!(
            "horizon {k_max} exceeds supported maximum {MAX_HORIZON}"
        )));
    }
    Ok(())
}

/// Exact distribution of the minority count `Z_k` for `k` up to `k_max`,
/// with snapshot rows stored at the requested `k` values (the final row
/// is always included). Rows are computed by the exact forward
/// recursion with a rolling buffer; no renormalization is applied, so
/// row-sum drift is a genuine accuracy signal.
pub fn z_dist(
    law: TwoEdgeLaw,
    w: &WeightFunction,
    k_max: u64,
    snapshots: &[u64],
) -> Result<ExactTable> {
    check_horizon(law, k_max)?;
    let step = law.step();
    let t0 = law.t0();
    let lnw = ln_w_cache(w, k_max.max(t0) + step)?;
    let width = (k_max / 2 + step + 1) as usize;
    let mut row = vec![0.0f64; width];
    let mut next = vec![0.0f64; width];
    row[law.a.min(law.b) as usize] = 1.0;
    let mut z_rows: Vec<(u64, Vec<f64>)> = Vec::new();
    let mut k = t0;
    loop {
        if snapshots.contains(&k) || k + step > k_max {
            z_rows.push((k, row.clone()));
        }
        if k + step > k_max {
            break;
        }
        advance_row(&row, &mut next, k, step, &lnw);
        std::mem::swap(&mut row, &mut next);
        k += step;
    }
    Ok(ExactTable {
        law,
        horizon: k_max,
        z_rows,
        t_pmf: Vec::new(),
        t_mass_remainder_upper: 1.0,
        zinf: Vec::new(),
    })
}

/// Certified `P(Z_inf = l)` for `l <= l_max`, via the exact identity
/// `P(Z_inf = l) = P(Z_K = l) * W_K(l)` for `l < K/2`, where `W_K` is
/// the certified attraction product (stride matching the law).
pub fn z_inf(law: TwoEdgeLaw, w: &WeightFunction, l_max: u64) -> Result<Vec<CertifiedValue>> {
    let t0 = law.t0();
    let mut k = (2 * l_max + 2).max(t0);
    if (k - t0) % law.step() != 0 {
        k += 1;
    }
    let table = z_dist(law, w, k, &[])?;
    let (_, row) = table.z_rows.last().expect("final row always stored");
    let mut out = Vec::with_capacity((l_max + 1) as usize);
    for ell in 0..=l_max {
        let p = if (ell as usize) < row.len() {
            row[ell as usize]
        } else {
            0.0
        };
        if ell == 0 || p == 0.0 {
            out.push(CertifiedValue {
                ln_value: f64::NEG_INFINITY,
                rel_halfwidth: 0.0,
            });
            continue;
        }
        let wp = series::w_product(w, k, ell, law.step())?;
        out.push(CertifiedValue {
            ln_value: p.ln() + wp.ln_value,
            rel_halfwidth: wp.rel_halfwidth,
        });
    }
    Ok(out)
}

/// Exact attraction-time distribution up to the horizon.
pub fn t_dist(law: TwoEdgeLaw, w: &WeightFunction, k_max: u64) -> Result<ExactTable> {
    t_dist_with(law, w, k_max, |_, _, _, _| ())
}

/// As [`t_dist`], additionally reporting the two per-`(k,l)` conditional
/// terms of the decomposition to the visitor:
/// `visit(k, l, term_minority, term_majority)` where `term_minority` is
/// the probability (given `Z_k = l`, no tie) that the minority edge
/// steps once more and then never again, and `term_majority` the
/// probability that the majority edge steps once more and then never
/// again.
pub fn t_dist_with(
    law: TwoEdgeLaw,
    w: &WeightFunction,
    k_max: u64,
    mut visit: impl FnMut(u64, u64, f64, f64),
) -> Result<ExactTable> {
    check_horizon(law, k_max)?;
    let step = law.step();
    let t0 = law.t0();
    let lnw = ln_w_cache(w, k_max + 2 * step + 2)?;

    // Prefix sums of ln w over each stride class, for the O(1) upper
    // bound on the majority-freeze product.
    let mut lnw_prefix = vec![0.0f64; lnw.len()];
    for i in 1..lnw.len() {
        let base = if i as u64 > step { lnw_prefix[i - step as usize] } else { 0.0 };
        lnw_prefix[i] = base + lnw[i];
    }
    // Sum of ln w(j) for j = from, from+step, ..., while j <= to.
    let stride_lnw_sum = |from: u64, to: u64| -> f64 {
        if to < from {
            return 0.0;
        }
        let last = to - (to - from) % step;
        let below = if from > step {
            lnw_prefix[(from - step) as usize]
        } else {
            0.0
        };
        lnw_prefix[last as usize] - below
    };

    // Evaluates ln of the product in which the count `frozen` stays
    // fixed while the opposing count grows from `grow0` in strides,
    // returning the log-floor sentinel when a cheap bound already puts
    // the product below any reportable mass.
    let majority_freeze = |total: u64, frozen: u64, grow0: u64| -> Result<f64> {
        // Each factor with a growing count below `frozen` contributes at
        // least ln(w(frozen)/w(j)) to the negative log.
        let mut cheap = 0.0f64;
        if frozen > grow0 {
            let n_below = (frozen - grow0).div_ceil(step);
            cheap = n_below as f64 * lnw[frozen as usize]
                - stride_lnw_sum(grow0, frozen - 1);
        }
        if cheap > -LN_FLOOR {
            return Ok(f64::NEG_INFINITY);
        }
        Ok(series::w_product(w, total, frozen, step)?.ln_value)
    };

    let width = (k_max / 2 + step + 1) as usize;
    let mut row = vec![0.0f64; width];
    let mut next = vec![0.0f64; width];
    row[law.a.min(law.b) as usize] = 1.0;

    // Column m holds ln W_{k+step}(m) for the current k, advanced by the
    // exact one-step relation and anchored by one certified product when
    // the column first becomes relevant.
    let mut col = vec![f64::NAN; width + step as usize + 1];

    let mut t_pmf = vec![0.0f64; (k_max + step + 1) as usize];
    t_pmf[t0 as usize] = (series::w_product(w, t0, law.a, step)?.value())
        + series::w_product(w, t0, law.b, step)?.value();

    let mut k = t0;
    while k <= k_max {
        // Advance or anchor every column needed at this k.
        let m_top = k / 2 + step;
        for m in 2..=m_top {
            let mi = m as usize;
            if col[mi].is_nan() {
                col[mi] = series::w_product(w, k + step, m, step)?.ln_value;
            } else {
                col[mi] += (lnw[m as usize] - lnw[(k - m) as usize]).exp().ln_1p();
            }
        }

        let mut mass = 0.0f64;
        for (li, &p) in row.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let ell = li as u64;
            if 2 * ell == k {
                // Tie: the stepping edge freezes one stride higher and
                // the untouched edge attracts.
                mass += p * col[(ell + step) as usize].exp();
            } else {
                let ps = choose_prob(&lnw, ell, k - ell);
                let term_minority = ps * col[(ell + step) as usize].exp();
                let lw = majority_freeze(k + step, k + step - ell, ell)?;
                let term_majority = (1.0 - ps) * if lw > LN_FLOOR { lw.exp() } else { 0.0 };
                visit(k, ell, term_minority, term_majority);
                mass += p * (term_minority + term_majority);
            }
        }
        t_pmf[(k + step) as usize] = mass;

        if k + step > k_max {
            // Row advance would exceed the cache; pmf above already
            // covers T = k + step.
            break;
        }
        advance_row(&row, &mut next, k, step, &lnw);
        std::mem::swap(&mut row, &mut next);
        k += step;
    }

    let captured: f64 = t_pmf.iter().sum();
    Ok(ExactTable {
        law,
        horizon: k_max,
        z_rows: vec![(k.min(k_max), row)],
        t_pmf,
        t_mass_remainder_upper: (1.0 - captured).max(0.0),
        zinf: Vec::new(),
    })
}

/// Encloses the survival probability `P(T > n)`.
///
/// The upper end drops only the mass at or below `n`; the lower end
/// counts only the mass strictly above `n` that the table captured, so
/// the gap never exceeds the table's remainder bound.
pub fn t_tail(table: &ExactTable, n: u64) -> Result<(f64, f64)> {
    if table.t_pmf.is_empty() {
        return Err(Error::Argument("table has no T distribution".into()));
    }
    if n as usize >= table.t_pmf.len() + 1 && n > table.horizon {
        // Allowed: everything captured is below n; lower bound is 0.
    }
    let below: f64 = table
        .t_pmf
        .iter()
        .take(((n + 1) as usize).min(table.t_pmf.len()))
        .sum();
    let above: f64 = table
        .t_pmf
        .iter()
        .skip(((n + 1) as usize).min(table.t_pmf.len()))
        .sum();
    let upper = (1.0 - below).clamp(0.0, 1.0);
    let lower = above.clamp(0.0, 1.0).min(upper);
    Ok((lower, upper))
}

/// Brute-force reference: enumerates every trajectory of the law up to
/// total count `k_max` and accumulates the exact `Z_k` rows and the
/// attraction-time masses using independently evaluated freeze products.
/// Exponential in `(k_max - a - b)/step`; intended for small horizons.
pub fn enumerate_reference(
    law: TwoEdgeLaw,
    w: &WeightFunction,
    k_max: u64,
) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
    check_horizon(law, k_max)?;
    let step = law.step();
    let t0 = law.t0();
    if (k_max - t0) / step > 26 {
        return Err(Error::Resource(
            "enumeration horizon too deep (2^depth trajectories)".into(),
        ));
    }
    let width = (k_max / 2 + step + 1) as usize;
    let mut z = vec![vec![0.0f64; width]; (k_max + 1) as usize];
    let mut t_pmf = vec![0.0f64; (k_max + step + 1) as usize];
    let mut freeze_cache: HashMap<(u64, u64), f64> = HashMap::new();
    let mut freeze = |total: u64, frozen: u64| -> Result<f64> {
        if let Some(&v) = freeze_cache.get(&(total, frozen)) {
            return Ok(v);
        }
        let v = series::w_product(w, total, frozen, step)?.value();
        freeze_cache.insert((total, frozen), v);
        Ok(v)
    };

    t_pmf[t0 as usize] = freeze(t0, law.a)? + freeze(t0, law.b)?;

    // Depth-first enumeration over which edge steps at each stage.
    let mut stack: Vec<(u64, u64, f64)> = vec![(law.a, law.b, 1.0)];
    while let Some((g, r, prob)) = stack.pop() {
        let total = g + r;
        z[total as usize][g.min(r) as usize] += prob;
        if total > k_max {
            continue;
        }
        let wg = w.w(g)?;
        let wr = w.w(r)?;
        let pg = wg / (wg + wr);
        // Edge with count g steps: if it never steps again, this was the
        // last traversal of the non-attracting edge.
        t_pmf[(total + step) as usize] += prob * pg * freeze(total + step, g + step)?;
        t_pmf[(total + step) as usize] += prob * (1.0 - pg) * freeze(total + step, r + step)?;
        if total + step <= k_max {
            stack.push((g + step, r, prob * pg));
            stack.push((g, r + step, prob * (1.0 - pg)));
        }
    }
    Ok((z, t_pmf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p11() -> TwoEdgeLaw {
        TwoEdgeLaw::pair(1, 1).unwrap()
    }

    #[test]
    fn z_small_values_power2() {
        let w = WeightFunction::power(2.0).unwrap();
        let all: Vec<u64> = (2..=5).collect();
        let t = z_dist(p11(), &w, 5, &all).unwrap();
        let row = |k: u64| -> &Vec<f64> {
            &t.z_rows.iter().find(|(kk, _)| *kk == k).unwrap().1
        };
        assert!((row(3)[1] - 1.0).abs() < 1e-15);
        assert!((row(4)[2] - 0.2).abs() < 1e-15);
        assert!((row(5)[2] - 7.0 / 25.0).abs() < 1e-15);
    }

    #[test]
    fn rows_sum_to_one() {
        for w in [
            WeightFunction::power(2.0).unwrap(),
            WeightFunction::pure_exp(0.5).unwrap(),
        ] {
            for law in [p11(), TwoEdgeLaw::pair(2, 3).unwrap(), TwoEdgeLaw::path(1, 2).unwrap()] {
                let t = z_dist(law, &w, 400, &[]).unwrap();
                let (_, row) = t.z_rows.last().unwrap();
                let sum: f64 = row.iter().sum();
                assert!((sum - 1.0).abs() < 1e-10, "{law} {w}: {sum}");
            }
        }
    }

    #[test]
    fn zinf_closed_form() {
        // P(Z_inf = 1) for the symmetric pair law with squared weights.
        let w = WeightFunction::power(2.0).unwrap();
        let zi = z_inf(p11(), &w, 40).unwrap();
        let truth = 2.0 * std::f64::consts::PI / std::f64::consts::PI.sinh();
        assert!(
            (zi[1].value() - truth).abs() < 1e-9,
            "{} vs {truth}",
            zi[1].value()
        );
        // Mass approaches 1 as the cutoff grows (the deficit is O(1/L)
        // here, so full exhaustion needs very large cutoffs).
        let total40: f64 = zi.iter().map(|c| c.value()).sum();
        let zi200 = z_inf(p11(), &w, 200).unwrap();
        let total200: f64 = zi200.iter().map(|c| c.value()).sum();
        assert!(total200 > 0.95, "{total200}");
        assert!(total200 > total40);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for ell in 1..=19u64 {
            let v = w.w(ell).unwrap() * zi[ell as usize].value();
            lo = lo.min(v);
            hi = hi.max(v);
        }
        assert!(hi / lo < 10.0, "band [{lo},{hi}]");
    }

    #[test]
    fn zinf_below_any_finite_k() {
        let w = WeightFunction::power(2.0).unwrap();
        let zi = z_inf(p11(), &w, 10).unwrap();
        let all: Vec<u64> = (2..=60).collect();
        let t = z_dist(p11(), &w, 60, &all).unwrap();
        for (k, row) in &t.z_rows {
            for ell in 1..=10u64 {
                if *k > 2 * ell {
                    assert!(
                        zi[ell as usize].value() <= row[ell as usize] + 1e-12,
                        "k={k} l={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn t_matches_enumeration_pair_and_path() {
        for w in [
            WeightFunction::power(2.0).unwrap(),
            WeightFunction::pure_exp(0.7).unwrap(),
        ] {
            for law in [p11(), TwoEdgeLaw::pair(1, 2).unwrap(), TwoEdgeLaw::path(1, 2).unwrap()] {
                let k_max = law.t0() + 10 * law.step();
                let (z_ref, t_ref) = enumerate_reference(law, &w, k_max).unwrap();
                let all: Vec<u64> = (law.t0()..=k_max).collect();
                let zt = z_dist(law, &w, k_max, &all).unwrap();
                for (k, row) in &zt.z_rows {
                    for (li, &p) in row.iter().enumerate() {
                        assert!(
                            (p - z_ref[*k as usize][li]).abs() < 1e-12,
                            "{law} {w} Z k={k} l={li}"
                        );
                    }
                }
                let tt = t_dist(law, &w, k_max).unwrap();
                for t in 0..t_ref.len() {
                    let got = tt.t_pmf.get(t).copied().unwrap_or(0.0);
                    assert!(
                        (got - t_ref[t]).abs() < 1e-12,
                        "{law} {w} T t={t}: {got} vs {}",
                        t_ref[t]
                    );
                }
            }
        }
    }

    #[test]
    fn t_atom_equals_zinf_at_one() {
        let w = WeightFunction::power(2.0).unwrap();
        let t = t_dist(p11(), &w, 50).unwrap();
        let zi = z_inf(p11(), &w, 2).unwrap();
        assert!((t.t_pmf[2] - zi[1].value()).abs() < 1e-10);
    }

    #[test]
    fn t_mass_nearly_complete_for_fast_decay() {
        let w = WeightFunction::power(4.0).unwrap();
        let t = t_dist(p11(), &w, 2000).unwrap();
        assert!(t.t_mass() >= 0.999, "{}", t.t_mass());
        assert!(t.t_mass() <= 1.0 + 1e-12);
        // Partial sums nondecreasing and bounded by one.
        let mut cum = 0.0;
        for &p in &t.t_pmf {
            assert!(p >= 0.0);
            cum += p;
            assert!(cum <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn majority_term_at_most_twice_minority() {
        // Under nondecreasing weights, freezing the majority edge next
        // step is at most twice as likely as freezing the minority.
        let w = WeightFunction::power(2.0).unwrap();
        let mut checked = 0u64;
        t_dist_with(p11(), &w, 300, |k, ell, ts, tw| {
            assert!(tw <= 2.0 * ts + 1e-15, "k={k} l={ell}: {tw} vs {ts}");
            checked += 1;
        })
        .unwrap();
        assert!(checked > 1000);
    }

    #[test]
    fn t_tail_enclosure() {
        let w = WeightFunction::power(2.0).unwrap();
        let t = t_dist(p11(), &w, 800).unwrap();
        let mut prev = (1.0f64, 1.0f64);
        for n in [1u64, 2, 10, 100, 400, 800] {
            let (lo, hi) = t_tail(&t, n).unwrap();
            assert!(lo <= hi);
            assert!(hi - lo <= t.t_mass_remainder_upper + 1e-12);
            assert!(lo <= prev.0 + 1e-12 && hi <= prev.1 + 1e-12, "n={n}");
            prev = (lo, hi);
        }
        let (lo, hi) = t_tail(&t, 1).unwrap();
        assert!(lo <= 1.0 && hi == 1.0);
    }

    #[test]
    fn law_grammar() {
        let l: TwoEdgeLaw = "pair:a=2,b=3".parse().unwrap();
        assert_eq!(l, TwoEdgeLaw::pair(2, 3).unwrap());
        let l: TwoEdgeLaw = "path:a=1,b=2".parse().unwrap();
        assert_eq!(l.kind, LawKind::Path);
        assert_eq!(l.to_string().parse::<TwoEdgeLaw>().unwrap(), l);
        assert!("pair:a=0".parse::<TwoEdgeLaw>().is_err());
        assert!("ring:a=1".parse::<TwoEdgeLaw>().is_err());
    }
}
