//! Catalog of reinforcement weight functions.
//!
//! A weight function `w : {1,2,...} -> (0, inf)` drives the edge-reinforced
//! walk: an edge with traversal count `k` is chosen with probability
//! proportional to `w(k)`. The catalog covers the standard families
//!
//! * `power`:         w(k) = k^rho                   (rho > 1)
//! * `power_log`:     w(k) = k^rho (1 + ln k)^alpha  (rho > 1, alpha >= 0)
//! * `lin_exp_log`:   w(k) = k exp((ln k)^alpha)     (0 < alpha < 1)
//! * `stretched_exp`: w(k) = exp(k^eps)              (0 < eps <= 1)
//! * `pure_exp`:      w(k) = exp(alpha k)            (alpha > 0)
//! * `table`:         explicit values, optionally extended by a catalog
//!   family beyond the stored range
//!
//! The `power_log` form uses `(1 + ln k)^alpha` rather than `(ln k)^alpha`
//! so that `w(1) > 0`; the asymptotics are unchanged.
//!
//! Besides point evaluation (always available in log space so the
//! exponential families never overflow), the module provides *certified*
//! enclosures of the tail sums `sum_{j>=m} 1/w(j)^p`, which are the
//! basic ingredient for rigorous truncation of the infinite products
//! computed elsewhere in the crate.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Relative slack added to certified enclosures to absorb f64 roundoff.
const ULP_SLACK: f64 = 1e-14;

/// Smallest index at which the Euler-Maclaurin expansion is applied.
const EM_MIN_INDEX: u64 = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Power { rho: f64 },
    PowerLog { rho: f64, alpha: f64 },
    LinExpLog { alpha: f64 },
    StretchedExp { eps: f64 },
    PureExp { alpha: f64 },
    Table { values: Vec<f64>, tail: Option<Box<WeightFunction>> },
}

/// A weight function from the catalog, immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction {
    family: Family,
}

/// Outcome of a scanned or analytic assumption check.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub enum Verdict {
    Pass,
    FailAt(u64),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Report produced by [`WeightFunction::assumptions`].
#[derive(Debug, Clone, serde::Serialize)]
pub struct AssumptionReport {
    /// (A0): sum 1/w(k) < inf, decided analytically per family.
    pub a0: Verdict,
    /// (A1): w nondecreasing, scanned up to `scan_k` (catalog families
    /// are also monotone analytically).
    pub a1: Verdict,
    /// Empirical estimate of the (A2) constant:
    /// max over 2 <= k <= scan_k of w(1) w(k) S_2(k). An estimate, not a proof.
    pub cw_estimate: f64,
    /// The k attaining the maximum above, so stabilisation can be judged.
    pub cw_argmax: u64,
    /// Set when the estimate is still growing at the end of the scan,
    /// which is what the exponential families do.
    pub a2_doubtful: bool,
}

impl WeightFunction {
    pub fn power(rho: f64) -> Result<Self> {
        if !(rho > 1.0) || !rho.is_finite() {
            return Err(Error::Domain(format!("power family needs rho > 1, got {rho}")));
        }
        Ok(Self { family: Family::Power { rho } })
    }

    pub fn power_log(rho: f64, alpha: f64) -> Result<Self> {
        if !(rho > 1.0) || !rho.is_finite() {
            return Err(Error::Domain(format!("power_log family needs rho > 1, got {rho}")));
        }
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("power_log family needs alpha >= 0, got {alpha}")));
        }
        Ok(Self { family: Family::PowerLog { rho, alpha } })
    }

    pub fn lin_exp_log(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain(format!(
                "lin_exp_log family needs 0 < alpha < 1, got {alpha}"
            )));
        }
        Ok(Self { family: Family::LinExpLog { alpha } })
    }

    pub fn stretched_exp(eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(Error::Domain(format!(
                "stretched_exp family needs 0 < eps <= 1, got {eps}"
            )));
        }
        Ok(Self { family: Family::StretchedExp { eps } })
    }

    pub fn pure_exp(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("pure_exp family needs alpha > 0, got {alpha}")));
        }
        Ok(Self { family: Family::PureExp { alpha } })
    }

    /// A tabulated weight, 1-based and contiguous; `tail`, when present,
    /// is the analytic continuation used for indices beyond the table.
    pub fn table(values: Vec<f64>, tail: Option<WeightFunction>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("table family needs at least one value".into()));
        }
        if let Some(bad) = values.iter().position(|v| !(*v > 0.0) || !v.is_finite()) {
            return Err(Error::Domain(format!(
                "table value at k={} is not a positive finite real",
                bad + 1
            )));
        }
        Ok(Self { family: Family::Table { values, tail: tail.map(Box::new) } })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// rho' = (rho - 1)/rho for the power-type families.
    pub fn rho_prime(&self) -> Option<f64> {
        match self.family {
            Family::Power { rho } | Family::PowerLog { rho, .. } => Some((rho - 1.0) / rho),
            _ => None,
        }
    }

    /// True for families where `1/w(j)` decays at least exponentially, so
    /// that infinite-product remainders can be closed off by a short
    /// explicit scan instead of a series expansion.
    pub fn decays_exponentially(&self) -> bool {
        matches!(self.family, Family::StretchedExp { .. } | Family::PureExp { .. })
    }

    /// w(k) together with ln w(k). The log value is exact for the
    /// exponential families and must be used for downstream arithmetic
    /// whenever the plain value can overflow.
    pub fn eval(&self, k: u64) -> Result<(f64, f64)> {
        let lw = self.ln_w(k)?;
        Ok((lw.exp(), lw))
    }

    /// ln w(k).
    pub fn ln_w(&self, k: u64) -> Result<f64> {
        if k == 0 {
            return Err(Error::Domain("weight functions are defined for k >= 1".into()));
        }
        match &self.family {
            Family::Power { rho } => Ok(rho * (k as f64).ln()),
            Family::PowerLog { rho, alpha } => {
                let lk = (k as f64).ln();
                Ok(rho * lk + alpha * lk.ln_1p())
            }
            Family::LinExpLog { alpha } => {
                let lk = (k as f64).ln();
                Ok(lk + lk.powf(*alpha))
            }
            Family::StretchedExp { eps } => Ok((k as f64).powf(*eps)),
            Family::PureExp { alpha } => Ok(alpha * k as f64),
            Family::Table { values, tail } => match values.get((k - 1) as usize) {
                Some(v) => Ok(v.ln()),
                None => match tail {
                    Some(ext) => ext.ln_w(k),
                    None => Err(Error::OutOfRange(format!(
                        "table weight has {} entries, asked for k={k}",
                        values.len()
                    ))),
                },
            },
        }
    }

    /// w(k) as a plain value; overflows to +inf for exponential families
    /// at large k (use [`WeightFunction::ln_w`] there).
    pub fn w(&self, k: u64) -> Result<f64> {
        if k == 0 {
            return Err(Error::Domain("weight functions are defined for k >= 1".into()));
        }
        match &self.family {
            Family::Power { rho } => Ok((k as f64).powf(*rho)),
            Family::PowerLog { rho, alpha } => {
                let kf = k as f64;
                Ok(kf.powf(*rho) * (1.0 + kf.ln()).powf(*alpha))
            }
            Family::Table { values, tail } => match values.get((k - 1) as usize) {
                Some(v) => Ok(*v),
                None => match tail {
                    Some(ext) => ext.w(k),
                    None => Err(Error::OutOfRange(format!(
                        "table weight has {} entries, asked for k={k}",
                        values.len()
                    ))),
                },
            },
            _ => Ok(self.ln_w(k)?.exp()),
        }
    }

    /// Certified enclosure of `sum_{j >= j0} 1/w(j)`.
    pub fn tail_sum_bounds(&self, j0: u64) -> Result<(f64, f64)> {
        self.inv_w_pow_tail(j0, 1)
    }

    /// Certified enclosure of `sum_{j >= m} 1/w(j)^p`, `p >= 1`.
    pub fn inv_w_pow_tail(&self, m: u64, p: u32) -> Result<(f64, f64)> {
        if m == 0 {
            return Err(Error::Domain("tail sums start at m >= 1".into()));
        }
        if p == 0 {
            return Err(Error::Domain("tail power p must be >= 1".into()));
        }
        let p_f = p as f64;
        match &self.family {
            Family::Power { rho } => Ok(power_zeta_tail(p_f * rho, m as f64)),
            Family::PowerLog { rho, alpha } => {
                let s = p_f * rho;
                let beta = p_f * alpha;
                if beta == 0.0 {
                    return Ok(power_zeta_tail(s, m as f64));
                }
                // Explicit prefix, then ratio-block enclosure against the
                // exactly summable power part.
                let mut lo = 0.0;
                let mut hi = 0.0;
                let m_big = m.max(EM_MIN_INDEX);
                for j in m..m_big {
                    let t = (-p_f * self.ln_w(j)?).exp();
                    lo += t;
                    hi += t;
                }
                let q = |x: f64| (-beta * x.ln().ln_1p()).exp();
                let (blo, bhi) = block_tail(s, &q, m_big as f64);
                Ok(widen(lo + blo, hi + bhi))
            }
            Family::LinExpLog { alpha } => {
                if p == 1 {
                    // Prefix plus the exact integral
                    //   int_M^inf dx/(x e^{(ln x)^a}) = Gamma(1/a, (ln M)^a)/a,
                    // sandwiched by monotonicity.
                    let m_big = m.max(4096);
                    let mut acc = 0.0;
                    for j in m..m_big {
                        acc += (-self.ln_w(j)?).exp();
                    }
                    let v = (m_big as f64).ln();
                    let (ilo, ihi) = upper_gamma(1.0 / alpha, v.powf(*alpha));
                    let g_m = (-self.ln_w(m_big)?).exp();
                    Ok(widen(acc + ilo / alpha, acc + ihi / alpha + g_m))
                } else {
                    let mut lo = 0.0;
                    let mut hi = 0.0;
                    let m_big = m.max(EM_MIN_INDEX);
                    for j in m..m_big {
                        let t = (-p_f * self.ln_w(j)?).exp();
                        lo += t;
                        hi += t;
                    }
                    let a = *alpha;
                    let q = move |x: f64| (-p_f * x.ln().powf(a)).exp();
                    let (blo, bhi) = block_tail(p_f, &q, m_big as f64);
                    Ok(widen(lo + blo, hi + bhi))
                }
            }
            Family::StretchedExp { eps } => stretched_tail(p_f, *eps, m),
            Family::PureExp { alpha } => {
                let s = p_f * alpha;
                let r = (-s).exp();
                let v = (-s * m as f64).exp() / (1.0 - r);
                Ok(widen(v, v))
            }
            Family::Table { values, tail } => {
                let len = values.len() as u64;
                let mut acc = 0.0;
                for j in m..=len.min(u64::MAX) {
                    if j > len {
                        break;
                    }
                    acc += values[(j - 1) as usize].powi(-(p as i32));
                }
                if m > len || tail.is_some() {
                    let start = m.max(len + 1);
                    match tail {
                        Some(ext) => {
                            let (lo, hi) = ext.inv_w_pow_tail(start, p)?;
                            Ok(widen(acc + lo, acc + hi))
                        }
                        None => Err(Error::UnsupportedTail(
                            "table weight has no tail extension beyond its stored range".into(),
                        )),
                    }
                } else {
                    Err(Error::UnsupportedTail(
                        "table weight has no tail extension beyond its stored range".into(),
                    ))
                }
            }
        }
    }

    /// Certified enclosure of the stride-2 tail `sum_{i >= 0} 1/w(m + 2i)^p`.
    pub fn inv_w_pow_tail_stride2(&self, m: u64, p: u32) -> Result<(f64, f64)> {
        if m == 0 {
            return Err(Error::Domain("tail sums start at m >= 1".into()));
        }
        let p_f = p as f64;
        if let Family::Power { rho } = self.family {
            // Euler-Maclaurin in the stride variable.
            let s = p_f * rho;
            let mut acc = 0.0;
            let mut j = m;
            while j < EM_MIN_INDEX.max(m) + ((EM_MIN_INDEX.max(m) - m) % 2) {
                acc += (j as f64).powf(-s);
                j += 2;
            }
            let jf = j as f64;
            let pf = |n: u32| rising(s, n) * jf.powf(-s - n as f64);
            let mid = jf.powf(1.0 - s) / (2.0 * (s - 1.0)) + 0.5 * jf.powf(-s)
                + 2.0 * pf(1) / 12.0
                - 8.0 * pf(3) / 720.0
                + 32.0 * pf(5) / 30240.0;
            let err = 128.0 * rising(s, 7) * jf.powf(-s - 7.0) / 1_209_600.0;
            return Ok(widen(acc + mid - err, acc + mid));
        }
        // Generic: explicit stride prefix, then pair the remaining terms
        // with the full tail of a nonincreasing sequence:
        //   (1/2) tail(j) <= sum_{i>=0} t_{j+2i} <= t_j + (1/2) tail(j+1).
        let mut acc = 0.0;
        let mut j = m;
        let prefix_end = m + 1024;
        while j < prefix_end {
            let lw = self.ln_w(j)?;
            acc += (-p_f * lw).exp();
            j += 2;
        }
        let (tl, _) = self.inv_w_pow_tail(j, p)?;
        let (_, th) = self.inv_w_pow_tail(j + 1, p)?;
        let tj = (-p_f * self.ln_w(j)?).exp();
        Ok(widen(acc + 0.5 * tl, acc + tj + 0.5 * th))
    }

    /// Scanned/analytic assumption report; `cw_estimate` uses the direct
    /// two-fold convolution S_2(k) = sum_i 1/(w(i)w(k-i)).
    pub fn assumptions(&self, scan_k: u64) -> Result<AssumptionReport> {
        if scan_k < 2 {
            return Err(Error::Argument("assumption scan needs scan_K >= 2".into()));
        }
        let a0 = match &self.family {
            Family::Power { rho } | Family::PowerLog { rho, .. } => {
                // power: needs rho > 1 (enforced); power_log converges for
                // rho > 1 and any alpha >= 0.
                debug_assert!(*rho > 1.0);
                Verdict::Pass
            }
            Family::LinExpLog { .. } | Family::StretchedExp { .. } | Family::PureExp { .. } => {
                Verdict::Pass
            }
            Family::Table { tail, .. } => match tail {
                Some(ext) => ext.assumptions(2)?.a0,
                None => Verdict::FailAt(0), // undecidable from finitely many values
            },
        };
        let mut a1 = Verdict::Pass;
        let scan_top = match &self.family {
            Family::Table { values, tail: None } => scan_k.min(values.len() as u64),
            _ => scan_k,
        };
        let mut prev = self.ln_w(1)?;
        for k in 2..=scan_top {
            let cur = self.ln_w(k)?;
            if cur < prev {
                a1 = Verdict::FailAt(k - 1);
                break;
            }
            prev = cur;
        }
        // C_w estimate: inverse weights once, then the convolution scan.
        let inv: Vec<f64> = (1..=scan_top)
            .map(|k| self.ln_w(k).map(|l| (-l).exp()))
            .collect::<Result<_>>()?;
        let w1 = inv[0].recip();
        let mut cw_estimate = 0.0;
        let mut cw_argmax = 2;
        let mut last = 0.0;
        for k in 2..=scan_top {
            let mut s2 = 0.0;
            for i in 1..k {
                s2 += inv[(i - 1) as usize] * inv[(k - i - 1) as usize];
            }
            let wk = inv[(k - 1) as usize].recip();
            let cand = w1 * wk * s2;
            if cand > cw_estimate {
                cw_estimate = cand;
                cw_argmax = k;
            }
            last = cand;
        }
        // If the running quantity is still at (or near) its maximum at the
        // end of the scan, the estimate has not stabilised.
        let a2_doubtful = scan_top >= 8 && last >= 0.999 * cw_estimate && cw_argmax > scan_top / 2;
        Ok(AssumptionReport { a0, a1, cw_estimate, cw_argmax, a2_doubtful })
    }

    /// Parse the textual grammar used by the command line:
    /// `power:rho=2`, `powerlog:rho=2,alpha=1`, `linexplog:alpha=0.5`,
    /// `stretched:eps=0.5`, `exp:alpha=0.6931`, `table:@file.csv`.
    pub fn parse_spec(s: &str) -> Result<Self> {
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("weight spec `{s}` is missing `:`")))?;
        let kv = |text: &str| -> Result<Vec<(String, f64)>> {
            text.split(',')
                .filter(|p| !p.is_empty())
                .map(|pair| {
                    let (k, v) = pair
                        .split_once('=')
                        .ok_or_else(|| Error::Parse(format!("bad key=value pair `{pair}`")))?;
                    let v: f64 = v
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad numeric value in `{pair}`")))?;
                    Ok((k.trim().to_string(), v))
                })
                .collect()
        };
        let get = |pairs: &[(String, f64)], key: &str| -> Result<f64> {
            pairs
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Parse(format!("weight spec `{s}` is missing `{key}`")))
        };
        match head {
            "power" => {
                let pairs = kv(rest)?;
                Self::power(get(&pairs, "rho")?)
            }
            "powerlog" => {
                let pairs = kv(rest)?;
                Self::power_log(get(&pairs, "rho")?, get(&pairs, "alpha")?)
            }
            "linexplog" => {
                let pairs = kv(rest)?;
                Self::lin_exp_log(get(&pairs, "alpha")?)
            }
            "stretched" => {
                let pairs = kv(rest)?;
                Self::stretched_exp(get(&pairs, "eps")?)
            }
            "exp" => {
                let pairs = kv(rest)?;
                Self::pure_exp(get(&pairs, "alpha")?)
            }
            "table" => {
                let path = rest
                    .strip_prefix('@')
                    .ok_or_else(|| Error::Parse("table spec must be `table:@file.csv`".into()))?;
                let text = std::fs::read_to_string(path)?;
                let mut values = Vec::new();
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') || line.starts_with("k,") {
                        continue;
                    }
                    let mut cols = line.split(',');
                    let k: u64 = cols
                        .next()
                        .and_then(|c| c.trim().parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad k column on line {}", i + 1)))?;
                    let v: f64 = cols
                        .next()
                        .and_then(|c| c.trim().parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad w column on line {}", i + 1)))?;
                    if k as usize != values.len() + 1 {
                        return Err(Error::Parse(format!(
                            "table rows must be 1-based and contiguous, got k={k} on line {}",
                            i + 1
                        )));
                    }
                    values.push(v);
                }
                Self::table(values, None)
            }
            other => Err(Error::Parse(format!("unknown weight family `{other}`"))),
        }
    }
}

impl FromStr for WeightFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_spec(s)
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Power { rho } => write!(f, "power:rho={rho}"),
            Family::PowerLog { rho, alpha } => write!(f, "powerlog:rho={rho},alpha={alpha}"),
            Family::LinExpLog { alpha } => write!(f, "linexplog:alpha={alpha}"),
            Family::StretchedExp { eps } => write!(f, "stretched:eps={eps}"),
            Family::PureExp { alpha } => write!(f, "exp:alpha={alpha}"),
            Family::Table { values, .. } => write!(f, "table:<{} values>", values.len()),
        }
    }
}

fn widen(lo: f64, hi: f64) -> (f64, f64) {
    let pad = hi.abs() * ULP_SLACK;
    ((lo - pad).max(0.0), hi + pad)
}

/// Rising factorial s (s+1) ... (s+n-1).
fn rising(s: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, i| acc * (s + i as f64))
}

/// Certified enclosure of `sum_{j >= m} j^{-s}` for s > 1 via the
/// Euler-Maclaurin expansion with Bernoulli terms through B_6 and the B_8
/// term as the (sign-correct) truncation bound; `j^{-s}` is completely
/// monotone, so consecutive partial sums of the expansion bracket the true
/// value.
pub(crate) fn power_zeta_tail(s: f64, m: f64) -> (f64, f64) {
    debug_assert!(s > 1.0 && m >= 1.0);
    let mut acc = 0.0;
    let mut j = m;
    let big = (EM_MIN_INDEX as f64).max(m);
    while j < big {
        acc += j.powf(-s);
        j += 1.0;
    }
    let pf = |n: u32| rising(s, n) * j.powf(-s - n as f64);
    let mid = j.powf(1.0 - s) / (s - 1.0) + 0.5 * j.powf(-s) + pf(1) / 12.0 - pf(3) / 720.0
        + pf(5) / 30240.0;
    let err = rising(s, 7) * j.powf(-s - 7.0) / 1_209_600.0;
    widen(acc + mid - err, acc + mid)
}

/// Enclosure of `sum_{j >= m} j^{-s} q(j)` for a nonincreasing positive
/// `q` and s >= 1 (s > 1 required unless q decays), by slicing `[m, inf)`
/// into geometric blocks on which q is frozen at either endpoint and the
/// pure power part is summed exactly.
fn block_tail(s: f64, q: &dyn Fn(f64) -> f64, m: f64) -> (f64, f64) {
    const RATIO: f64 = 1.003;
    const EPS_STOP: f64 = 1e-10;
    const MAX_BLOCKS: usize = 200_000;
    debug_assert!(m >= EM_MIN_INDEX as f64);
    let mut lo = 0.0;
    let mut hi = 0.0;
    let mut x = m;
    let mut zeta_x = power_zeta_tail(s.max(1.0 + 1e-9), x);
    // For s exactly 1 the power part of a block is sum 1/j over the block,
    // enclosed by the integral sandwich instead of zeta differences.
    let pure_harmonic = s <= 1.0 + 1e-9;
    for _ in 0..MAX_BLOCKS {
        let x_next = (x * RATIO).ceil().max(x + 2.0);
        let (p_lo, p_hi) = if pure_harmonic {
            // sum_{x <= j < x_next} 1/j in [ln(x_next/x) - small, ln(x_next/x) + 1/x]
            let l = (x_next / x).ln();
            ((l - 1.0 / x + 1.0 / x_next).max(0.0), l + 1.0 / x)
        } else {
            let z_next = power_zeta_tail(s, x_next);
            let d = (zeta_x.0 - z_next.1, zeta_x.1 - z_next.0);
            zeta_x = z_next;
            (d.0.max(0.0), d.1)
        };
        let (q_hi, q_lo) = (q(x), q(x_next));
        lo += p_lo * q_lo;
        hi += p_hi * q_hi;
        x = x_next;
        // Remaining mass beyond x, bounded by freezing q at x; only valid
        // when the power part alone converges.
        if !pure_harmonic {
            let rem = q(x) * power_zeta_tail(s, x).1;
            if rem <= EPS_STOP * lo.max(f64::MIN_POSITIVE) {
                hi += rem;
                return widen(lo, hi);
            }
        }
    }
    // Ran out of blocks: close the enclosure with the frozen-q bound (for
    // s > 1) or give up tightness and report the accumulated lower bound
    // with a crude cap (s == 1 with slowly decaying q).
    let rem_hi = if pure_harmonic {
        // Decay of q in the harmonic case is slower than any power; the
        // callers (lin_exp_log p = 1) do not take this path because they
        // use the gamma-integral route instead.
        f64::INFINITY
    } else {
        q(x) * power_zeta_tail(s, x).1
    };
    widen(lo, hi + rem_hi)
}

/// Enclosure of the upper incomplete gamma integral
/// `int_T^inf t^{a-1} e^{-t} dt` for a > 0, T > 0.
///
/// Computed as `Gamma(a) - lower(a, T)` with the everywhere-convergent
/// positive series for the lower integral
/// `lower(a,T) = T^a e^{-T} sum_{n>=0} T^n / (a(a+1)...(a+n))`.
pub(crate) fn upper_gamma(a: f64, t: f64) -> (f64, f64) {
    debug_assert!(a > 0.0 && t >= 0.0);
    if t == 0.0 {
        let g = gamma_fn(a);
        return widen(g, g);
    }
    // For large T, the series route cancels badly; switch to the
    // integration-by-parts sandwich
    //   T^{a-1} e^{-T} <= Gamma(a,T) <= T^{a-1} e^{-T} / (1 - (a-1)/T)
    // valid for T > max(0, a-1) (first factor bound for a >= 1; for a < 1
    // the integrand is below T^{a-1} e^{-(t-T)} e^{-T}, giving the same
    // upper form with a nonpositive correction).
    if t > 2.0 * a + 40.0 {
        let base = t.powf(a - 1.0) * (-t).exp();
        let corr = (a - 1.0) / t;
        return if corr >= 0.0 {
            widen(base, base / (1.0 - corr))
        } else {
            // a < 1: the parts correction is negative and itself of order
            // corr; 1.5x covers its own second-order term at this T.
            widen(base * (1.0 + 1.5 * corr).max(0.0), base)
        };
    }
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= t / (a + n);
        sum += term;
        if term <= sum * 1e-17 || n > 10_000.0 {
            break;
        }
    }
    let lower = t.powf(a) * (-t).exp() * sum;
    let g = gamma_fn(a);
    let v = (g - lower).max(0.0);
    // The subtraction can lose digits when lower ~ Gamma(a); account for it.
    let slack = g * 1e-13 + v * ULP_SLACK;
    ((v - slack).max(0.0), v + slack)
}

/// Gamma(a) for a > 0 via Lanczos.
pub(crate) fn gamma_fn(a: f64) -> f64 {
    // Lanczos approximation, g = 7, n = 9; |rel err| < 1e-13 on (0, 170).
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if a < 0.5 {
        std::f64::consts::PI / ((std::f64::consts::PI * a).sin() * gamma_fn(1.0 - a))
    } else {
        let x = a - 1.0;
        let mut acc = COEF[0];
        for (i, c) in COEF.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + G + 0.5;
        (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

/// Enclosure of `sum_{j >= m} e^{-s j^eps}`: explicit terms until they are
/// negligible relative to the accumulated sum, then the integral remainder
///   int_{J-1}^inf e^{-s x^eps} dx = Gamma(1/eps, s (J-1)^eps)/(eps s^{1/eps})
/// bounded from above via integration by parts.
fn stretched_tail(s: f64, eps: f64, m: u64) -> Result<(f64, f64)> {
    let mut acc = 0.0;
    let mut j = m as f64;
    let ln_first = -s * (m as f64).powf(eps);
    loop {
        let t = (-s * j.powf(eps) - ln_first).exp(); // scaled by e^{-ln_first}
        acc += t;
        j += 1.0;
        if t < acc * 1e-18 || j > m as f64 + 5_000_000.0 {
            break;
        }
    }
    // Remainder (scaled): int_{j-1}^inf e^{-s x^eps} dx * e^{-ln_first}.
    let a = 1.0 / eps;
    let t_at = s * (j - 1.0).powf(eps);
    // Upper bound on Gamma(a, T): T^{a-1} e^{-T} / (1 - (a-1)/T) for T > a-1.
    let corr = if t_at > (a - 1.0).max(0.0) + 1.0 { 1.0 / (1.0 - (a - 1.0).max(0.0) / t_at) } else {
        // Not deep enough in the tail for the parts bound; extend crudely.
        10.0
    };
    // (-t_at - ln_first) keeps the factor e^{-ln_first} folded in, so the
    // scaled remainder stays representable even when the unscaled one is not.
    let rem_scaled = t_at.powf(a - 1.0) * (-t_at - ln_first).exp() * corr / (eps * s.powf(a));
    let scale = ln_first.exp();
    let total_lo = acc * scale;
    let total_hi = (acc + rem_scaled.max(0.0)) * scale;
    if total_lo == 0.0 {
        // e^{ln_first} underflowed: the whole tail is below the smallest
        // positive double.
        return Ok((0.0, f64::MIN_POSITIVE));
    }
    Ok(widen(total_lo, total_hi))
}
