//! Log-space evaluation of the Chernoff bound, the slab-argument chain and
//! the ĥ(n) / w(n) lower-bound calculus. Logarithms inside formulas are
//! base 2 unless a name says `ln`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Double-double arithmetic (about 106 mantissa bits).
pub type Wide = twofloat::TwoFloat;

/// Largest trial count accepted by [`binomial_tail_exact`].
pub const EXACT_TAIL_MAX_M: u64 = 40;

fn cast<F: Float>(x: f64) -> F {
    F::from(x).expect("finite f64 converts")
}

fn rational_to<F: Float>(r: &BigRational) -> F {
    let num: F = F::from(r.numer().to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan);
    let den: F = F::from(r.denom().to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan);
    num / den
}

/// `log₂ n`, exact for powers of two.
pub fn log2_of<F: Float>(n: u64) -> F {
    if n.is_power_of_two() {
        cast(n.trailing_zeros() as f64)
    } else {
        cast::<F>(n as f64).log2()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChernoffParams {
    pub m: u64,
    pub p: BigRational,
    pub t: BigRational,
}

impl ChernoffParams {
    pub fn new(m: u64, p: BigRational, t: BigRational) -> Result<Self> {
        if p < BigRational::zero() || p > BigRational::one() {
            return Err(Error::InvalidParameter(format!("p = {p} is not a probability")));
        }
        Ok(ChernoffParams { m, p, t })
    }

    pub fn mu(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.m)) * &self.p
    }
}

/// A natural-log bound; `trivial` marks the degenerate `δ ≤ 0` case where
/// the bound is `ln 1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogBound<F> {
    pub ln_bound: F,
    pub trivial: bool,
}

/// `μ(δ − (1+δ) ln(1+δ))` from `ln μ` and `ln(1+δ)`, rearranged as
/// `μ(1+δ)(1 − ln(1+δ)) − μ` so no term overflows.
pub fn chernoff_log_from_logs<F: Float>(ln_mu: F, ln_one_plus_delta: F) -> LogBound<F> {
    if ln_one_plus_delta <= F::zero() {
        return LogBound {
            ln_bound: F::zero(),
            trivial: true,
        };
    }
    let mu_times = (ln_mu + ln_one_plus_delta).exp();
    let mu = ln_mu.exp();
    LogBound {
        ln_bound: mu_times * (F::one() - ln_one_plus_delta) - mu,
        trivial: false,
    }
}

/// Natural log of the Chernoff upper bound on `Pr{B ≥ t}`, `B ~ binomial(m, p)`.
pub fn chernoff_tail_log<F: Float>(params: &ChernoffParams) -> LogBound<F> {
    let mu = params.mu();
    if mu.is_zero() {
        let ln = if params.t > BigRational::zero() {
            F::neg_infinity()
        } else {
            F::zero()
        };
        return LogBound {
            ln_bound: ln,
            trivial: params.t <= BigRational::zero(),
        };
    }
    if params.t <= mu {
        return LogBound {
            ln_bound: F::zero(),
            trivial: true,
        };
    }
    let ln_mu = rational_to::<F>(&mu).ln();
    let ratio = &params.t / &mu;
    chernoff_log_from_logs(ln_mu, rational_to::<F>(&ratio).ln())
}

/// Exact `Pr{B ≥ t}` for `m ≤ 40`.
pub fn binomial_tail_exact(m: u64, p: &BigRational, t: &BigRational) -> Result<BigRational> {
    if m > EXACT_TAIL_MAX_M {
        return Err(Error::TooLarge {
            m,
            max: EXACT_TAIL_MAX_M,
        });
    }
    let start = t.ceil().to_integer();
    let start = if start < BigInt::zero() {
        0
    } else {
        start.to_u64().unwrap_or(u64::MAX)
    };
    let q = BigRational::one() - p;
    let mut total = BigRational::zero();
    let mut binom = BigInt::one();
    for i in 0..=m {
        if i >= start {
            let term = BigRational::from_integer(binom.clone())
                * num_traits::pow(p.clone(), i as usize)
                * num_traits::pow(q.clone(), (m - i) as usize);
            total += term;
        }
        binom = binom * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundConfig {
    /// Slab constant `c`.
    pub c: f64,
    /// Constant `α` of the per-slab obstacle threshold `αk/log²k`.
    pub alpha: f64,
    /// Encoding constant `C` in `f(h,n) ≤ 2^{C·h·n·log²n}`.
    pub enc: f64,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig {
            c: 1.0,
            alpha: 0.01,
            enc: 1.0,
        }
    }
}

impl BoundConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("c", self.c), ("alpha", self.alpha), ("enc", self.enc)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma1Report<F> {
    pub n: u64,
    pub config: BoundConfig,
    /// `max(1, ⌊√c · log₂ n⌋)`.
    pub k: u64,
    /// `⌊n / k⌋`.
    pub m: u64,
    /// `c·k²`; the per-slab failure probability is `e^{−ck²}`.
    pub ck2: F,
    pub ln_mu: F,
    pub mu: F,
    /// `ln(1+δ) = ck² − 1`.
    pub ln_one_plus_delta: F,
    /// `δ ≤ 0`: the Chernoff bound is vacuous.
    pub trivial: bool,
    /// `m − m(ck²−1)/e`, the closed form the slab argument's chain ends in.
    pub chain_ln: F,
    /// The Chernoff bound evaluated directly at `(μ, δ)`.
    pub direct_ln: F,
    /// `(α·k/log₂²k)·(m/2)`; undefined for `k = 1`.
    pub obstacle_lower_bound: Option<F>,
}

/// The slab argument's numbers for `n` points with the given constants.
pub fn lemma1_report<F: Float>(n: u64, cfg: BoundConfig) -> Result<Lemma1Report<F>> {
    cfg.validate()?;
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 3")));
    }
    let c: F = cast(cfg.c);
    let k_real = c.sqrt() * log2_of::<F>(n);
    let k = k_real.floor().to_u64().unwrap_or(1).max(1);
    let m = n / k;
    let kf: F = cast(k as f64);
    let mf: F = cast(m as f64);
    let ck2 = c * kf * kf;
    let ln_mu = mf.ln() - ck2;
    let ln_one_plus_delta = ck2 - F::one();
    let direct = chernoff_log_from_logs(ln_mu, ln_one_plus_delta);
    let e = F::one().exp();
    let chain_ln = mf - mf * (ck2 - F::one()) / e;
    let log2k = log2_of::<F>(k);
    let obstacle_lower_bound =
        (k > 1).then(|| cast::<F>(cfg.alpha) * kf / (log2k * log2k) * (mf / cast(2.0)));
    Ok(Lemma1Report {
        n,
        config: cfg,
        k,
        m,
        ck2,
        ln_mu,
        mu: ln_mu.exp(),
        ln_one_plus_delta,
        trivial: direct.trivial,
        chain_ln,
        direct_ln: direct.ln_bound,
        obstacle_lower_bound,
    })
}

/// `enc · h · n · log₂²n`, the default exponent of the graph-count bound.
pub fn default_exponent<F: Float>(cfg: &BoundConfig) -> impl Fn(u64, u64) -> F + '_ {
    move |h, n| {
        let l = log2_of::<F>(n);
        cast::<F>(cfg.enc) * cast::<F>(h as f64) * cast::<F>(n as f64) * l * l
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hhat {
    pub value: u64,
    /// No `h ≥ 1` satisfies the bound.
    pub vacuous: bool,
}

const HHAT_CAP: u64 = 1 << 62;

/// `ĥ(n) = max{h : g(h,n) ≤ n²/4}` for nondecreasing `g`.
pub fn hhat<F: Float>(n: u64, g: impl Fn(u64, u64) -> F) -> Result<Hhat> {
    let nf: F = cast(n as f64);
    let target = nf * nf / cast(4.0);
    let ok = |h: u64| g(h, n) <= target;
    if !ok(1) {
        return Ok(Hhat {
            value: 0,
            vacuous: true,
        });
    }
    let mut lo = 1u64;
    let mut hi = 2u64;
    while ok(hi) {
        if hi >= HHAT_CAP {
            return Err(Error::DegenerateExponent);
        }
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Hhat {
        value: lo,
        vacuous: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WnBound<F> {
    /// `⌈c · log₂ n⌉`, the argument passed to ĥ.
    pub argument: u64,
    pub hhat: Hhat,
    /// `n · ĥ(⌈c log₂ n⌉) / (c log₂ n)`.
    pub value: F,
}

pub fn wn_lower_bound<F: Float>(n: u64, cfg: BoundConfig, g: impl Fn(u64, u64) -> F) -> Result<WnBound<F>> {
    cfg.validate()?;
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    let clog: F = cast::<F>(cfg.c) * log2_of::<F>(n);
    let argument = clog.ceil().to_u64().unwrap_or(0);
    let h = if argument < 2 {
        Hhat {
            value: 0,
            vacuous: true,
        }
    } else {
        hhat(argument, g)?
    };
    let value = cast::<F>(n as f64) * cast::<F>(h.value as f64) / clog;
    Ok(WnBound {
        argument,
        hhat: h,
        value,
    })
}
