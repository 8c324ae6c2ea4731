//! Threshold functions for the `K_{t,t}`-free algorithm.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Exponent size (in bits) beyond which powers are kept symbolic.
const MAX_EXPONENT_BITS: u64 = 1 << 20;

/// An exact integer, or a value too large to write down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Magnitude {
    Exact(BigUint),
    /// Symbolic value, with a formula for display.
    Huge(String),
}

impl Magnitude {
    pub fn exact(v: impl Into<BigUint>) -> Self {
        Magnitude::Exact(v.into())
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            Magnitude::Exact(v) => Some(v),
            Magnitude::Huge(_) => None,
        }
    }

    /// The value as a `usize`, if it fits.
    pub fn to_usize(&self) -> Option<usize> {
        self.as_exact().and_then(ToPrimitive::to_usize)
    }

    /// `self <= v`.
    pub fn at_most(&self, v: usize) -> bool {
        self.to_usize().is_some_and(|x| x <= v)
    }

    fn add(&self, other: &Magnitude) -> Magnitude {
        match (self, other) {
            (Magnitude::Exact(a), Magnitude::Exact(b)) => Magnitude::Exact(a + b),
            (Magnitude::Huge(a), _) => Magnitude::Huge(format!("{a} + {other}")),
            (_, Magnitude::Huge(b)) => Magnitude::Huge(format!("{self} + {b}")),
        }
    }

    fn max(&self, other: &Magnitude) -> Magnitude {
        match (self, other) {
            (Magnitude::Exact(a), Magnitude::Exact(b)) => Magnitude::Exact(a.max(b).clone()),
            // A symbolic value is always the larger one here.
            (Magnitude::Huge(_), _) => self.clone(),
            (_, Magnitude::Huge(_)) => other.clone(),
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Exact(v) => write!(f, "{v}"),
            Magnitude::Huge(s) => write!(f, "{s}"),
        }
    }
}

/// Small stand-in values for desk-scale runs. Results stay sound because
/// every output is verified, but nothing is guaranteed to be found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PracticalOverrides {
    pub f: usize,
    pub g: usize,
    pub m: usize,
    pub n_t_eps: usize,
}

impl PracticalOverrides {
    /// Defaults scaled to `k`: `f = k(t+1)`, `g = 2k²`, `M = k`, `N = k`.
    pub fn for_params(t: usize, k: usize) -> Self {
        PracticalOverrides {
            f: k * (t + 1),
            g: 2 * k * k,
            m: k,
            n_t_eps: k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    /// Exact formulas. `N(t, 1/k)` has no closed form and must be given.
    Faithful {
        n_t_eps: BigUint,
    },
    Practical(PracticalOverrides),
}

impl ThresholdMode {
    pub fn is_faithful(&self) -> bool {
        matches!(self, ThresholdMode::Faithful { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thresholds {
    pub t: usize,
    pub k: usize,
    pub f_tk: Magnitude,
    pub g_tk: Magnitude,
    pub m: Magnitude,
    pub m_prime: Magnitude,
    pub n_t_eps: Magnitude,
    pub mode: ThresholdMode,
}

impl Thresholds {
    /// `g + f`, the degree threshold for the high-degree set.
    pub fn degree_threshold(&self) -> Magnitude {
        self.g_tk.add(&self.f_tk)
    }

    /// `t·k^t`, the bound on `|X_x|`.
    pub fn hyperedge_bound(&self) -> Option<usize> {
        self.k.checked_pow(self.t as u32).and_then(|p| p.checked_mul(self.t))
    }
}

/// `t·k^t + t` as a big integer.
fn block(t: usize, k: usize) -> BigUint {
    BigUint::from(t) * BigUint::from(k).pow(t as u32) + BigUint::from(t)
}

fn pow2(e: &BigUint, label: impl FnOnce() -> String) -> Magnitude {
    match e.to_u64() {
        Some(bits) if bits <= MAX_EXPONENT_BITS => Magnitude::Exact(BigUint::one() << bits),
        _ => Magnitude::Huge(label()),
    }
}

/// `8^8^…^8^t` with `k` eights.
pub fn tower(k: usize, t: usize) -> Magnitude {
    let mut value = BigUint::from(t);
    for level in 0..k {
        // 8^v = 2^(3v).
        let e = &value * 3u32;
        match e.to_u64() {
            Some(bits) if bits <= MAX_EXPONENT_BITS => value = BigUint::one() << bits,
            _ => {
                return Magnitude::Huge(format!(
                    "tower of {k} eights over {t} (exceeds 2^{MAX_EXPONENT_BITS} at level {})",
                    level + 1
                ))
            }
        }
    }
    Magnitude::Exact(value)
}

/// `f(t,k) = 2^(2t + k(tk^t + t))`, `M` = tower of `k` eights over `t`,
/// `M' = max(M, N(t,1/k))`, `g(t,k) = 2^(k(tk^t + t))·M'`.
pub fn thresholds(t: usize, k: usize, mode: &ThresholdMode) -> Result<Thresholds> {
    if t == 0 || k == 0 {
        return Err(Error::Precondition("thresholds need t, k >= 1".into()));
    }
    match mode {
        ThresholdMode::Faithful { n_t_eps } => {
            let kb = BigUint::from(k) * block(t, k);
            let f_exp = BigUint::from(2 * t) + &kb;
            let f_tk = pow2(&f_exp, || format!("2^{f_exp}"));
            let m = tower(k, t);
            let n = Magnitude::Exact(n_t_eps.clone());
            let m_prime = m.max(&n);
            let g_tk = match (pow2(&kb, || format!("2^{kb}")), &m_prime) {
                (Magnitude::Exact(a), Magnitude::Exact(b)) => Magnitude::Exact(a * b),
                (_, mp) => Magnitude::Huge(format!("2^{kb} * ({mp})")),
            };
            Ok(Thresholds {
                t,
                k,
                f_tk,
                g_tk,
                m,
                m_prime,
                n_t_eps: n,
                mode: mode.clone(),
            })
        }
        ThresholdMode::Practical(o) => Ok(Thresholds {
            t,
            k,
            f_tk: Magnitude::exact(o.f),
            g_tk: Magnitude::exact(o.g),
            m: Magnitude::exact(o.m),
            m_prime: Magnitude::exact(o.m.max(o.n_t_eps)),
            n_t_eps: Magnitude::exact(o.n_t_eps),
            mode: mode.clone(),
        }),
    }
}
