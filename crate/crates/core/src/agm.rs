//! The arithmetic-geometric mean.
//!
//! Starting from `a >= b >= 0`, the iteration
//!
//! ```text
//! a_{n+1} = (a_n + b_n) / 2
//! b_{n+1} = sqrt(a_n * b_n)
//! ```
//!
//! squeezes the two sequences together: `a_n` decreases, `b_n` increases,
//! `a_n - b_n <= (a - b) / 2^n`, and both converge (quadratically in practice)
//! to the common limit `M(a, b)`.

use crate::error::{Error, Result};

/// Iteration cap used by [`Tolerance::default`] and [`Tolerance::for_scale`].
pub const DEFAULT_MAX_ITER: usize = 64;

/// One state `(a_n, b_n)` of the AGM iteration.
///
/// Always satisfies `a >= b >= 0` with both finite. Constructing from a pair
/// with `a < b` swaps the arguments, since `M(a, b)` is symmetric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgmPair {
    a: f64,
    b: f64,
    index: usize,
}

impl AgmPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::domain(format!(
                "AGM arguments must be finite, got ({a}, {b})"
            )));
        }
        if a < 0.0 || b < 0.0 {
            return Err(Error::domain(format!(
                "AGM arguments must be nonnegative, got ({a}, {b})"
            )));
        }
        let (a, b) = if a >= b { (a, b) } else { (b, a) };
        Ok(AgmPair { a, b, index: 0 })
    }

    /// The arithmetic member `a_n`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The geometric member `b_n`.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// The iteration count `n`.
    pub fn index(&self) -> usize {
        self.index
    }

    /// `a_n - b_n`, never negative.
    pub fn gap(&self) -> f64 {
        self.a - self.b
    }

    /// Midpoint of the bracket `[b_n, a_n]`, which contains the mean.
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }
}

/// Stopping policy for [`agm_mean`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
    max_iter: usize,
}

impl Tolerance {
    pub fn new(eps: f64, max_iter: usize) -> Result<Self> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::domain(format!(
                "tolerance must be positive, got {eps}"
            )));
        }
        if max_iter == 0 {
            return Err(Error::domain("max_iter must be at least 1"));
        }
        Ok(Tolerance { eps, max_iter })
    }

    /// Gap target of four ulps relative to `max(1, scale)`.
    pub fn for_scale(scale: f64) -> Self {
        let scale = if scale.is_finite() {
            scale.abs().max(1.0)
        } else {
            1.0
        };
        Tolerance {
            eps: 4.0 * f64::EPSILON * scale,
            max_iter: DEFAULT_MAX_ITER,
        }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn max_iter(&self) -> usize {
        self.max_iter
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::for_scale(1.0)
    }
}

/// Full history of an AGM run.
#[derive(Debug, Clone, PartialEq)]
pub struct AgmTrace {
    pairs: Vec<AgmPair>,
    mean: f64,
    converged: bool,
}

impl AgmTrace {
    /// All states, `pairs()[n]` being `(a_n, b_n)`.
    pub fn pairs(&self) -> &[AgmPair] {
        &self.pairs
    }

    /// Estimate of `M(a, b)`: the midpoint of the final pair.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    pub fn last(&self) -> &AgmPair {
        self.pairs
            .last()
            .expect("trace holds at least the initial pair")
    }

    /// Number of steps taken.
    pub fn steps(&self) -> usize {
        self.pairs.len() - 1
    }
}

/// One AGM step: `((a + b)/2, sqrt(ab), n + 1)`.
pub fn agm_step(p: AgmPair) -> AgmPair {
    let a1 = 0.5 * (p.a + p.b);
    let prod = p.a * p.b;
    let b1 = if prod.is_normal() || prod == 0.0 && (p.a == 0.0 || p.b == 0.0) {
        prod.sqrt()
    } else {
        // product overflowed or went subnormal
        p.a.sqrt() * p.b.sqrt()
    };
    // rounding must not break a_n >= a_{n+1} >= b_{n+1} >= b_n
    let b1 = b1.max(p.b).min(a1);
    AgmPair {
        a: a1,
        b: b1,
        index: p.index + 1,
    }
}

/// Runs exactly `steps` AGM steps from `(a, b)`, returning `steps + 1` pairs.
pub fn agm_sequence(a: f64, b: f64, steps: usize) -> Result<Vec<AgmPair>> {
    let mut pair = AgmPair::new(a, b)?;
    let mut pairs = Vec::with_capacity(steps + 1);
    pairs.push(pair);
    for _ in 0..steps {
        pair = agm_step(pair);
        pairs.push(pair);
    }
    Ok(pairs)
}

/// Iterates until `a_n - b_n <= tol.eps()`, or until a step leaves the pair
/// unchanged (an `eps` below the rounding level of the arguments).
///
/// Arguments are swapped when `a < b`. With `b = 0` the geometric member
/// stays at zero and the run converges once `a_n` has halved below `eps`.
pub fn agm_mean(a: f64, b: f64, tol: Tolerance) -> Result<AgmTrace> {
    let mut pair = AgmPair::new(a, b)?;
    let mut pairs = vec![pair];
    while pair.gap() > tol.eps {
        if pairs.len() > tol.max_iter {
            return Err(Error::NonConvergence {
                iterations: tol.max_iter,
                gap: pair.gap(),
            });
        }
        let next = agm_step(pair);
        if next.a == pair.a && next.b == pair.b {
            // gap is down to rounding and can shrink no further
            break;
        }
        pair = next;
        pairs.push(pair);
    }
    Ok(AgmTrace {
        mean: pair.midpoint(),
        pairs,
        converged: true,
    })
}

/// A priori bound `(a - b) / 2^n` on the gap of the n-th iterate.
pub fn gap_bound(a: f64, b: f64, n: u32) -> f64 {
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    // 0.5^n is exact down to the subnormal range and flushes to zero beyond
    (a - b) * 0.5f64.powi(n.min(2000) as i32)
}
