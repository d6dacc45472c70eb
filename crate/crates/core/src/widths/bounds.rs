use std::fmt;

use crate::cyclerank::crank_exact;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

use super::{dpw_exact, snum_exact};

/// `R_k(n) = k + R_k(ceil((n - k) / 2))` for `n > k`, and `R_k(n) = n` otherwise.
pub fn rk(k: usize, n: usize) -> Result<usize> {
    if k < 1 || n < 1 {
        return Err(Error::input(format!(
            "rk needs k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    let mut total = 0;
    let mut n = n;
    while n > k {
        total += k;
        n = (n - k).div_ceil(2);
    }
    Ok(total + n)
}

/// `k * log2(n / k) - 1`, the closed-form relaxation of `R_k(n) - 1`.
///
/// Only informational: it is smaller than `R_k(n) - 1` on small inputs
/// (for instance `R_1(4) - 1 = 2` while this gives 1).
pub fn closed_form_bound(k: usize, n: usize) -> f64 {
    k as f64 * (n as f64 / k as f64).log2() - 1.0
}

/// All three measures of a loop-free digraph and the chain
/// `snum <= dpw <= crank <= R_snum(n) - 1` relating them.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub snum: usize,
    pub dpw: usize,
    pub crank: usize,
    /// `R_k(n) - 1` for `k = snum >= 1`.
    pub rk_minus_one: Option<usize>,
    pub closed_form: Option<f64>,
    /// Inequalities of the chain that fail, as text.
    pub failures: Vec<String>,
}

impl BoundsReport {
    pub fn chain_holds(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "snum {} dpw {} crank {} rk-1 ",
            self.snum, self.dpw, self.crank
        )?;
        match self.rk_minus_one {
            Some(r) => write!(f, "{r}")?,
            None => f.write_str("-")?,
        }
        if self.chain_holds() {
            f.write_str(" chain ok")
        } else {
            write!(f, " chain violated: {}", self.failures.join(", "))
        }
    }
}

pub fn check_bounds(g: &Digraph) -> Result<BoundsReport> {
    if !g.is_loop_free() {
        return Err(Error::input(
            "the bounds chain is only defined for loop-free digraphs",
        ));
    }
    let n = g.vertex_count();
    let snum = snum_exact(g)?.value;
    let dpw = dpw_exact(g)?.width;
    let crank = crank_exact(g)?.value;
    let mut failures = Vec::new();
    let (rk_minus_one, closed_form) = if snum >= 1 {
        let r = rk(snum, n)? - 1;
        if crank > r {
            failures.push(format!("crank {crank} > rk-1 {r}"));
        }
        (Some(r), Some(closed_form_bound(snum, n)))
    } else {
        if crank != 0 || dpw != 0 {
            failures.push(format!("snum 0 but dpw {dpw}, crank {crank}"));
        }
        (None, None)
    };
    if snum > dpw {
        failures.push(format!("snum {snum} > dpw {dpw}"));
    }
    if dpw > crank {
        failures.push(format!("dpw {dpw} > crank {crank}"));
    }
    Ok(BoundsReport {
        n,
        snum,
        dpw,
        crank,
        rk_minus_one,
        closed_form,
        failures,
    })
}
