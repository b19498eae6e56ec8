//! Sheaf cohomology `h^i(P^n, M~(d))` via graded local duality on the dualized
//! minimal resolution, plus a closed-form oracle for sums of line bundles.
//!
//! For `i >= 1`, `H^i(M~(d)) = H^{i+1}_m(M)_d`, which is dual to
//! `Ext^{n-i}_S(M, S)_{-d-n-1}`. For `i = 0` the four-term sequence
//! `0 -> H^0_m(M) -> M -> ⊕_d H^0(M~(d)) -> H^1_m(M) -> 0` gives
//! `h^0 = dim M_d - dim Ext^{n+1}_{-d-n-1} + dim Ext^n_{-d-n-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binomial, strand_rank, Field, GradedMap, Ring};
use crate::error::{Error, Result};
use crate::resolution::{minimal_free_resolution, FreeResolution, HilbertPolynomial, Presentation};

/// A presentation together with its cached minimal resolution, dualized complex
/// and strand ranks. All caches are write-once; the value is safe to share
/// across threads.
pub struct CoherentSheaf<K: Field> {
    pres: Presentation<K>,
    resolution: OnceLock<FreeResolution<K>>,
    dual: OnceLock<Vec<GradedMap<K>>>,
    hilbert: OnceLock<HilbertPolynomial>,
    ranks: Mutex<HashMap<(usize, i64), usize>>,
}

impl<K: Field> fmt::Debug for CoherentSheaf<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoherentSheaf").field("pres", &self.pres).finish_non_exhaustive()
    }
}

impl<K: Field> Clone for CoherentSheaf<K> {
    fn clone(&self) -> Self {
        CoherentSheaf::new(self.pres.clone())
    }
}

impl<K: Field> CoherentSheaf<K> {
    pub fn new(pres: Presentation<K>) -> Self {
        CoherentSheaf {
            pres,
            resolution: OnceLock::new(),
            dual: OnceLock::new(),
            hilbert: OnceLock::new(),
            ranks: Mutex::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation<K> {
        &self.pres
    }

    pub fn ring(&self) -> &Ring<K> {
        self.pres.ring()
    }

    /// `n` for `P^n`.
    pub fn dim(&self) -> usize {
        self.ring().dim()
    }

    pub fn resolution(&self) -> &FreeResolution<K> {
        self.resolution.get_or_init(|| minimal_free_resolution(&self.pres))
    }

    /// `dual()[j]` is `Hom(d_{j+1}, S): F_j^* -> F_{j+1}^*`.
    fn dual(&self) -> &[GradedMap<K>] {
        self.dual.get_or_init(|| self.resolution().maps().iter().map(GradedMap::dual).collect())
    }

    pub fn hilbert_polynomial(&self) -> &HilbertPolynomial {
        self.hilbert
            .get_or_init(|| HilbertPolynomial::from_resolution(self.resolution(), self.ring().num_vars()))
    }

    /// `dim M_d`, exact in every degree.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        self.resolution().hilbert_function(d)
    }

    fn dual_rank(&self, j: usize, e: i64) -> usize {
        let dual = self.dual();
        if j >= dual.len() {
            return 0;
        }
        if let Some(&r) = self.ranks.lock().unwrap().get(&(j, e)) {
            return r;
        }
        let r = strand_rank(&dual[j], e);
        self.ranks.lock().unwrap().insert((j, e), r);
        r
    }

    /// `dim Ext^j_S(M, S)_e`: homology of the dualized resolution in degree `e`.
    pub fn ext_dim(&self, j: usize, e: i64) -> u64 {
        let res = self.resolution();
        let Some(f) = res.modules().get(j) else {
            return 0;
        };
        let dim = f.dual().hilbert_function(e);
        let outgoing = self.dual_rank(j, e);
        let incoming = if j > 0 { self.dual_rank(j - 1, e) } else { 0 };
        (dim - outgoing - incoming) as u64
    }

    /// `h^i(P^n, M~(d))`.
    pub fn h(&self, i: usize, d: i64) -> Result<u64> {
        let n = self.dim();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i as i64, max: n as i64 });
        }
        let e = -d - n as i64 - 1;
        if i >= 1 {
            return Ok(self.ext_dim(n - i, e));
        }
        let v = self.hilbert_function(d) - self.ext_dim(n + 1, e) as i64 + self.ext_dim(n, e) as i64;
        debug_assert!(v >= 0);
        Ok(v as u64)
    }

    /// `χ(M~(d)) = Σ (-1)^i h^i(M~(d))`.
    pub fn euler_characteristic(&self, d: i64) -> i64 {
        (0..=self.dim())
            .map(|i| {
                let h = self.h(i, d).unwrap() as i64;
                if i % 2 == 0 {
                    h
                } else {
                    -h
                }
            })
            .sum()
    }

    pub fn table(&self, d_min: i64, d_max: i64) -> CohomologyTable {
        assert!(d_min <= d_max, "empty twist window");
        let n = self.dim();
        // resolve once up front so the parallel fill only reads the caches
        self.dual();
        let cells: Vec<(usize, i64)> = (0..=n).flat_map(|i| (d_min..=d_max).map(move |d| (i, d))).collect();
        let values: Vec<u64> = cells.par_iter().map(|&(i, d)| self.h(i, d).unwrap()).collect();
        let width = (d_max - d_min + 1) as usize;
        let h = values.chunks(width).map(<[u64]>::to_vec).collect();
        CohomologyTable { n, window: [d_min, d_max], h }
    }
}

/// `dim Ext^j_S(M, S)_d`.
pub fn ext_strand_dim<K: Field>(pres: &Presentation<K>, j: usize, d: i64) -> u64 {
    CoherentSheaf::new(pres.clone()).ext_dim(j, d)
}

/// `h^i(P^n, M~(d))`.
pub fn sheaf_cohomology_dim<K: Field>(pres: &Presentation<K>, i: usize, d: i64) -> Result<u64> {
    CoherentSheaf::new(pres.clone()).h(i, d)
}

pub fn cohomology_table<K: Field>(pres: &Presentation<K>, d_min: i64, d_max: i64) -> CohomologyTable {
    CoherentSheaf::new(pres.clone()).table(d_min, d_max)
}

/// Closed form for `⊕_j O(t_j)` on `P^n`: `h^0 = Σ C(n + t_j + d, n)`,
/// `h^n = Σ C(-t_j - d - 1, n)`, nothing in between.
pub fn line_bundle_oracle(n: usize, twists: &[i64], i: usize, d: i64) -> u64 {
    let n = n as i64;
    let total: u128 = if i == 0 {
        twists.iter().map(|t| binomial(n + t + d, n)).sum()
    } else if i as i64 == n {
        twists.iter().map(|t| binomial(-t - d - 1, n)).sum()
    } else {
        0
    };
    total as u64
}

/// `h[i][d - window[0]] = h^i(M~(d))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub window: [i64; 2],
    pub h: Vec<Vec<u64>>,
}

impl CohomologyTable {
    pub fn get(&self, i: usize, d: i64) -> u64 {
        self.h[i][(d - self.window[0]) as usize]
    }

    pub fn twists(&self) -> std::ops::RangeInclusive<i64> {
        self.window[0]..=self.window[1]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    /// Rows `h^n` down to `h^0`, columns by ascending twist.
    pub fn to_ascii(&self) -> String {
        let width = self
            .h
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain(self.twists().map(|d| d.to_string().len()))
            .max()
            .unwrap_or(1)
            + 1;
        let label = format!("h^{}:", self.n).len().max(2);
        let mut s = format!("{:>label$}", "d");
        for d in self.twists() {
            s.push_str(&format!("{d:>width$}"));
        }
        s.push('\n');
        for i in (0..=self.n).rev() {
            s.push_str(&format!("{:>label$}", format!("h^{i}:")));
            for v in &self.h[i] {
                s.push_str(&format!("{v:>width$}"));
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}
