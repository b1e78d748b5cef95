use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::bijections::VariantMap;
use crate::error::{Error, Result};
use crate::localtypes::LocalType;

/// Type marker `z[m,i]`: nodes with `m` occupied slots whose pattern is
/// variant `i` (1-based) of the variant numbering. Class 0 has the single
/// variant `z[0,1]`, the leaf marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkerVariable {
    pub class: usize,
    pub variant: usize,
}

impl fmt::Display for MarkerVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z[{},{}]", self.class, self.variant)
    }
}

/// The marker variables a series is written in, in storage order: `z[0,1]`,
/// then every variant of class 1, class 2, …, class `k + 1`.
///
/// A layout without markers is used for series specialised at all markers
/// equal to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerLayout {
    k: usize,
    markers: Vec<MarkerVariable>,
}

impl MarkerLayout {
    pub fn full(k: usize) -> Self {
        let map = VariantMap::new(k);
        let mut markers = vec![MarkerVariable {
            class: 0,
            variant: 1,
        }];
        for class in 1..=k + 1 {
            markers.extend(
                (1..=map.variant_count(class - 1)).map(|variant| MarkerVariable { class, variant }),
            );
        }
        Self { k, markers }
    }

    pub fn unmarked(k: usize) -> Self {
        Self {
            k,
            markers: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_marked(&self) -> bool {
        !self.markers.is_empty()
    }

    pub fn markers(&self) -> &[MarkerVariable] {
        &self.markers
    }

    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    pub fn index_of(&self, marker: MarkerVariable) -> Option<usize> {
        self.markers.binary_search(&marker).ok()
    }

    /// Marker of a node (or letter) of the given local type.
    pub fn marker_for_type(&self, map: &VariantMap, ty: LocalType) -> MarkerVariable {
        match map.index_of(ty) {
            None => MarkerVariable {
                class: 0,
                variant: 1,
            },
            Some((l, i)) => MarkerVariable {
                class: l + 1,
                variant: i,
            },
        }
    }

    /// Indices of every variant of class `m`.
    pub fn class_indices(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.markers
            .iter()
            .enumerate()
            .filter(move |(_, m)| m.class == class)
            .map(|(i, _)| i)
    }
}

/// Exponents of `t` and of each marker in layout order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub t: u32,
    pub z: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(layout: &MarkerLayout) -> Self {
        Self {
            t: 0,
            z: SmallVec::from_elem(0, layout.len()),
        }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            t: self.t + other.t,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn marker_degree(&self) -> u32 {
        self.z.iter().map(|&e| e as u32).sum()
    }
}

/// Polynomial in `t` and the marker variables with exact integer coefficients,
/// truncated above `t^max_deg`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    layout: MarkerLayout,
    max_deg: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(layout: MarkerLayout, max_deg: u32) -> Self {
        Self {
            layout,
            max_deg,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(layout: MarkerLayout, max_deg: u32) -> Self {
        let mut s = Self::zero(layout, max_deg);
        let m = Monomial::one(&s.layout);
        s.terms.insert(m, BigInt::one());
        s
    }

    /// `coeff · t^t_exp · z^z_exp`; dropped if above the truncation order.
    pub fn monomial(
        layout: MarkerLayout,
        max_deg: u32,
        coeff: BigInt,
        t_exp: u32,
        z_exp: &[u32],
    ) -> Result<Self> {
        if z_exp.len() != layout.len() {
            return Err(Error::MarkerMismatch {
                expected: layout.len(),
                found: z_exp.len(),
            });
        }
        let mut s = Self::zero(layout, max_deg);
        if t_exp <= max_deg && !coeff.is_zero() {
            let m = Monomial {
                t: t_exp,
                z: z_exp.iter().map(|&e| e as u16).collect(),
            };
            s.terms.insert(m, coeff);
        }
        Ok(s)
    }

    /// `w · t · Σ_{i ∈ indices} z_i`, or `w · c · t` for an unmarked layout
    /// where `c` counts the indices.
    pub(crate) fn weighted_marker_sum(
        layout: &MarkerLayout,
        max_deg: u32,
        weight: u64,
        class: usize,
        variants: usize,
    ) -> Self {
        let mut s = Self::zero(layout.clone(), max_deg);
        if max_deg == 0 {
            return s;
        }
        if layout.is_marked() {
            for idx in layout.class_indices(class) {
                let mut m = Monomial::one(layout);
                m.t = 1;
                m.z[idx] = 1;
                s.terms.insert(m, BigInt::from(weight));
            }
        } else {
            let mut m = Monomial::one(layout);
            m.t = 1;
            s.terms
                .insert(m, BigInt::from(weight) * BigInt::from(variants));
        }
        s
    }

    pub fn layout(&self) -> &MarkerLayout {
        &self.layout
    }

    pub fn max_deg(&self) -> u32 {
        self.max_deg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact coefficient of `t^t_exp · z^z_exp`; zero if absent.
    pub fn coefficient(&self, t_exp: u32, z_exp: &[u32]) -> Result<BigInt> {
        if t_exp > self.max_deg {
            return Err(Error::BeyondTruncation {
                requested: t_exp,
                max_deg: self.max_deg,
            });
        }
        if z_exp.len() != self.layout.len() {
            return Err(Error::MarkerMismatch {
                expected: self.layout.len(),
                found: z_exp.len(),
            });
        }
        let m = Monomial {
            t: t_exp,
            z: z_exp.iter().map(|&e| e as u16).collect(),
        };
        Ok(self.terms.get(&m).cloned().unwrap_or_default())
    }

    /// Sum of all coefficients at `t^d`.
    pub fn t_coefficient_total(&self, d: u32) -> Result<BigInt> {
        if d > self.max_deg {
            return Err(Error::BeyondTruncation {
                requested: d,
                max_deg: self.max_deg,
            });
        }
        Ok(self
            .terms
            .iter()
            .filter(|(m, _)| m.t == d)
            .map(|(_, c)| c)
            .sum())
    }

    /// Coefficients of `1, t, …, t^max_deg` after setting every marker to 1.
    pub fn all_ones_coefficients(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.max_deg as usize + 1];
        for (m, c) in &self.terms {
            out[m.t as usize] += c;
        }
        out
    }

    /// The series with every marker set to 1.
    pub fn specialize_all_ones(&self) -> TruncatedSeries {
        let layout = MarkerLayout::unmarked(self.layout.k());
        let mut s = Self::zero(layout, self.max_deg);
        for (d, c) in self.all_ones_coefficients().into_iter().enumerate() {
            if !c.is_zero() {
                let mut m = Monomial::one(&s.layout);
                m.t = d as u32;
                s.terms.insert(m, c);
            }
        }
        s
    }

    /// Terms with `t`-degree exactly `d`, same truncation order.
    pub fn homogeneous_component(&self, d: u32) -> TruncatedSeries {
        let mut s = Self::zero(self.layout.clone(), self.max_deg);
        s.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.t == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        s
    }

    /// Drops every term above `t^max_deg` and lowers the truncation order.
    pub fn truncate(&self, max_deg: u32) -> TruncatedSeries {
        let max_deg = max_deg.min(self.max_deg);
        let mut s = Self::zero(self.layout.clone(), max_deg);
        s.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.t <= max_deg)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        s
    }

    /// Same terms under a higher truncation order (no new terms appear).
    pub fn with_max_deg(mut self, max_deg: u32) -> TruncatedSeries {
        if max_deg < self.max_deg {
            return self.truncate(max_deg);
        }
        self.max_deg = max_deg;
        self
    }

    fn check_layout(&self, other: &TruncatedSeries) {
        assert_eq!(self.layout, other.layout, "series over different markers");
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.check_layout(other);
        let max_deg = self.max_deg.min(other.max_deg);
        let mut s = self.truncate(max_deg);
        for (m, c) in &other.terms {
            if m.t > max_deg {
                continue;
            }
            let e = s.terms.entry(m.clone()).or_default();
            *e += c;
            if e.is_zero() {
                s.terms.remove(m);
            }
        }
        s
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.mul_truncated(other, self.max_deg.min(other.max_deg))
    }

    pub fn mul_truncated(&self, other: &TruncatedSeries, max_deg: u32) -> TruncatedSeries {
        self.check_layout(other);
        let max_deg = max_deg.min(self.max_deg).min(other.max_deg);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &self.terms {
            if ma.t > max_deg {
                continue;
            }
            for (mb, cb) in &other.terms {
                if ma.t + mb.t > max_deg {
                    continue;
                }
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let mut s = Self::zero(self.layout.clone(), max_deg);
        s.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        s
    }

    pub fn scale(&self, factor: &BigInt) -> TruncatedSeries {
        let mut s = Self::zero(self.layout.clone(), self.max_deg);
        if !factor.is_zero() {
            s.terms = self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect();
        }
        s
    }

    /// `1 + x + x² + …` truncated; `x` must have no constant term.
    pub fn quasi_inverse(&self) -> TruncatedSeries {
        assert!(
            self.terms.keys().all(|m| m.t > 0),
            "quasi-inverse needs a series without constant term"
        );
        let one = Self::one(self.layout.clone(), self.max_deg);
        // Horner: r ← 1 + x·r, each pass fixes one more degree
        let mut r = one.clone();
        for _ in 0..self.max_deg {
            r = one.add(&self.mul(&r));
        }
        r
    }

    /// Multiplies by `t · z[0,1]` (or `t` when unmarked), raising the
    /// truncation order by one.
    pub fn mark_last_leaf(&self) -> TruncatedSeries {
        let mut s = Self::zero(self.layout.clone(), self.max_deg + 1);
        s.terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.t += 1;
                if let Some(z0) = m.z.first_mut() {
                    *z0 += 1;
                }
                (m, c.clone())
            })
            .collect();
        s
    }

    /// Every term of a marked series has `t`-degree equal to its total
    /// marker degree.
    pub fn satisfies_degree_law(&self) -> bool {
        !self.layout.is_marked() || self.terms.keys().all(|m| m.t == m.marker_degree())
    }
}

/// One term per line: `coeff t^a z[m,i]^b …`, markers with zero exponent
/// omitted, terms sorted by `t`-degree then by marker exponent vector
/// (lexicographic, layout order).
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            write!(f, "{c} t^{}", m.t)?;
            for (marker, &e) in self.layout.markers().iter().zip(&m.z) {
                if e > 0 {
                    write!(f, " {marker}^{e}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
