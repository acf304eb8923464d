//! Finite groups from named families or validated Cayley tables.
//!
//! Elements are numbered canonically:
//! - cyclic `Z(n)`: residues `0..n`;
//! - dihedral `D(2m)`: rotations `r^i` as ids `0..m`, then reflections `r^i s` as `m..2m`;
//! - dicyclic `Dic(4m)`: `a^i` as ids `0..2m`, then `a^i x` as `2m..4m`;
//! - symmetric `S(n)`: one-line images in lexicographic order;
//! - alternating `A(n)`: even permutations in lexicographic order;
//! - direct products: row-major over the factors, first factor most significant.
//!
//! Id 0 is always the identity.

pub mod parse;
mod perm;
pub mod spectrum;
pub mod table;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, lcm, prime_power_base, prime_support, PrimeSet};
pub use spectrum::OrderSpectrum;
pub use table::{validate_table, CayleyTable, CayleyTableJson};

/// Largest symmetric/alternating degree whose spectrum is supported.
pub const MAX_PERMUTATION_DEGREE: u32 = 20;
/// Largest degree for which every permutation may be enumerated.
pub const MAX_MATERIALIZED_DEGREE: u32 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid group parameters: {0}")]
    InvalidParameter(String),
    #[error("element {id} does not exist in a group of order {order}")]
    InvalidElement { id: usize, order: u64 },
    #[error("group of order {order} exceeds the cap of {cap}")]
    TooLarge { order: u64, cap: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone)]
pub enum GroupKind {
    Cyclic(u64),
    /// Parameter is the total order `2m`.
    Dihedral(u64),
    /// Parameter is the total order `4m`.
    Dicyclic(u64),
    Symmetric(u32),
    Alternating(u32),
    DirectProduct(Vec<GroupHandle>),
    CayleyTable(Arc<CayleyTable>),
}

#[derive(Debug, Clone)]
pub struct GroupHandle {
    kind: GroupKind,
    order: u64,
}

/// An element id together with its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementRef {
    pub id: usize,
    pub order: u64,
}

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameter(msg.into())
}

impl GroupHandle {
    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(invalid("Z(n) needs n >= 1"));
        }
        Ok(GroupHandle { kind: GroupKind::Cyclic(n), order: n })
    }

    /// Dihedral group with `total_order` elements.
    pub fn dihedral(total_order: u64) -> Result<Self, GroupError> {
        if total_order < 2 || !total_order.is_multiple_of(2) {
            return Err(invalid(format!(
                "D(n) takes the total order, which must be even and >= 2 (got {total_order})"
            )));
        }
        Ok(GroupHandle { kind: GroupKind::Dihedral(total_order), order: total_order })
    }

    /// Dicyclic group with `total_order` elements.
    pub fn dicyclic(total_order: u64) -> Result<Self, GroupError> {
        if total_order < 8 || !total_order.is_multiple_of(4) {
            return Err(invalid(format!(
                "Dic(n) takes the total order, which must be a multiple of 4 and >= 8 (got {total_order})"
            )));
        }
        Ok(GroupHandle { kind: GroupKind::Dicyclic(total_order), order: total_order })
    }

    pub fn symmetric(n: u32) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_PERMUTATION_DEGREE {
            return Err(invalid(format!(
                "S(n) is supported for 1 <= n <= {MAX_PERMUTATION_DEGREE} (got {n})"
            )));
        }
        Ok(GroupHandle { kind: GroupKind::Symmetric(n), order: perm::factorial(n) })
    }

    pub fn alternating(n: u32) -> Result<Self, GroupError> {
        if n == 0 || n > MAX_PERMUTATION_DEGREE {
            return Err(invalid(format!(
                "A(n) is supported for 1 <= n <= {MAX_PERMUTATION_DEGREE} (got {n})"
            )));
        }
        let order = if n <= 2 { 1 } else { perm::factorial(n) / 2 };
        Ok(GroupHandle { kind: GroupKind::Alternating(n), order })
    }

    pub fn direct_product(factors: Vec<GroupHandle>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(invalid("direct product needs at least one factor"));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, f| acc.checked_mul(f.order))
            .ok_or_else(|| invalid("direct product order overflows 64 bits"))?;
        Ok(GroupHandle { kind: GroupKind::DirectProduct(factors), order })
    }

    /// Validates `rows` as a group multiplication table.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let table = validate_table(rows)?;
        let order = table.len() as u64;
        Ok(GroupHandle { kind: GroupKind::CayleyTable(Arc::new(table)), order })
    }

    pub fn from_json(json: &CayleyTableJson) -> Result<Self, GroupError> {
        if json.table.len() != json.n {
            return Err(GroupError::NotAGroup(format!(
                "declared n = {} but the table has {} rows",
                json.n,
                json.table.len()
            )));
        }
        Self::from_table(&json.table)
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> ElementRef {
        ElementRef { id: 0, order: 1 }
    }

    /// `π(G)`.
    pub fn primes(&self) -> PrimeSet {
        prime_support(self.order)
    }

    fn check_id(&self, id: usize) -> Result<(), GroupError> {
        if (id as u64) < self.order {
            Ok(())
        } else {
            Err(GroupError::InvalidElement { id, order: self.order })
        }
    }

    pub fn element(&self, id: usize) -> Result<ElementRef, GroupError> {
        Ok(ElementRef { id, order: self.element_order(id)? })
    }

    /// Order of element `id`, computed from the family structure where possible.
    pub fn element_order(&self, id: usize) -> Result<u64, GroupError> {
        self.check_id(id)?;
        let id64 = id as u64;
        Ok(match &self.kind {
            GroupKind::Cyclic(n) => n / gcd(*n, id64),
            GroupKind::Dihedral(total) => {
                let m = total / 2;
                if id64 < m {
                    m / gcd(m, id64)
                } else {
                    2
                }
            }
            GroupKind::Dicyclic(total) => {
                let two_m = total / 2;
                if id64 < two_m {
                    two_m / gcd(two_m, id64)
                } else {
                    4
                }
            }
            GroupKind::Symmetric(n) => perm::perm_order(&perm::unrank(*n, id64)),
            GroupKind::Alternating(n) => perm::perm_order(&perm::unrank_even(*n, id64)),
            GroupKind::DirectProduct(factors) => {
                let mut acc = 1;
                for (f, c) in factors.iter().zip(self.decompose(id)) {
                    acc = lcm(acc, f.element_order(c)?);
                }
                acc
            }
            GroupKind::CayleyTable(t) => t.element_order(id),
        })
    }

    /// Orders of all elements in canonical order.
    pub fn element_orders(&self, cap: u64) -> Result<Vec<u64>, GroupError> {
        self.check_materializable(cap)?;
        match &self.kind {
            GroupKind::DirectProduct(factors) => {
                let mut acc = vec![1u64];
                for f in factors {
                    let fo = f.element_orders(cap)?;
                    acc = acc
                        .iter()
                        .flat_map(|&a| fo.iter().map(move |&b| lcm(a, b)))
                        .collect();
                }
                Ok(acc)
            }
            _ => (0..self.order as usize).map(|id| self.element_order(id)).collect(),
        }
    }

    fn check_materializable(&self, cap: u64) -> Result<(), GroupError> {
        if self.order > cap {
            return Err(GroupError::TooLarge { order: self.order, cap });
        }
        if let Some(n) = self.max_permutation_degree() {
            if n > MAX_MATERIALIZED_DEGREE {
                return Err(GroupError::Unsupported(format!(
                    "permutation groups are materialized only up to degree {MAX_MATERIALIZED_DEGREE}"
                )));
            }
        }
        Ok(())
    }

    fn max_permutation_degree(&self) -> Option<u32> {
        match &self.kind {
            GroupKind::Symmetric(n) | GroupKind::Alternating(n) => Some(*n),
            GroupKind::DirectProduct(fs) => fs.iter().filter_map(|f| f.max_permutation_degree()).max(),
            _ => None,
        }
    }

    /// Splits a product element id into factor ids.
    fn decompose(&self, id: usize) -> Vec<usize> {
        match &self.kind {
            GroupKind::DirectProduct(factors) => {
                let mut rest = id;
                let mut out = vec![0; factors.len()];
                for (i, f) in factors.iter().enumerate().rev() {
                    let n = f.order as usize;
                    out[i] = rest % n;
                    rest /= n;
                }
                out
            }
            _ => vec![id],
        }
    }

    fn compose_id(factors: &[GroupHandle], parts: &[usize]) -> usize {
        factors
            .iter()
            .zip(parts)
            .fold(0usize, |acc, (f, &p)| acc * f.order as usize + p)
    }

    /// Product `a * b` by element id.
    pub fn multiply(&self, a: usize, b: usize) -> Result<usize, GroupError> {
        self.check_id(a)?;
        self.check_id(b)?;
        let (a64, b64) = (a as u64, b as u64);
        Ok(match &self.kind {
            GroupKind::Cyclic(n) => ((a64 + b64) % n) as usize,
            GroupKind::Dihedral(total) => {
                let m = total / 2;
                semidirect_mul(m, a64, b64, 0) as usize
            }
            GroupKind::Dicyclic(total) => {
                let m = total / 4;
                semidirect_mul(2 * m, a64, b64, m) as usize
            }
            GroupKind::Symmetric(n) => {
                let p = perm::compose(&perm::unrank(*n, a64), &perm::unrank(*n, b64));
                perm::rank(&p) as usize
            }
            GroupKind::Alternating(n) => {
                let p = perm::compose(&perm::unrank_even(*n, a64), &perm::unrank_even(*n, b64));
                perm::rank_even(&p) as usize
            }
            GroupKind::DirectProduct(factors) => {
                let (pa, pb) = (self.decompose(a), self.decompose(b));
                let mut parts = Vec::with_capacity(factors.len());
                for ((f, x), y) in factors.iter().zip(pa).zip(pb) {
                    parts.push(f.multiply(x, y)?);
                }
                Self::compose_id(factors, &parts)
            }
            GroupKind::CayleyTable(t) => t.mul(a, b),
        })
    }

    /// Materializes the full multiplication table.
    pub fn cayley_table(&self, cap: u64) -> Result<CayleyTable, GroupError> {
        if let GroupKind::CayleyTable(t) = &self.kind {
            return Ok((**t).clone());
        }
        self.check_materializable(cap)?;
        let n = self.order as usize;
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(self.multiply(a, b)? as u32);
            }
        }
        Ok(CayleyTable::from_cells_unchecked(n, cells))
    }

    /// Exact count of elements of each order.
    pub fn order_spectrum(&self) -> OrderSpectrum {
        match &self.kind {
            GroupKind::Cyclic(n) => OrderSpectrum::cyclic(*n),
            GroupKind::Dihedral(total) => {
                let m = total / 2;
                let mut s = OrderSpectrum::cyclic(m);
                s.add(2, m);
                s
            }
            GroupKind::Dicyclic(total) => {
                let two_m = total / 2;
                let mut s = OrderSpectrum::cyclic(two_m);
                s.add(4, two_m);
                s
            }
            GroupKind::Symmetric(n) => permutation_spectrum(*n, false),
            GroupKind::Alternating(n) => permutation_spectrum(*n, true),
            GroupKind::DirectProduct(factors) => factors
                .iter()
                .map(|f| f.order_spectrum())
                .reduce(|a, b| a.lcm_convolve(&b))
                .expect("products have at least one factor"),
            GroupKind::CayleyTable(t) => {
                OrderSpectrum::from_orders((0..t.len()).map(|a| t.element_order(a)))
            }
        }
    }

    pub fn has_element_of_order(&self, m: u64) -> bool {
        self.order_spectrum().count(m) > 0
    }

    /// Center `Z(G)`, in ascending id order.
    pub fn center(&self) -> Result<Vec<ElementRef>, GroupError> {
        let ids: Vec<usize> = match &self.kind {
            GroupKind::Cyclic(n) => (0..*n as usize).collect(),
            GroupKind::Dihedral(total) => {
                let m = total / 2;
                if m <= 2 {
                    (0..*total as usize).collect()
                } else if m % 2 == 0 {
                    vec![0, (m / 2) as usize]
                } else {
                    vec![0]
                }
            }
            GroupKind::Dicyclic(total) => vec![0, (total / 4) as usize],
            GroupKind::Symmetric(n) if *n <= 2 => (0..self.order as usize).collect(),
            GroupKind::Alternating(n) if *n <= 3 => (0..self.order as usize).collect(),
            GroupKind::Symmetric(_) | GroupKind::Alternating(_) => vec![0],
            GroupKind::DirectProduct(factors) => {
                let mut acc = vec![Vec::<usize>::new()];
                for f in factors {
                    let zf = f.center()?;
                    acc = acc
                        .iter()
                        .flat_map(|prefix| {
                            zf.iter().map(move |z| {
                                let mut p = prefix.clone();
                                p.push(z.id);
                                p
                            })
                        })
                        .collect();
                }
                let mut ids: Vec<usize> =
                    acc.iter().map(|parts| Self::compose_id(factors, parts)).collect();
                ids.sort_unstable();
                ids
            }
            GroupKind::CayleyTable(t) => (0..t.len())
                .filter(|&z| (0..t.len()).all(|x| t.mul(z, x) == t.mul(x, z)))
                .collect(),
        };
        ids.into_iter().map(|id| self.element(id)).collect()
    }

    /// Closed-form nilpotency for the families; p-element closure for tables.
    pub fn is_nilpotent(&self) -> bool {
        match &self.kind {
            GroupKind::Cyclic(_) => true,
            GroupKind::Dihedral(total) => (total / 2).is_power_of_two(),
            GroupKind::Dicyclic(total) => total.is_power_of_two(),
            GroupKind::Symmetric(n) => *n <= 2,
            GroupKind::Alternating(n) => *n <= 3,
            GroupKind::DirectProduct(factors) => factors.iter().all(|f| f.is_nilpotent()),
            GroupKind::CayleyTable(t) => p_elements_closed(t),
        }
    }

    /// Whether `|G|` is `p^n` or `2 p^n` for a prime `p` (1 counts as `p^0`).
    pub fn order_is_p_power_or_twice(&self) -> bool {
        let n = self.order;
        n == 1
            || prime_power_base(n).is_some()
            || (n.is_multiple_of(2) && prime_power_base(n / 2).is_some_and(|p| p != 2))
    }
}

/// Multiplication in `<r> ⋊ <s>` with `s r s^-1 = r^-1` and `s^2 = r^shift`,
/// where `<r>` has order `m`. Ids `< m` are `r^i`, ids `>= m` are `r^i s`.
fn semidirect_mul(m: u64, a: u64, b: u64, shift: u64) -> u64 {
    let (i, j) = (a % m, a >= m);
    let (k, l) = (b % m, b >= m);
    match (j, l) {
        (false, _) => (i + k) % m + if l { m } else { 0 },
        (true, false) => (i + m - k) % m + m,
        (true, true) => (i + m - k + shift) % m,
    }
}

fn permutation_spectrum(n: u32, even_only: bool) -> OrderSpectrum {
    let mut s = OrderSpectrum::default();
    for parts in perm::partitions(n) {
        let even_parts = parts.iter().filter(|&&a| a % 2 == 0).count();
        if even_only && even_parts % 2 == 1 {
            continue;
        }
        let order = parts.iter().fold(1u64, |acc, &a| lcm(acc, a as u64));
        s.add(order, perm::cycle_type_count(n, &parts));
    }
    s
}

/// A finite group is nilpotent iff, for every prime `p`, its `p`-elements
/// are closed under multiplication.
fn p_elements_closed(t: &CayleyTable) -> bool {
    let orders: Vec<u64> = (0..t.len()).map(|a| t.element_order(a)).collect();
    prime_support(t.len() as u64).iter().all(|p| {
        let members: Vec<usize> = (0..t.len())
            .filter(|&a| prime_support(orders[a]).is_subset(&PrimeSet::from_primes([p])))
            .collect();
        let mut inside = vec![false; t.len()];
        for &a in &members {
            inside[a] = true;
        }
        members
            .iter()
            .all(|&a| members.iter().all(|&b| inside[t.mul(a, b)]))
    })
}

impl fmt::Display for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Cyclic(n) => write!(f, "Z({n})"),
            GroupKind::Dihedral(n) => write!(f, "D({n})"),
            GroupKind::Dicyclic(n) => write!(f, "Dic({n})"),
            GroupKind::Symmetric(n) => write!(f, "S({n})"),
            GroupKind::Alternating(n) => write!(f, "A({n})"),
            GroupKind::DirectProduct(factors) => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupKind::CayleyTable(t) => write!(f, "Table({})", t.len()),
        }
    }
}
