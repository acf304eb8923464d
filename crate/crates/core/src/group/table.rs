use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GroupError;

/// Tables up to this size get the exhaustive O(n^3) associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;
const RANDOM_TRIPLES: usize = 100_000;
const SAMPLING_SEED: u64 = 0x5eed_c0de;

/// A validated multiplication table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u32>,
}

/// On-disk form: `{"n": int, "table": [[int]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyTableJson {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn to_json(&self) -> CayleyTableJson {
        CayleyTableJson { n: self.n, table: self.rows() }
    }

    /// Order of element `a` by repeated multiplication.
    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1u64;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<u32>) -> Self {
        CayleyTable { n, cells }
    }
}

fn not_a_group(reason: String) -> GroupError {
    GroupError::NotAGroup(reason)
}

/// Checks the group axioms on a square table. If the two-sided identity is
/// not element 0, elements 0 and the identity are swapped so that element 0
/// is the identity in the returned table.
pub fn validate_table(rows: &[Vec<usize>]) -> Result<CayleyTable, GroupError> {
    let n = rows.len();
    if n == 0 {
        return Err(not_a_group("empty table".into()));
    }
    if n > u32::MAX as usize {
        return Err(not_a_group(format!("table of size {n} is too large")));
    }
    let mut cells = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(not_a_group(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(not_a_group(format!("entry ({i},{j}) = {v} is out of range")));
            }
            cells.push(v as u32);
        }
    }
    let mut table = CayleyTable { n, cells };

    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table.mul(e, x) == x && table.mul(x, e) == x))
        .ok_or_else(|| not_a_group("no two-sided identity".into()))?;
    if identity != 0 {
        table = relabel_swap(&table, 0, identity);
    }

    for a in 0..n {
        let inv = (0..n).find(|&b| table.mul(a, b) == 0);
        match inv {
            Some(b) if table.mul(b, a) == 0 => {}
            Some(b) => {
                return Err(not_a_group(format!(
                    "element {a} has right inverse {b} that is not a left inverse"
                )))
            }
            None => return Err(not_a_group(format!("element {a} has no inverse"))),
        }
    }

    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        check_associative_exhaustive(&table)?;
    } else {
        check_associative_light(&table)?;
        check_associative_sampled(&table)?;
    }
    Ok(table)
}

fn relabel_swap(t: &CayleyTable, a: usize, b: usize) -> CayleyTable {
    let swap = |x: usize| if x == a { b } else if x == b { a } else { x };
    let n = t.n;
    let mut cells = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            cells[swap(x) * n + swap(y)] = swap(t.mul(x, y)) as u32;
        }
    }
    CayleyTable { n, cells }
}

fn associativity_error(x: usize, y: usize, z: usize) -> GroupError {
    not_a_group(format!("associativity fails for ({x}, {y}, {z})"))
}

fn check_associative_exhaustive(t: &CayleyTable) -> Result<(), GroupError> {
    for x in 0..t.n {
        for y in 0..t.n {
            let xy = t.mul(x, y);
            for z in 0..t.n {
                if t.mul(xy, z) != t.mul(x, t.mul(y, z)) {
                    return Err(associativity_error(x, y, z));
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set: repeatedly adjoin the smallest element outside the
/// closure of the generators chosen so far.
fn generators(t: &CayleyTable) -> Vec<usize> {
    let n = t.n;
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0usize];
    let mut gens = Vec::new();
    while let Some(g) = (0..n).find(|&x| !inside[x]) {
        gens.push(g);
        inside[g] = true;
        members.push(g);
        let mut frontier = 0;
        // close under products with every member
        while frontier < members.len() {
            let a = members[frontier];
            frontier += 1;
            let mut i = 0;
            while i < members.len() {
                for p in [t.mul(a, members[i]), t.mul(members[i], a)] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
                i += 1;
            }
        }
    }
    gens
}

/// Light's test: associativity holds iff `(x g) y = x (g y)` for every
/// generator `g`.
fn check_associative_light(t: &CayleyTable) -> Result<(), GroupError> {
    for g in generators(t) {
        for x in 0..t.n {
            let xg = t.mul(x, g);
            for y in 0..t.n {
                if t.mul(xg, y) != t.mul(x, t.mul(g, y)) {
                    return Err(associativity_error(x, g, y));
                }
            }
        }
    }
    Ok(())
}

fn check_associative_sampled(t: &CayleyTable) -> Result<(), GroupError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLING_SEED);
    for _ in 0..RANDOM_TRIPLES {
        let (x, y, z) = (rng.gen_range(0..t.n), rng.gen_range(0..t.n), rng.gen_range(0..t.n));
        if t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)) {
            return Err(associativity_error(x, y, z));
        }
    }
    Ok(())
}
