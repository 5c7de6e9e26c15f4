//! Brute-force moment–cumulant relations by partition enumeration.
//!
//! Shares no series arithmetic with the transform recursions: moments and
//! cumulants are related here only through sums over non-crossing partitions
//! (free case) and interval partitions (Boolean case).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::functional::MomentFunctional;
use crate::series::Coeff;

/// Largest `n` the enumerators accept. Catalan(14) is about 2.7 million.
pub const MAX_N: usize = 14;

/// A set partition of `{1..n}`: sorted blocks, ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates that the blocks are non-empty, disjoint and cover `{1..n}`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::BadParam("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::BadParam(format!("element {x} out of range or repeated")));
                }
                seen[x] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    fn from_labels(labels: &[u8], nblocks: usize) -> Self {
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { blocks }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_non_crossing(&self) -> bool {
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                // a_1 < b_1 < a_2 < b_2 for some choice of elements
                for &b1 in b {
                    for &b2 in b.iter().filter(|&&x| x > b1) {
                        let inside = a.iter().any(|&x| b1 < x && x < b2);
                        let outside = a.iter().any(|&x| x < b1 || x > b2);
                        if inside && outside {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_interval(&self) -> bool {
        self.blocks.iter().all(|b| b.windows(2).all(|w| w[1] == w[0] + 1))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::OrderCap { n, max: MAX_N })
    } else {
        Ok(())
    }
}

/// Visits every non-crossing partition of `{1..n}` once, as a block label per element.
///
/// Left to right, each element opens a new block or joins a block still on the
/// stack of open blocks; joining a block closes every block opened after it.
fn visit_nc(n: usize, f: &mut impl FnMut(&[u8], usize)) {
    fn rec(
        i: usize,
        n: usize,
        labels: &mut Vec<u8>,
        stack: &mut Vec<u8>,
        nblocks: usize,
        f: &mut impl FnMut(&[u8], usize),
    ) {
        if i == n {
            f(labels, nblocks);
            return;
        }
        stack.push(nblocks as u8);
        labels.push(nblocks as u8);
        rec(i + 1, n, labels, stack, nblocks + 1, f);
        labels.pop();
        stack.pop();
        for depth in (0..stack.len()).rev() {
            let saved: Vec<u8> = stack.drain(depth + 1..).collect();
            labels.push(stack[depth]);
            rec(i + 1, n, labels, stack, nblocks, f);
            labels.pop();
            stack.extend(saved);
        }
    }
    rec(0, n, &mut Vec::with_capacity(n), &mut Vec::new(), 0, f);
}

pub fn enumerate_nc(n: usize) -> Result<Vec<SetPartition>> {
    check_n(n)?;
    let mut out = Vec::new();
    visit_nc(n, &mut |labels, k| out.push(SetPartition::from_labels(labels, k)));
    Ok(out)
}

/// Interval partitions correspond to the `2^{n-1}` ways of cutting `1..n` into runs.
pub fn enumerate_interval(n: usize) -> Result<Vec<SetPartition>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    for cuts in 0u32..(1 << (n - 1)) {
        let mut blocks = vec![vec![1]];
        for x in 2..=n {
            if cuts & (1 << (x - 2)) != 0 {
                blocks.push(vec![x]);
            } else {
                blocks.last_mut().unwrap().push(x);
            }
        }
        out.push(SetPartition { blocks });
    }
    Ok(out)
}

/// Partition counts per block-size profile (sorted block sizes) for each `n`.
struct TypeTable {
    by_n: Vec<BTreeMap<Vec<usize>, u64>>,
}

impl TypeTable {
    fn non_crossing(max_n: usize) -> Result<Self> {
        let mut by_n = vec![BTreeMap::new()];
        for n in 1..=max_n {
            check_n(n)?;
            let mut table = BTreeMap::new();
            visit_nc(n, &mut |labels, k| {
                *table.entry(profile(labels, k)).or_insert(0) += 1;
            });
            by_n.push(table);
        }
        Ok(TypeTable { by_n })
    }

    fn interval(max_n: usize) -> Result<Self> {
        let mut by_n = vec![BTreeMap::new()];
        for n in 1..=max_n {
            let mut table = BTreeMap::new();
            for p in enumerate_interval(n)? {
                let mut sizes: Vec<usize> = p.blocks.iter().map(Vec::len).collect();
                sizes.sort_unstable();
                *table.entry(sizes).or_insert(0) += 1;
            }
            by_n.push(table);
        }
        Ok(TypeTable { by_n })
    }

    /// `Σ_π t^{|π|} Π_V c_{|V|}` over partitions of `{1..n}`, optionally skipping
    /// the one-block partition.
    fn sum<R: Coeff>(&self, n: usize, c: &[R], t: &R, skip_full: bool) -> R {
        let mut acc = R::zero();
        for (sizes, &count) in &self.by_n[n] {
            if skip_full && sizes.len() == 1 {
                continue;
            }
            let mut term = R::from_int(count as i64).mul(&t.pow(sizes.len() as u32));
            for &s in sizes {
                term = term.mul(&c[s - 1]);
            }
            acc = acc.add(&term);
        }
        acc
    }
}

fn profile(labels: &[u8], nblocks: usize) -> Vec<usize> {
    let mut sizes = vec![0usize; nblocks];
    for &l in labels {
        sizes[l as usize] += 1;
    }
    sizes.sort_unstable();
    sizes
}

/// `m_n(t) = Σ_{π ∈ NC(n)} t^{|π|} Π_{V ∈ π} κ_{|V|}` for `n = 1..order`.
pub fn moments_from_free_cumulants<R: Coeff>(kappa: &[R], t: &R, order: usize) -> Result<MomentFunctional<R>> {
    if kappa.len() < order {
        return Err(Error::BadParam(format!("need {order} cumulants, got {}", kappa.len())));
    }
    let table = TypeTable::non_crossing(order)?;
    Ok(MomentFunctional::new((1..=order).map(|n| table.sum(n, kappa, t, false)).collect()))
}

/// `m_n = Σ_{π ∈ Int(n)} Π_{V ∈ π} b_{|V|}`.
pub fn moments_from_boolean_cumulants<R: Coeff>(b: &[R], order: usize) -> Result<MomentFunctional<R>> {
    if b.len() < order {
        return Err(Error::BadParam(format!("need {order} cumulants, got {}", b.len())));
    }
    let table = TypeTable::interval(order)?;
    Ok(MomentFunctional::new((1..=order).map(|n| table.sum(n, b, &R::one(), false)).collect()))
}

/// Free cumulants `κ_1..κ_N` by triangular inversion of the non-crossing sum.
pub fn free_cumulants_oracle<R: Coeff>(mf: &MomentFunctional<R>) -> Result<Vec<R>> {
    let table = TypeTable::non_crossing(mf.order())?;
    invert(&table, mf)
}

/// Boolean cumulants `b_1..b_N` by triangular inversion of the interval sum.
pub fn boolean_cumulants_oracle<R: Coeff>(mf: &MomentFunctional<R>) -> Result<Vec<R>> {
    let table = TypeTable::interval(mf.order())?;
    invert(&table, mf)
}

fn invert<R: Coeff>(table: &TypeTable, mf: &MomentFunctional<R>) -> Result<Vec<R>> {
    let mut c: Vec<R> = Vec::with_capacity(mf.order());
    for n in 1..=mf.order() {
        // lower blocks only reference c_1..c_{n-1}
        c.push(R::zero());
        let rest = table.sum(n, &c, &R::one(), true);
        c[n - 1] = mf.moment(n).sub(&rest);
    }
    Ok(c)
}
