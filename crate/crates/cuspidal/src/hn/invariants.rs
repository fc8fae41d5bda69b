use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::expand::{expand, Expansion};
use super::pairs::{steps, HnPair, HnSeq};
use crate::error::{Error, Result};
use crate::lattice::{inductance_forest, minus_two_twigs, DualGraph, InductanceMode};
use crate::rational::Rational;

fn standard(seq: &HnSeq) -> Result<()> {
    seq.validate().map_err(Error::NonStandard)
}

fn b_minus(q: HnPair) -> u64 {
    let r = q.c % q.p;
    u64::from(r > 0 && q.p >= 2 * r)
}

fn b_plus(q: HnPair) -> u64 {
    let r = q.p % q.c;
    u64::from(r > 0 && q.c >= 2 * r)
}

fn lambda_plus(q: HnPair) -> u64 {
    steps(q.c, q.p) - b_plus(q)
}

pub fn ind_formula(seq: &HnSeq) -> Result<Rational> {
    standard(seq)?;
    let q1 = seq.first();
    let mut ind = Rational::one() - Rational::frac((q1.c % q1.p) as i64, q1.p as i64);
    for q in seq.pairs() {
        ind += Rational::one() - Rational::new(q.p % q.c, q.c)?;
    }
    Ok(ind)
}

pub fn r_formula(seq: &HnSeq) -> Result<u64> {
    standard(seq)?;
    let q1 = seq.first();
    Ok(q1.c.div_ceil(q1.p) - 1 + seq.pairs()[1..].iter().map(|q| q.p.div_ceil(q.c)).sum::<u64>())
}

pub fn b0_delta_formula(seq: &HnSeq) -> Result<u64> {
    standard(seq)?;
    Ok(b_minus(seq.first()) + seq.pairs().iter().map(|&q| b_plus(q)).sum::<u64>())
}

pub fn s_formula(seq: &HnSeq) -> Result<u64> {
    standard(seq)?;
    let last = seq.last();
    Ok(if seq.h() > 1 {
        u64::from(last.p % last.c == 1)
    } else {
        u64::from(last.c % last.p == 1)
    })
}

pub fn lambda_formula(seq: &HnSeq) -> Result<u64> {
    standard(seq)?;
    let ordinary = seq.h() == 1 && seq.first() == HnPair::new(3, 2);
    let plus: u64 = seq.pairs().iter().map(|&q| lambda_plus(q)).sum();
    Ok(plus - b_minus(seq.first()) - u64::from(ordinary))
}

pub fn m_of(seq: &HnSeq) -> Result<u64> {
    standard(seq)?;
    Ok(seq.first().c + seq.pairs().iter().map(|q| q.p).sum::<u64>() - 1)
}

pub fn i_of(seq: &HnSeq) -> Result<u64> {
    standard(seq)?;
    seq.pairs()
        .iter()
        .try_fold(0u64, |acc, q| q.c.checked_mul(q.p).and_then(|x| acc.checked_add(x)))
        .ok_or(Error::Overflow("I"))
}

/// Per pair, the minimum at each subtractive Euclid step until both
/// entries equal the gcd, which is then recorded once more.
pub fn mult_sequence(seq: &HnSeq) -> Result<Vec<u64>> {
    standard(seq)?;
    let mut out = Vec::new();
    for q in seq.pairs() {
        let (mut a, mut b) = (q.c, q.p);
        while a != b {
            out.push(a.min(b));
            if a > b {
                a -= b;
            } else {
                b -= a;
            }
        }
        out.push(a);
    }
    Ok(out)
}

/// Number of trailing ones of the multiplicity sequence.
pub fn tau_of(seq: &HnSeq) -> Result<u64> {
    Ok(mult_sequence(seq)?.iter().rev().take_while(|&&m| m == 1).count() as u64)
}

pub fn is_semi_ordinary(seq: &HnSeq) -> Result<bool> {
    standard(seq)?;
    Ok(seq.h() == 1 && seq.first().p == 2)
}

/// Number of maximal (-2)-twigs of the expansion away from the (-1)-curve
/// and the sum of `1/(length+1)` over them; zero for semi-ordinary cusps.
pub fn delta_minus_info(seq: &HnSeq) -> Result<(u64, Rational)> {
    if is_semi_ordinary(seq)? {
        return Ok((0, Rational::zero()));
    }
    let e = expand(seq)?;
    let twigs = minus_two_twigs(&e.graph)?;
    let away: Vec<_> = twigs.iter().filter(|t| !t.meets_l).collect();
    let delta = away.iter().map(|t| Rational::frac(1, t.vertices.len() as i64 + 1)).sum();
    Ok((away.len() as u64, delta))
}

/// Lower bound for `ind` among cusps with the given `lambda`.
pub fn nu(lambda: u64) -> Result<Rational> {
    match lambda {
        0 => Err(Error::Invalid("nu is defined for lambda >= 1".into())),
        1 => Ok(Rational::frac(5, 6)),
        2 => Ok(Rational::frac(11, 10)),
        3 => Ok(Rational::frac(11, 12)),
        l => {
            let l = l as i64;
            Ok(Rational::frac(1, l - 1) + Rational::frac(l - 2, 2 * l - 3))
        }
    }
}

/// Invariants read off the expansion rather than the closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeInvariants {
    pub ind: Rational,
    pub lambda: u64,
    pub b0_delta: u64,
    pub s: u64,
    pub r: u64,
    pub components: u64,
}

pub fn tree_invariants(e: &Expansion) -> Result<TreeInvariants> {
    let g = &e.graph;
    let twigs = minus_two_twigs(g)?;
    let n = g.len() as u64;
    let b0 = twigs.len() as u64;
    Ok(TreeInvariants {
        ind: inductance_forest(g, InductanceMode::Twigs)?,
        lambda: n - b0 - u64::from(n == 3),
        b0_delta: b0,
        s: u64::from(twigs.iter().any(|t| t.meets_l)),
        r: e.outer_blowups,
        components: n,
    })
}

/// Recovers the pair sequence of a resolution tree.
///
/// The maximal twig through the (-1)-vertex `L` splits into `C` (towards
/// the tip) and `P` (towards the branch vertex). The pair is
/// `(d(C), d(P))`; contracting the twig leaves the tree of the earlier
/// pairs, whose sequence is scaled by `d(C)`.
pub fn pairs_from_tree(g: &DualGraph) -> Result<HnSeq> {
    if !g.is_tree() {
        return Err(Error::InvalidGraph("expected a tree".into()));
    }
    let l = g.minus_one()?;
    if (0..g.len()).filter(|&v| g.weight(v) == 1).count() != 1 {
        return Err(Error::NoMinusOne);
    }
    if !g.contracts_to_smooth_point() {
        return Err(Error::NotContractible);
    }
    let pairs = recover(g, l)?;
    HnSeq::new(pairs)
}

fn to_u64(d: BigInt) -> Result<u64> {
    d.to_u64().ok_or(Error::Overflow("discriminant"))
}

fn recover(g: &DualGraph, l: usize) -> Result<Vec<HnPair>> {
    if let Some(order) = g.chain_order() {
        let i = order.iter().position(|&v| v == l).expect("L on chain");
        let left = to_u64(g.induced(&order[..i]).discriminant())?;
        let right = to_u64(g.induced(&order[i + 1..]).discriminant())?;
        return Ok(vec![HnPair::new(left.max(right), left.min(right))]);
    }
    if g.degree(l) > 2 {
        return Err(Error::NonStandard("(-1)-vertex is a branch vertex".into()));
    }
    let mut tip_side = Vec::new();
    let mut branch_side = Vec::new();
    let mut branch = None;
    for start in g.neighbors(l) {
        let mut arm = Vec::new();
        let mut prev = l;
        let mut cur = start;
        let hit = loop {
            if g.degree(cur) >= 3 {
                break Some(cur);
            }
            arm.push(cur);
            match g.neighbors(cur).find(|&u| u != prev) {
                Some(n) => {
                    prev = cur;
                    cur = n;
                }
                None => break None,
            }
        };
        match hit {
            Some(b) if branch.is_none() => {
                branch = Some(b);
                branch_side = arm;
            }
            Some(_) => return Err(Error::NonStandard("(-1)-vertex lies on no twig".into())),
            None => tip_side = arm,
        }
    }
    let b = branch.expect("not a chain, so some arm branches");
    let c = to_u64(g.induced(&tip_side).discriminant())?;
    let p = to_u64(g.induced(&branch_side).discriminant())?;
    let mut allowed = vec![false; g.len()];
    for &v in tip_side.iter().chain(&branch_side).chain([l].iter()) {
        allowed[v] = true;
    }
    let (h, kept) = g.contract_within(&allowed)?;
    if kept.iter().any(|&v| allowed[v]) {
        return Err(Error::NotContractible);
    }
    let nb = kept.iter().position(|&v| v == b).expect("branch vertex survives");
    if h.weight(nb) != 1 {
        return Err(Error::NonStandard("branch vertex does not become a (-1)-vertex".into()));
    }
    let mut out = recover(&h, nb)?.into_iter().map(|q| q.scaled(c)).collect::<Result<Vec<_>>>()?;
    out.push(HnPair::new(c, p));
    Ok(out)
}
