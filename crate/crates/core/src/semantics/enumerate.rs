//! P-stable model enumeration.
//!
//! A three-valued `M` with true set `T` and non-false set `P` is P-stable iff
//! `T = Γ(P)`, `P = Γ(T)` and `T ⊆ P`, so it suffices to search for the
//! fixpoints `T` of the monotone operator `Γ²` with `T ⊆ Γ(T)`. The search
//! keeps bounds `lo ⊆ T ⊆ hi`, tightens them with `Γ²(lo) ⊆ T ⊆ Γ²(hi)`,
//! and branches on an atom in `hi \ lo`.

use alloc::vec::Vec;

use super::fixpoint::{from_bounds, gamma, reduct_least, Values};
use crate::model::TruthValue;
use crate::rewrite::GroundProgram;

pub(crate) fn search(p: &GroundProgram, wf: &[TruthValue]) -> Vec<Values> {
    let lo: Vec<bool> = wf.iter().map(|v| *v == TruthValue::True).collect();
    let hi: Vec<bool> = wf.iter().map(|v| *v != TruthValue::False).collect();
    let mut out = Vec::new();
    branch(p, lo, hi, &mut out);
    out
}

fn branch(p: &GroundProgram, mut lo: Vec<bool>, mut hi: Vec<bool>, out: &mut Vec<Values>) {
    loop {
        let lo2: Vec<bool> = gamma(p, &gamma(p, &lo)).iter().zip(&lo).map(|(a, b)| *a || *b).collect();
        let hi2: Vec<bool> = gamma(p, &gamma(p, &hi)).iter().zip(&hi).map(|(a, b)| *a && *b).collect();
        if lo2.iter().zip(&hi2).any(|(l, h)| *l && !*h) {
            return;
        }
        if lo2 == lo && hi2 == hi {
            break;
        }
        lo = lo2;
        hi = hi2;
    }
    match (0..lo.len()).find(|&i| hi[i] && !lo[i]) {
        None => {
            let nonfalse = gamma(p, &lo);
            if lo.iter().zip(&nonfalse).all(|(t, nf)| !*t || *nf) && gamma(p, &nonfalse) == lo {
                out.push(from_bounds(&lo, &nonfalse));
            }
        }
        Some(i) => {
            let mut with = lo.clone();
            with[i] = true;
            branch(p, with, hi.clone(), out);
            let mut without = hi;
            without[i] = false;
            branch(p, lo, without, out);
        }
    }
}

/// Every three-valued extension of the defined part of `wf`, filtered by the
/// reduct test.
pub(crate) fn exhaustive(p: &GroundProgram, wf: &[TruthValue]) -> Vec<Values> {
    let open: Vec<usize> = (0..wf.len()).filter(|&i| wf[i] == TruthValue::Undefined).collect();
    let mut candidate: Values = wf.to_vec();
    let mut digits = alloc::vec![0u8; open.len()];
    let mut out = Vec::new();
    loop {
        for (&i, &d) in open.iter().zip(&digits) {
            candidate[i] = [TruthValue::False, TruthValue::Undefined, TruthValue::True][d as usize];
        }
        if reduct_least(p, &candidate) == candidate {
            out.push(candidate.clone());
        }
        let mut carry = true;
        for d in digits.iter_mut() {
            *d += 1;
            if *d < 3 {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            return out;
        }
    }
}
