//! Dense fixpoint operators over atom ids.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::{Interpretation, TruthValue};
use crate::rewrite::{AtomId, GroundProgram};

pub(crate) type Values = Vec<TruthValue>;

/// Universe atoms missing from `i` read as undefined.
pub(crate) fn values_of(p: &GroundProgram, i: &Interpretation) -> Values {
    p.atoms().iter().map(|a| i.get(a).unwrap_or(TruthValue::Undefined)).collect()
}

pub(crate) fn interpretation_of(p: &GroundProgram, v: &[TruthValue]) -> Interpretation {
    Interpretation::from_values(p.atoms().iter().cloned().zip(v.iter().copied()))
}

/// Least model of the definite program made of the usable rules.
fn least_model(p: &GroundProgram, usable: &[bool]) -> Vec<bool> {
    let mut truth = vec![false; p.len_atoms()];
    let mut missing: Vec<usize> = p.rules().iter().map(|r| r.pos.len()).collect();
    let mut queue: Vec<AtomId> = Vec::new();
    for (i, r) in p.rules().iter().enumerate() {
        if usable[i] && missing[i] == 0 && !truth[r.head.index()] {
            truth[r.head.index()] = true;
            queue.push(r.head);
        }
    }
    while let Some(a) = queue.pop() {
        for &ri in p.positive_occurrences(a) {
            missing[ri] -= 1;
            let head = p.rules()[ri].head;
            if missing[ri] == 0 && usable[ri] && !truth[head.index()] {
                truth[head.index()] = true;
                queue.push(head);
            }
        }
    }
    truth
}

/// `T_P(I)`: heads of rules whose body is true in `v`.
pub(crate) fn consequences(p: &GroundProgram, v: &[TruthValue]) -> Vec<bool> {
    let mut out = vec![false; p.len_atoms()];
    for r in p.rules() {
        let body_true = r.pos.iter().all(|a| v[a.index()] == TruthValue::True)
            && r.neg.iter().all(|a| v[a.index()] == TruthValue::False);
        if body_true {
            out[r.head.index()] = true;
        }
    }
    out
}

/// Greatest unfounded set w.r.t. `v`: the complement of the atoms supported
/// through rules with no body literal false in `v`.
pub(crate) fn unfounded(p: &GroundProgram, v: &[TruthValue]) -> Vec<bool> {
    let usable: Vec<bool> = p
        .rules()
        .iter()
        .map(|r| {
            r.pos.iter().all(|a| v[a.index()] != TruthValue::False)
                && r.neg.iter().all(|a| v[a.index()] != TruthValue::True)
        })
        .collect();
    least_model(p, &usable).into_iter().map(|s| !s).collect()
}

/// Gelfond-Lifschitz operator: least model of the reduct w.r.t. the set `s`.
/// Antimonotone in `s`.
pub(crate) fn gamma(p: &GroundProgram, s: &[bool]) -> Vec<bool> {
    let usable: Vec<bool> = p.rules().iter().map(|r| r.neg.iter().all(|a| !s[a.index()])).collect();
    least_model(p, &usable)
}

/// `T_P(I) ∪ ¬U_P(I)`; `Err` carries an atom that is in both.
pub(crate) fn step(p: &GroundProgram, v: &[TruthValue]) -> Result<Values, AtomId> {
    let t = consequences(p, v);
    let u = unfounded(p, v);
    let mut out = vec![TruthValue::Undefined; v.len()];
    for i in 0..v.len() {
        match (t[i], u[i]) {
            (true, true) => return Err(AtomId(i as u32)),
            (true, false) => out[i] = TruthValue::True,
            (false, true) => out[i] = TruthValue::False,
            (false, false) => {}
        }
    }
    Ok(out)
}

pub(crate) fn well_founded(p: &GroundProgram) -> Values {
    let mut v = vec![TruthValue::Undefined; p.len_atoms()];
    loop {
        let next = step(p, &v).expect("iterates of W from the empty set are consistent");
        if next == v {
            return v;
        }
        v = next;
    }
}

/// Well-founded model as the least fixpoint of `Γ²`.
pub(crate) fn alternating(p: &GroundProgram) -> Values {
    let mut t = vec![false; p.len_atoms()];
    loop {
        let next = gamma(p, &gamma(p, &t));
        if next == t {
            break;
        }
        t = next;
    }
    from_bounds(&t, &gamma(p, &t))
}

/// True on `t`, undefined on `nonfalse \ t`, false elsewhere.
pub(crate) fn from_bounds(t: &[bool], nonfalse: &[bool]) -> Values {
    t.iter()
        .zip(nonfalse)
        .map(|(&t, &nf)| match (t, nf) {
            (true, _) => TruthValue::True,
            (false, true) => TruthValue::Undefined,
            (false, false) => TruthValue::False,
        })
        .collect()
}

/// Least three-valued model of the reduct of `p` w.r.t. `m`.
pub(crate) fn reduct_least(p: &GroundProgram, m: &[TruthValue]) -> Values {
    let constants: Vec<TruthValue> = p
        .rules()
        .iter()
        .map(|r| r.neg.iter().map(|a| !m[a.index()]).min().unwrap_or(TruthValue::True))
        .collect();
    let mut v = vec![TruthValue::False; p.len_atoms()];
    loop {
        let mut changed = false;
        for (r, &c) in p.rules().iter().zip(&constants) {
            let body = r.pos.iter().map(|a| v[a.index()]).fold(c, TruthValue::min);
            if body > v[r.head.index()] {
                v[r.head.index()] = body;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}
