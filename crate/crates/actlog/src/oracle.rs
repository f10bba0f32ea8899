//! Brute-force reference implementations used to check the engine. They
//! only read the ground rules and share no evaluation code with the core.

use std::collections::BTreeSet;

use actlog_core::{Atom, Database, FactStatus, GroundProgram, Interpretation, TruthValue};

/// Candidate count above which [`pstable_models`] refuses to run.
pub const MAX_ATOMS: usize = 13;

const F: u8 = 0;
const U: u8 = 1;
const T: u8 = 2;

struct Rules {
    /// `(head, positive body, negative body)` as atom indices.
    rules: Vec<(usize, Vec<usize>, Vec<usize>)>,
    n: usize,
}

impl Rules {
    fn of(p: &GroundProgram) -> Self {
        let rules = p
            .rules()
            .iter()
            .map(|r| {
                (
                    r.head.index(),
                    r.pos.iter().map(|a| a.index()).collect(),
                    r.neg.iter().map(|a| a.index()).collect(),
                )
            })
            .collect();
        Self { rules, n: p.len_atoms() }
    }

    /// Least model of the reduct by `m`: each `not b` is replaced by the
    /// constant `T - m[b]`, then rules are applied from all-false until
    /// nothing grows.
    fn reduct_least(&self, m: &[u8]) -> Vec<u8> {
        let mut v = vec![F; self.n];
        loop {
            let mut next = vec![F; self.n];
            for (h, pos, neg) in &self.rules {
                let body = pos.iter().map(|&a| v[a]).chain(neg.iter().map(|&b| T - m[b])).min().unwrap_or(T);
                next[*h] = next[*h].max(body);
            }
            if next == v {
                return v;
            }
            v = next;
        }
    }
}

fn to_interpretation(p: &GroundProgram, v: &[u8]) -> Interpretation {
    Interpretation::from_values(p.atoms().iter().zip(v).map(|(a, &x)| {
        let value = match x {
            F => TruthValue::False,
            U => TruthValue::Undefined,
            _ => TruthValue::True,
        };
        (a.clone(), value)
    }))
}

/// Every three-valued assignment that equals the least model of its own
/// reduct, in enumeration order.
pub fn pstable_models(p: &GroundProgram) -> Vec<Interpretation> {
    let rules = Rules::of(p);
    assert!(rules.n <= MAX_ATOMS, "{} atoms is too many for brute force", rules.n);
    let mut out = Vec::new();
    let mut m = vec![F; rules.n];
    loop {
        if rules.reduct_least(&m) == m {
            out.push(to_interpretation(p, &m));
        }
        // next assignment in base 3
        let mut i = 0;
        loop {
            if i == rules.n {
                return out;
            }
            m[i] += 1;
            if m[i] <= T {
                break;
            }
            m[i] = F;
            i += 1;
        }
    }
}

/// The literals shared by all P-stable models.
pub fn well_founded(p: &GroundProgram) -> Interpretation {
    let models = pstable_models(p);
    let mut out = Interpretation::undefined(p.atoms().iter().cloned());
    for (i, a) in p.atoms().iter().enumerate() {
        let mut values = models.iter().map(|m| m.get(a).expect("model covers the atom base"));
        let first = values.next().expect("a program has at least one P-stable model");
        if values.all(|v| v == first) {
            out.set(p.atoms()[i].clone(), first);
        }
    }
    out
}

/// The update application table, atom by atom: true iff certainly inserted
/// or true and not deleted in any way; unknown iff unknown and not certainly
/// updated, true and possibly deleted, or false and possibly inserted.
pub fn apply_updates(
    certain_insert: &BTreeSet<Atom>,
    certain_delete: &BTreeSet<Atom>,
    undef_insert: &BTreeSet<Atom>,
    undef_delete: &BTreeSet<Atom>,
    d: &Database,
) -> Vec<(Atom, FactStatus)> {
    let mut atoms: BTreeSet<&Atom> = d.facts().map(|(a, _)| a).collect();
    atoms.extend(certain_insert.iter().chain(undef_insert));
    let mut out = Vec::new();
    for p in atoms {
        let was_true = d.status(p) == Some(FactStatus::True);
        let was_unknown = d.status(p) == Some(FactStatus::Unknown);
        let ci = certain_insert.contains(p);
        let cd = certain_delete.contains(p);
        let ud = undef_delete.contains(p);
        let ui = undef_insert.contains(p);
        if ci || (was_true && !cd && !ud) {
            out.push((p.clone(), FactStatus::True));
        } else if (was_unknown && !ci && !cd) || (was_true && ud) || (!was_true && !was_unknown && ui) {
            out.push((p.clone(), FactStatus::Unknown));
        }
    }
    out
}
