//! Reserved predicate names introduced by the rewritings.
//!
//! Every generated predicate starts with `@`, which user programs may not use.
//! For a base predicate `p`:
//!
//! | name        | role                                              |
//! |-------------|---------------------------------------------------|
//! | `@plus_p`   | renamed insertion `+p`                            |
//! | `@minus_p`  | renamed deletion `-p`                             |
//! | `@ins_p`    | insertion requested by the input update set       |
//! | `@del_p`    | deletion requested by the input update set        |
//! | `@insb_p`   | bridge: `+p` derived or requested                 |
//! | `@delb_p`   | bridge: `-p` derived or requested                 |
//! | `@ck_p`     | guard: both `+p` and `-p` hold                    |

use alloc::format;
use alloc::string::String;

use crate::model::Polarity;

pub const RESERVED_PREFIX: char = '@';

const PLUS: &str = "@plus_";
const MINUS: &str = "@minus_";
const INS: &str = "@ins_";
const DEL: &str = "@del_";
const INSB: &str = "@insb_";
const DELB: &str = "@delb_";
const CK: &str = "@ck_";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PredicateRole {
    /// A predicate written by the user.
    User,
    /// `@plus_p` / `@minus_p`.
    RenamedUpdate(Polarity),
    /// `@ins_p` / `@del_p`.
    DeltaFact(Polarity),
    /// `@insb_p` / `@delb_p`.
    Bridge(Polarity),
    /// `@ck_p`.
    Guard,
}

pub fn is_reserved(predicate: &str) -> bool {
    predicate.starts_with(RESERVED_PREFIX)
}

pub fn renamed_update(polarity: Polarity, predicate: &str) -> String {
    match polarity {
        Polarity::Insert => format!("{PLUS}{predicate}"),
        Polarity::Delete => format!("{MINUS}{predicate}"),
    }
}

pub fn delta_fact(polarity: Polarity, predicate: &str) -> String {
    match polarity {
        Polarity::Insert => format!("{INS}{predicate}"),
        Polarity::Delete => format!("{DEL}{predicate}"),
    }
}

pub fn bridge(polarity: Polarity, predicate: &str) -> String {
    match polarity {
        Polarity::Insert => format!("{INSB}{predicate}"),
        Polarity::Delete => format!("{DELB}{predicate}"),
    }
}

pub fn guard(predicate: &str) -> String {
    format!("{CK}{predicate}")
}

/// Splits a predicate name into its role and the base predicate it refers to.
pub fn classify(predicate: &str) -> (PredicateRole, &str) {
    let table: [(&str, PredicateRole); 7] = [
        (PLUS, PredicateRole::RenamedUpdate(Polarity::Insert)),
        (MINUS, PredicateRole::RenamedUpdate(Polarity::Delete)),
        (INSB, PredicateRole::Bridge(Polarity::Insert)),
        (DELB, PredicateRole::Bridge(Polarity::Delete)),
        (INS, PredicateRole::DeltaFact(Polarity::Insert)),
        (DEL, PredicateRole::DeltaFact(Polarity::Delete)),
        (CK, PredicateRole::Guard),
    ];
    for (prefix, role) in table {
        if let Some(base) = predicate.strip_prefix(prefix) {
            return (role, base);
        }
    }
    (PredicateRole::User, predicate)
}

/// The polarity and base predicate of a renamed update predicate.
pub fn as_renamed_update(predicate: &str) -> Option<(Polarity, &str)> {
    match classify(predicate) {
        (PredicateRole::RenamedUpdate(p), base) => Some((p, base)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_inverts_constructors() {
        for pol in [Polarity::Insert, Polarity::Delete] {
            assert_eq!(classify(&renamed_update(pol, "mgr")), (PredicateRole::RenamedUpdate(pol), "mgr"));
            assert_eq!(classify(&delta_fact(pol, "mgr")), (PredicateRole::DeltaFact(pol), "mgr"));
            assert_eq!(classify(&bridge(pol, "mgr")), (PredicateRole::Bridge(pol), "mgr"));
        }
        assert_eq!(classify(&guard("mgr")), (PredicateRole::Guard, "mgr"));
        assert_eq!(classify("mgr"), (PredicateRole::User, "mgr"));
        // base names that look like prefixes stay intact
        assert_eq!(classify("@ins_b_x"), (PredicateRole::DeltaFact(Polarity::Insert), "b_x"));
    }
}
