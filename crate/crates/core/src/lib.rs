//! Declarative semantics for active (event-condition-action) database rules.
//!
//! An update program is a pair of an input update set and a set of active and
//! deductive rules. The crate evaluates such programs declaratively:
//!
//! 1. [`rewrite`] turns the update program into a plain Datalog program with
//!    negation, either with the guarded rewriting ([`rewrite::rewrite_st`]) or
//!    the complementary-literal rewriting ([`rewrite::rewrite_bm`]), embeds the
//!    database and grounds the result.
//! 2. [`semantics`] computes three-valued models of the ground program: the
//!    well-founded model, every partial stable model, and the classification
//!    into total, maximal, least-undefined and deterministic models.
//! 3. [`update`] extracts the insertions and deletions a model carries and
//!    applies them to a three-valued database under one of nine selectable
//!    semantics.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, rendering to files
//! and the command line live in the companion `actlog` crate.
#![no_std]

extern crate alloc;

pub mod model;
pub mod names;
pub mod rewrite;
pub mod semantics;
pub mod update;

pub use model::{
    eval_literal, info_leq, is_model, rule_satisfied, Atom, Builtin, ConstantMap, Database,
    DatabaseError, DeltaSet, FactStatus, Head, Interpretation, Literal, ModelError, Polarity,
    Program, Rename, Rule, Span, Term, TruthValue, UpdateAtom, UpdateProgram, ValidationError,
    Violation,
};
pub use rewrite::{
    embed_database, ground, ground_with, rewrite_bm, rewrite_st, AtomId, GroundError,
    GroundProgram, GroundRule, GroundingMode, StandardProgram,
};
pub use semantics::{
    classify, enumerate_pstable, enumerate_pstable_exhaustive, gl_reduct, greatest_unfounded,
    immediate_consequence, is_pstable, least_3v_model, max_deterministic, models,
    well_founded, wf_step, EnumerationConfig, ModelFamily, ModelFlags, ModelRecord,
    ReductProgram, SemanticsError,
};
pub use update::{
    apply_delta, apply_updates, compare, extract_updates, is_total_transformation, run,
    Comparison, ComparisonRow, EngineError, FamilyStats, RunConfig, RunReport, RunStatus,
    SelectionPolicy, SemanticsId, UpdateOutcome,
};
