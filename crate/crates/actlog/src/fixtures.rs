//! The bundled fixture corpus. Each fixture is a program, a database and an
//! update set; plain Datalog fixtures have an empty database and update set.

use actlog_core::{
    ground, rewrite_bm, rewrite_st, Database, GroundProgram, Program, StandardProgram, UpdateProgram,
};

use crate::format::{self, FormatError};

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub program: &'static str,
    pub db: &'static str,
    pub delta: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            program: include_str!(concat!("../fixtures/", $name, "/program.adl")),
            db: include_str!(concat!("../fixtures/", $name, "/db.adb")),
            delta: include_str!(concat!("../fixtures/", $name, "/delta.adu")),
        }
    };
}

pub const ALL: &[Fixture] = &[
    fixture!("confirm_manager"),
    fixture!("emp_or_mgr"),
    fixture!("four_models"),
    fixture!("manager_livelock"),
    fixture!("negation_chain"),
    fixture!("partial_models"),
    fixture!("partial_models_no_fact"),
    fixture!("promotion"),
    fixture!("unique_total"),
    fixture!("worker_choice"),
    fixture!("worker_choice_derived"),
];

/// Expected output of `rewrite` for the fixtures that have one, as
/// `(fixture, mode, text)`.
pub const GOLDEN_REWRITES: &[(&str, &str, &str)] = &[
    ("manager_livelock", "st", include_str!("../fixtures/manager_livelock/rewrite.st.adl")),
    ("confirm_manager", "bm", include_str!("../fixtures/confirm_manager/rewrite.bm.adl")),
];

pub fn get(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}

/// Looks a fixture up by name; panics on a typo.
pub fn named(name: &str) -> &'static Fixture {
    get(name).unwrap_or_else(|| panic!("no fixture named {name}"))
}

impl Fixture {
    pub fn program(&self) -> Result<Program, FormatError> {
        format::parse_program(self.program)
    }

    pub fn update_program(&self) -> Result<UpdateProgram, FormatError> {
        format::parse_update_program(self.program, self.delta)
    }

    pub fn database(&self) -> Result<Database, FormatError> {
        format::parse_database(self.db)
    }

    /// The program read as plain Datalog and grounded.
    pub fn ground_plain(&self) -> GroundProgram {
        let program = self.program().expect("fixture program parses");
        ground(&StandardProgram::from_program(&program)).expect("fixture program grounds")
    }

    pub fn rewrite(&self, mode: &str) -> StandardProgram {
        let up = self.update_program().expect("fixture parses");
        match mode {
            "bm" => rewrite_bm(&up),
            _ => rewrite_st(&up),
        }
    }
}
