//! Text front end for `syzcalc-core`: a polynomial parser and canonical
//! formatter, problem files, a JSON schema, and the `syzcalc` command.

macro_rules! with_backend {
    ($desc:expr, |$ring:ident| $body:expr) => {
        match $desc {
            syzcalc_core::rings::RingDescriptor::Integers => {
                let $ring = syzcalc_core::rings::Integers;
                $body
            }
            syzcalc_core::rings::RingDescriptor::Rationals => {
                let $ring = syzcalc_core::rings::Rationals;
                $body
            }
            syzcalc_core::rings::RingDescriptor::IntegersMod(n) => {
                let $ring = syzcalc_core::rings::IntegersMod::new(n);
                $body
            }
        }
    };
}

pub mod commands;
pub mod context;
pub mod format;
pub mod parse;
pub mod problem;

use std::ffi::OsString;
use std::io::{Read, Write};

pub use commands::run;
pub use context::{Basis, ModuleOrderKind, PolyContext};
pub use format::format_polynomial;
pub use parse::{parse_polynomial, ParseError, ParseErrorKind};
pub use problem::{read_problem, JsonDocument, ProblemFile, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NONTERMINATION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// Runs the command line against real process streams.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdin = std::io::stdin().lock();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = run(args, &mut stdin as &mut dyn Read, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    code
}

/// Convenience for tests: runs with `input` as stdin and returns
/// `(exit code, stdout, stderr)`.
pub fn run_captured<I, T>(args: I, input: &str) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdin = input.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut stdin as &mut dyn Read, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}
