//! The `hindman-lab` command driver: argument parsing, dispatch and JSON
//! reports.

mod command;
mod execute;
mod report;

pub use command::{parse_command, ColoringSpec, Command, GroundSpec, StrategyArg, Verb};
pub use execute::execute;
pub use report::{Provenance, Report, Status};

/// Parses `argv` (without the program name), executes it and returns the
/// text to print together with the process exit code.
pub fn run<I, S>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let report = match command::try_parse(argv) {
        Ok(cmd) => execute(&cmd),
        Err(command::ParseFailure::Display(text)) => return (text, 0),
        Err(command::ParseFailure::Invalid(e)) => Report::from_error(&e, Provenance::default()),
    };
    (report.to_json(), report.status.exit_code())
}
