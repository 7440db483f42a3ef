use std::io::Write;
use std::process::ExitCode;

use toroid::{dispatch, Status};

fn main() -> ExitCode {
    let result = dispatch(std::env::args_os());
    let out = result.output();
    let written = match result.status {
        Status::Ok | Status::PropertyFailure => std::io::stdout().write_all(out.as_bytes()),
        Status::Usage | Status::BudgetExceeded => std::io::stderr().write_all(out.as_bytes()),
    };
    if written.is_err() {
        return ExitCode::from(Status::Usage.code());
    }
    ExitCode::from(result.status.code())
}
