//! Run the full identity verification sweep, the same report `qf verify`
//! prints.

use std::process::ExitCode;

use qfaulhaber::verify_identities;

fn main() -> ExitCode {
    let report = verify_identities(8, 12);
    print!("{}", report.to_text());
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
