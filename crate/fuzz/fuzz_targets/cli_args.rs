#![no_main]

use libfuzzer_sys::fuzz_target;

// Arguments are NUL-separated. Only parsing is exercised; running a parsed
// command could enumerate S_n.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let args = std::iter::once("altdes").chain(s.split('\0'));
    let _ = altdes::cli::parse_args(args);
});
