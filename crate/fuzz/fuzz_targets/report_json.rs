#![no_main]

use altdes::cli::report::parse_report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = parse_report(s) {
        let _ = report.to_text();
        let _ = report.to_csv();
        let again = parse_report(&report.to_json()).expect("serialized reports parse");
        assert_eq!(again.results.len(), report.results.len());
    }
});
