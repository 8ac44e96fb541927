#![no_main]

use altdes::cli::report::{parse_poly_value, PolyValue};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = parse_poly_value(s) {
        let bi = v.to_bipoly();
        let back =
            parse_poly_value(&serde_json::to_string(&PolyValue::from(&bi)).unwrap()).unwrap();
        assert_eq!(back.to_bipoly(), bi);
        if let Some(p) = v.to_int_poly() {
            assert_eq!(PolyValue::from(&p).to_int_poly(), Some(p));
        }
    }
});
