#![no_main]

use altdes::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(pi) = s.parse::<Permutation>() {
        let again: Permutation = pi.to_string().parse().expect("display output parses");
        assert_eq!(again, pi);
        assert_eq!(pi.theta().theta(), pi);
    }
});
