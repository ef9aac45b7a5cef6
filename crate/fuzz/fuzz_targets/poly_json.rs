#![no_main]

use libfuzzer_sys::fuzz_target;
use quantum_skein::laurent::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = LaurentPoly::from_json(s) {
        let again = LaurentPoly::from_json(&p.to_json()).expect("emitted JSON re-parses");
        assert_eq!(again, p);
        let from_text: LaurentPoly = p.to_string().parse().expect("canonical text parses");
        assert_eq!(from_text, p);
    }
});
