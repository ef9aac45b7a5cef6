#![no_main]

use libfuzzer_sys::fuzz_target;
use quantum_skein::laurent::LaurentPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = s.parse::<LaurentPoly>() {
        let text = p.to_string();
        let again: LaurentPoly = text.parse().expect("canonical text re-parses");
        assert_eq!(again, p);
        assert_eq!(again.to_string(), text);
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }
});
