#![no_main]

use libfuzzer_sys::fuzz_target;
use quantum_skein::diagram::{parse_diagram_json, DiagramJson};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = parse_diagram_json(s) {
        let out = serde_json::to_string(&DiagramJson::from(&d)).unwrap();
        let again = parse_diagram_json(&out).expect("emitted JSON re-parses");
        assert_eq!(again, d);
    }
});
