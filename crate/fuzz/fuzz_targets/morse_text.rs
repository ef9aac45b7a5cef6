#![no_main]

use libfuzzer_sys::fuzz_target;
use quantum_skein::diagram::MorseDiagram;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = s.parse::<MorseDiagram>() {
        let again: MorseDiagram = d.to_string().parse().expect("printed diagram re-parses");
        assert_eq!(again, d);
        // component tracing must not panic on any valid closed word
        if d.is_closed() {
            let _ = d.component_count();
            let _ = d.oriented_writhe();
        }
    }
});
