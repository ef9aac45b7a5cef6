#![no_main]

use libfuzzer_sys::fuzz_target;
use quantum_skein::diagram::BraidWord;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(b) = s.parse::<BraidWord>() {
        let text = b.to_string();
        let again: BraidWord = text.parse().expect("printed braid re-parses");
        assert_eq!(again, b);
        let d = b.closure();
        assert!(d.is_closed());
        assert_eq!(d.local_writhe(), b.writhe());
    }
});
