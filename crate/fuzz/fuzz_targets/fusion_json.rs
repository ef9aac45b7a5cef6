#![no_main]

use libfuzzer_sys::fuzz_target;
use quantum_skein::fusion::{qdims, FusionRingData};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = FusionRingData::from_json(s) {
        let again = FusionRingData::from_json(&r.to_json()).expect("emitted ring re-validates");
        assert_eq!(again, r);
        if let Ok(d) = qdims(&r) {
            assert!(d.d.iter().all(|x| *x > 0.0));
        }
    }
});
