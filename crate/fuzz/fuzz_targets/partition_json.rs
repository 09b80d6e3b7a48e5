#![no_main]

use libfuzzer_sys::fuzz_target;
use nckit::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = serde_json::from_str::<Partition>(text) else {
        return;
    };
    // Anything that deserializes must survive a serialize/deserialize round
    // trip unchanged and satisfy the basic shape invariants.
    assert!((1..=64).contains(&p.n()));
    assert!(p.num_blocks() >= 1 && p.num_blocks() <= p.n());
    let rendered = serde_json::to_string(&p).expect("serializes");
    let again: Partition = serde_json::from_str(&rendered).expect("reparses");
    assert_eq!(p, again);
});
