#![no_main]

use libfuzzer_sys::fuzz_target;
use nckit::parking::{parks_by_simulation, parks_by_sorted_rule, parse_preferences};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(prefs) = parse_preferences(text) else {
        return;
    };
    // Whatever parses is positive and nonempty, and the two parking
    // characterizations agree on it.
    assert!(!prefs.is_empty());
    assert!(prefs.iter().all(|&p| p >= 1));
    assert_eq!(
        parks_by_simulation(&prefs).unwrap(),
        parks_by_sorted_rule(&prefs).unwrap()
    );
});
