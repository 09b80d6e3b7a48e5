#![no_main]

use libfuzzer_sys::fuzz_target;
use nckit::series::{format_rational, parse_rationals};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(values) = parse_rationals(text) else {
        return;
    };
    // Reformat and reparse: exact round trip.
    let rendered = values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",");
    let again = parse_rationals(&rendered).expect("reparses");
    assert_eq!(values, again);
});
