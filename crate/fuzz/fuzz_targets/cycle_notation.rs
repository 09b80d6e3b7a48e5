#![no_main]

use libfuzzer_sys::fuzz_target;
use nckit::Permutation;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = (first as usize % 16) + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let Ok(p) = Permutation::from_cycle_string(text, n) else {
        return;
    };
    // Parsed permutations print back to something that reparses to the same
    // permutation, and group identities hold.
    let again = Permutation::from_cycle_string(&p.to_string(), n).expect("reparses");
    assert_eq!(p, again);
    assert_eq!(p.then(&p.inverse()).unwrap(), Permutation::identity(n));
    assert!(p.reflection_length() < n);
});
