#![no_main]

use libfuzzer_sys::fuzz_target;
use nckit::assoc::trees::{
    parse_bracketing, tree_to_bracketing, tree_to_triangulation, triangulation_to_tree,
};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(tree) = parse_bracketing(text) else {
        return;
    };
    // Round trip through the canonical rendering.
    let rendered = tree_to_bracketing(&tree);
    assert_eq!(parse_bracketing(&rendered).expect("reparses"), tree);
    // And through the triangulation bijection.
    let n = tree.internal_nodes();
    if n >= 1 {
        let diagonals = tree_to_triangulation(&tree);
        assert_eq!(triangulation_to_tree(n, &diagonals).expect("rebuilds"), tree);
    }
});
