//! Reference crystals up to rank 4 for the tripartition charge (0,0,1) at
//! e = 2, one per node order. Vertices are grouped by rank. The edge lists
//! form a spanning tree: one incoming edge per non-empty vertex.

pub const UGLOV_LAYERS: [&[&str]; 5] = [
    &["(∅,∅,∅)"],
    &["(1,∅,∅)", "(∅,∅,1)"],
    &["(1,1,∅)", "(2,∅,∅)", "(∅,∅,2)"],
    &["(1,∅,2)", "(2,1,∅)", "(2,∅,1)", "(3,∅,∅)", "(∅,∅,3)"],
    &[
        "(1,1,2)",
        "(1,∅,3)",
        "(2,2,∅)",
        "(2.1,∅,1)",
        "(3,1,∅)",
        "(3,∅,1)",
        "(4,∅,∅)",
        "(∅,∅,4)",
    ],
];

/// (source, label, target)
pub const UGLOV_EDGES: [(&str, i64, &str); 18] = [
    ("(∅,∅,∅)", 0, "(1,∅,∅)"),
    ("(∅,∅,∅)", 1, "(∅,∅,1)"),
    ("(1,∅,∅)", 1, "(2,∅,∅)"),
    ("(1,∅,∅)", 0, "(1,1,∅)"),
    ("(∅,∅,1)", 0, "(∅,∅,2)"),
    ("(2,∅,∅)", 0, "(3,∅,∅)"),
    ("(2,∅,∅)", 1, "(2,∅,1)"),
    ("(1,1,∅)", 1, "(2,1,∅)"),
    ("(∅,∅,2)", 0, "(1,∅,2)"),
    ("(∅,∅,2)", 1, "(∅,∅,3)"),
    ("(3,∅,∅)", 1, "(4,∅,∅)"),
    ("(3,∅,∅)", 0, "(3,1,∅)"),
    ("(2,∅,1)", 0, "(3,∅,1)"),
    ("(2,∅,1)", 1, "(2.1,∅,1)"),
    ("(2,1,∅)", 1, "(2,2,∅)"),
    ("(1,∅,2)", 0, "(1,1,2)"),
    ("(1,∅,2)", 1, "(1,∅,3)"),
    ("(∅,∅,3)", 0, "(∅,∅,4)"),
];

pub const KLESHCHEV_LAYERS: [&[&str]; 5] = [
    &["(∅,∅,∅)"],
    &["(∅,1,∅)", "(∅,∅,1)"],
    &["(1,1,∅)", "(∅,1,1)", "(∅,∅,2)"],
    &["(1,1,1)", "(∅,1,2)", "(∅,2,1)", "(∅,∅,2.1)", "(∅,∅,3)"],
    &[
        "(1,1,2)",
        "(1,2,1)",
        "(∅,1,2.1)",
        "(∅,1,3)",
        "(∅,2,2)",
        "(∅,2.1,1)",
        "(∅,∅,3.1)",
        "(∅,∅,4)",
    ],
];

/// (source, target); labels are the residues of the added cells.
pub const KLESHCHEV_EDGES: [(&str, &str); 18] = [
    ("(∅,∅,∅)", "(∅,1,∅)"),
    ("(∅,∅,∅)", "(∅,∅,1)"),
    ("(∅,1,∅)", "(∅,1,1)"),
    ("(∅,1,∅)", "(1,1,∅)"),
    ("(∅,∅,1)", "(∅,∅,2)"),
    ("(∅,1,1)", "(∅,1,2)"),
    ("(∅,1,1)", "(∅,2,1)"),
    ("(1,1,∅)", "(1,1,1)"),
    ("(∅,∅,2)", "(∅,∅,2.1)"),
    ("(∅,∅,2)", "(∅,∅,3)"),
    ("(∅,1,2)", "(∅,1,3)"),
    ("(∅,1,2)", "(1,1,2)"),
    ("(∅,2,1)", "(∅,2,2)"),
    ("(∅,2,1)", "(∅,2.1,1)"),
    ("(1,1,1)", "(1,2,1)"),
    ("(∅,∅,2.1)", "(∅,1,2.1)"),
    ("(∅,∅,2.1)", "(∅,∅,3.1)"),
    ("(∅,∅,3)", "(∅,∅,4)"),
];
