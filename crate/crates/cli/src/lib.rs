//! Library side of the `conormal` command: expression parsing, edge-list
//! files, report formatting and the verification grids.

pub mod edgelist;
pub mod expr;
pub mod grid;
pub mod report;
