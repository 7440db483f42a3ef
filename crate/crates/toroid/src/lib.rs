//! File formats, text reports and the command-line front end for
//! [`toroid_core`].

pub mod cli;
pub mod lists;
pub mod report;
pub mod rot;

pub use cli::{dispatch, CommandResult, Status};
pub use lists::{parse_list_assignment, serialize_list_assignment};
pub use report::Report;
pub use rot::{parse_rotation_graph, serialize_rotation_graph, ParseError};
