//! File formats, seeded instance generators and the JSON record schema.

pub mod format;
pub mod gen;
pub mod record;

pub use format::{emit_graph, parse_graph, sniff_format, GraphFormat, ParseError};
pub use gen::{gen_forest, gen_gnp, gen_tree, tree_from_sequence, GenError};
pub use record::{graph_digest, ArtifactRecord, GraphRecord, ResultRecord, SCHEMA_VERSION};
