//! Exhaustive generation of connected graphs up to isomorphism and the
//! extremal search over them.

mod canon;
mod generate;
mod search;
mod stream;

pub use canon::{brute_force_canonical_form, canonical_form, canonical_labeling, isomorphic};
pub use generate::{
    brute_force_connected_count, enumerate_connected_by_order, enumerate_connected_by_size, MAX_ORDER, MAX_SIZE,
};
pub use search::{extremal_search, pendant_extensions, ExtremalResult, SearchPoint, TIE_TOL};
pub use stream::{manifest_path, read_stream, write_stream, StreamManifest};
