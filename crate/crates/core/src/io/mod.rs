//! Serialization and rendering.

pub mod ascii;
pub mod json;
pub mod svg;

pub use ascii::render_ascii;
pub use json::{parse, parse_document, parse_documents, render_json, render_report, Document, Payload};
pub use svg::render_svg;
