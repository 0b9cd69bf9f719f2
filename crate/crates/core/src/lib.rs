pub mod bei;
pub mod error;
pub mod fpurity;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod knutson;
pub mod poly;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Tool name and version embedded in reports.
pub fn tool_id() -> String {
    format!("binedge {VERSION}")
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/knutson.md")]
    mod knutson {}
    #[doc = include_str!("../../../book/src/fpurity.md")]
    mod fpurity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
