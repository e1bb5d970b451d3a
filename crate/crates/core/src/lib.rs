pub mod error;
pub mod chern;
pub mod cli;
pub mod exact;
pub mod fanotab;
pub mod liecontact;
pub mod mu;
pub mod schubert;
pub mod wps;

pub use error::{Category, Error, Result};
