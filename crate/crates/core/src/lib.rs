pub mod adjoint;
pub mod equations;
pub mod error;
pub mod json;
pub mod poly;
pub mod ring;
pub mod root_system;
pub mod signs;
pub mod squares;
pub mod verify;

pub use error::{Error, Result};
