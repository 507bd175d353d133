pub mod bounds;
pub mod channel;
pub mod cli;
pub mod codes;
pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod guard;
pub mod transform;
pub mod words;

pub use error::{Error, Result};
pub use guard::Guard;
pub use words::Word;
