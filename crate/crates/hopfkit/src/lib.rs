//! Exact structure-constant computations for finite-dimensional algebras,
//! coalgebras, bialgebras and Hopf algebras over ℚ and 𝔽_p.

pub mod algcore;
pub mod cli;
pub mod cocore;
pub mod error;
pub mod examples;
pub mod exactlin;
pub mod hochschild;
pub mod hopfcore;
pub mod io;
pub mod monocat;
pub mod report;
pub mod smashboso;
pub mod splitpipe;

pub use error::{Error, Result};
