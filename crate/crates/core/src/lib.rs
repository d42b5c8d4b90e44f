//! Word generators built from fragment tables, grilles and wheels.
//!
//! A fragment table read through a sliding grille, and the N-wheel systems
//! it generalises to, both build words by concatenating one fragment per
//! column or wheel. This crate models both mechanisms and the analyses that
//! go with them:
//!
//! * [`wheels`]: wheel systems, bijective index/word enumeration and the
//!   bundled presets (Roman numerals, root/suffix, nine wheels, 3 x 24).
//! * [`grille`]: tables, grilles, sliding, and the grille/column-shift
//!   equivalence.
//! * [`distributions`]: fragment- and word-length distributions by
//!   convolution, binomial references and deviation metrics.
//! * [`grammar`]: a configurable crust/mantle/core word grammar.
//! * [`corpus`]: transliteration loading and corpus statistics.
//! * [`network`]: edit-distance-1 word networks.
//! * [`synthesis`]: tables and wheel systems built from a vocabulary, and a
//!   plaintext-to-word alphabet codec.
//! * [`cli`]: the command-line front end used by the `grillewheel` binary.
//!
//! ```
//! use grillewheel::wheels::roman;
//!
//! let numerals = roman();
//! assert_eq!(numerals.word_at(1967).unwrap(), "MDCCCCLXVII");
//! assert_eq!(numerals.index_of("XIIII").unwrap(), 14);
//! ```

pub mod cli;
pub mod corpus;
pub mod distributions;
mod error;
pub mod glyph;
pub mod grammar;
pub mod grille;
pub mod network;
pub mod synthesis;
pub mod wheels;

pub use error::{Error, Result};
pub use glyph::{Alphabet, Fragment};
