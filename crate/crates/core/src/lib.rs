//! Riesz sequences of exponentials `{χ_S e^{2πikt}}_{k∈Λ}` on the circle.
//!
//! * [`circle`]: exact arc unions, Cantor schemes, translate covers.
//! * [`sequence`]: index-set generators, densities, syndeticity, block codes.
//! * [`spectral`]: Gram matrices and their spectra on finite windows.
//! * [`criteria`]: necessary and sufficient Riesz tests, greedy selection.
//! * [`witness`]: numerical non-Riesz witness for Bohr sets.
//! * [`descriptor`]: text descriptors shared with the command line.

pub mod circle;
pub mod criteria;
pub mod descriptor;
pub mod error;
pub mod sequence;
pub mod spectral;
pub mod witness;

pub use circle::{cantor_stage, Arc, ArcUnion, CantorScheme, CantorStage, Rational};
pub use criteria::{CriterionReport, Verdict};
pub use descriptor::{parse_window, SeqDescriptor, SetDescriptor};
pub use error::{Error, Result};
pub use sequence::{generate, Generator, IndexSet, Window};
pub use spectral::{gram_matrix, gram_spectrum, HermitianMatrix, SpectrumReport};
pub use witness::{BohrWitnessConfig, WitnessResult};
