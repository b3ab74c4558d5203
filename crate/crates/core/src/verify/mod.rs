//! Shift operators `p(E)` acting on sequences, and verification suites that
//! check the operator identities and annihilating recurrences exactly over
//! finite parameter grids.

mod lemmas;
mod paths;
mod report;
mod suites;
mod theorems;

use crate::exact::{Coefficient, XPoly};

pub use lemmas::{
    corollary4_left, lemma1_left, lemma2_left, verify_corollary4, verify_corollary4_grid,
    verify_kernel_invariants, verify_lemma1, verify_lemma2,
};
pub use paths::{lattice_path_count, verify_paths};
pub use report::{Failure, ReportBuilder, VerificationReport, FAILURE_CAP};
pub use suites::{default_params, run_suite, GridOverrides, Suite};
pub use theorems::{
    theorem3_operator, verify_schur, verify_shift_law, verify_theorem1, verify_theorem2,
    verify_theorem2_decomposition, verify_theorem3,
};

/// A sequence `n -> value`, defined for every `n >= 0`.
pub trait SequenceAccessor<R> {
    fn at(&self, n: usize) -> R;
}

impl<R, F: Fn(usize) -> R> SequenceAccessor<R> for F {
    fn at(&self, n: usize) -> R {
        self(n)
    }
}

/// `p(E) f(n) = sum_i c_i f(n + i)`.
pub fn apply_shift_poly<R, S>(p: &XPoly<R>, f: &S, n: usize) -> R
where
    R: Coefficient,
    S: SequenceAccessor<R> + ?Sized,
{
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(R::zero(), |acc, (i, c)| acc + c.clone() * f.at(n + i))
}
