//! Finite and continuous Hartley transforms, supersymmetric Hermite
//! eigenfunctions, and Mehta-type analytic eigenvectors of the finite
//! Hartley and Fourier transforms.

pub mod cli;
pub mod error;
pub mod fft;
pub mod hermite;
pub mod matrix;
pub mod mehta;
pub mod quadrature;
pub mod spectral;
pub mod susy;
pub mod transform;

pub use error::{Error, Result};
pub use hermite::{
    gaussian_hermite, gaussian_susy_hermite, hermite_eval, hermite_function, kummer_1f1,
    susy_hermite, susy_inner_product, susy_norm_const, susy_orthogonality_integral,
    susy_wavefunction, NormConstant, SusyIndex,
};
pub use matrix::Matrix;
pub use mehta::{
    fold, fold_entry, mehta_fourier_vector, mehta_hartley_vector, poisson_check, truncation_bound,
    verify_fourier_eigen, verify_hartley_eigen, EigenReport, EigenvectorFamily, FamilyIndex,
    TruncationPolicy,
};
pub use quadrature::{QuadratureGrid, QuadratureRule};
pub use spectral::{
    dht_spectrum, eigenspace_membership, gram_rank, gram_report, jacobi_eigen, residual_table,
    spectral_projector, GramReport, ResidualRow, SymmetricEigenDecomposition,
};
pub use susy::{
    derivative, eigen_residual, even_equation_residual, even_odd_split, gauge_supercharge_apply,
    general_solution, hamiltonian_apply, reflect, second_derivative, supercharge_apply,
    system_residual, GridFunction, OperatorResidual,
};
pub use transform::{
    cas, dft_apply, dht_apply, dht_fast, dht_matrix, dht_naive, hartley_continuous, Method,
    RealSequence, TransformPlan,
};
