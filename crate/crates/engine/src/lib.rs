//! Exact verification engine for the elimination arguments in the
//! classification of biconservative hypersurfaces with constant scalar
//! curvature in 4- and 5-dimensional space forms.

pub mod certificate;
pub mod diff;
pub mod identities;
pub mod lemma22;
pub mod poly;
pub mod rotational;
pub mod theorems;
