use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact signed integer scalar. Implemented for the primitive signed integers
/// and for `BigInt`; rationals are built on top as `Ratio<T>`.
pub trait Scalar:
    Clone + Debug + Display + Hash + Integer + Signed + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Hash + Integer + Signed + FromPrimitive + Send + Sync + 'static
{
}
