//! Decide whether the Gromov boundary of a Coxeter group is the Sierpinski
//! carpet, from the Coxeter matrix alone.

pub mod classify;
pub mod cli;
pub mod complex;
pub mod cosine;
pub mod crosscheck;
pub mod coxeter;
pub mod decider;
pub mod hyperbolicity;
pub mod metric;
pub mod nerve;
pub mod planarity;
pub mod separation;
pub mod topology;
