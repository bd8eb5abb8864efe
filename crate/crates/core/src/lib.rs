pub mod bruteforce;
pub mod cli;
pub mod cones;
pub mod exactmath;
pub mod genfun;
pub mod hstar;
pub mod lp;
pub mod matroid;
pub mod specialize;
pub mod vertices;

#[cfg(test)]
mod fixtures;
