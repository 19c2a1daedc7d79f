pub mod arith;
pub mod combinatorics;
pub mod algebra;
pub mod tower;
pub mod providers;
pub mod murphy;
pub mod seminormal;
pub mod skew;
pub mod oracle;
