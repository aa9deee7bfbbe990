pub mod ln;
pub mod orbit;
pub mod perm;
pub mod snf;
