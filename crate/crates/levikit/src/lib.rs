pub mod action;
pub mod cli;
pub mod exactmat;
pub mod hopf;
pub mod cohomology;
pub mod io;
pub mod levi;
pub mod liealg;
pub mod maschke;
pub mod poly;
pub mod samples;
