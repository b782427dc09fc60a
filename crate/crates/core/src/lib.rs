pub mod error;
pub mod groebner;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod ring;
pub mod finite;
pub mod fpmod;
pub mod glue;
pub mod singularity;
pub mod covers;
pub mod degeneration;
pub mod cli;
