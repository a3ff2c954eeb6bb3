pub mod bijections;
pub mod classify;
pub mod fishburn;
pub mod genfun;
pub mod qhyper;
pub mod seq;
pub mod series;
pub mod verify;
