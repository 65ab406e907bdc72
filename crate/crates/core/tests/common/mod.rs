#![allow(dead_code)]

pub mod lvl1;
