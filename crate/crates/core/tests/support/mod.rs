#![allow(dead_code)]

pub mod dijkstra;
pub mod instances;
pub mod rs_oracle;
