pub mod map;
pub mod path;
pub mod scenario;

pub use map::{describe, load_map, parse_map, write_map};
pub use path::{load_path, parse_path, write_path, PathFile, PathRecord};
pub use scenario::{parse_scenario, Scenario};
