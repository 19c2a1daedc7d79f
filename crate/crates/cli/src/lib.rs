pub mod job;
pub mod run;

pub use job::{Command, Format, JobError, JobSpec, TowerName};
pub use run::{run, Outcome, Report};
