//! Command-line front end for `laplab`: [`parse_args`] validates arguments
//! into a [`CommandPlan`] and [`execute`] runs it.

mod plan;
mod run;

pub use plan::{
    parse_args, CommandName, CommandPlan, ExactMode, GraphSource, OutputFormat, Task, UsageError, Verification,
};
pub use run::{execute, Outcome, Status};
