//! Std companion to `aqcc-core`: configuration, a rayon executor, report
//! rendering, the parameter-table audit and family search.

pub mod config;
pub mod exec;
pub mod report;
pub mod search;
pub mod table1;

/// Process exit status for a failed command: 3 when a weight budget was
/// exceeded, 4 for internal consistency failures, 2 for everything else
/// (parse errors and violated preconditions).
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<aqcc_core::Error>()) {
        Some(e) if e.is_budget() => 3,
        Some(e) if e.is_internal() => 4,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use aqcc_core::Error;

    #[test]
    fn exit_codes_follow_the_error_kind() {
        let budget = anyhow::Error::from(Error::BudgetExceeded { required: 1 << 40, budget: 16 });
        assert_eq!(exit_code(&budget), 3);
        let internal = anyhow::Error::from(Error::Internal("mismatch".into())).context("deriving");
        assert_eq!(exit_code(&internal), 4);
        assert_eq!(exit_code(&anyhow::anyhow!("bad input")), 2);
    }
}
