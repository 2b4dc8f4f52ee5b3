//! Enumeration caps shared by act, partition, and probe based checks.
//! Exceeding a budget is always a reported error, never a silent skip.

/// Default probe budget for law sampling and exhaustive finite checks.
pub const DEFAULT_PROBE_BUDGET: u64 = 10_000;
/// Default cap on `|C|^|S|` act enumerations.
pub const DEFAULT_ACT_BUDGET: u64 = 4096;
/// Default cap on set-partition enumeration: the number of partitions of a
/// 6-element set.
pub const DEFAULT_PARTITION_BUDGET: u64 = 203;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub acts: u64,
    pub partitions: u64,
    pub probes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            acts: DEFAULT_ACT_BUDGET,
            partitions: DEFAULT_PARTITION_BUDGET,
            probes: DEFAULT_PROBE_BUDGET,
        }
    }
}
