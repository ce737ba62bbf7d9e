//! Partitions, cycle census and semi-magic squares. All counting is exact.

pub mod census;
pub mod partitions;
pub mod semimagic;

pub use census::{cycle_census, perm_label, CycleClass};
pub use partitions::{
    factorial, partition_count_series, partitions, rank4_class_count_series, Partition,
};
pub use semimagic::{
    canonicalize, class_count, enumerate_classes, enumerate_classes_with, enumerate_semimagic,
    enumerate_semimagic_with, hn_formula, representative, tuple_to_square, SemiMagicSquare,
    SquareClass,
};
