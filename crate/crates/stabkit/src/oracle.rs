//! Small-graph ground truth.
