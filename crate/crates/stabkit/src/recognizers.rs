//! Certifying recognizers.
