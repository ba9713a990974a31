//! CLI support library (JSON formats, DOT export).
