//! Constraint-logic (AND/OR graph) machinery: validation, the two gadget
//! reductions, canonical configuration read-back, and flip simulation.
//! Filled in alongside the gadget builders.
