"""Round-based simulator of the M-BEHZAD zoned WSN routing protocol."""
