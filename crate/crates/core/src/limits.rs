//! Size guards for the brute-force enumerators.

/// Upper bounds on enumeration inputs. The defaults keep every oracle well
/// under a second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimits {
    /// Ground set size `2n + m` for inset enumeration.
    pub inset_ground: usize,
    /// `n` for compositions with all parts at least `p`.
    pub minpart_n: usize,
    /// `n` for marked compositions.
    pub marked_n: usize,
    /// Number of marked parts.
    pub marked_k: usize,
    /// Total for compositions with exactly `k` large parts, and the length
    /// of enumerated u-sequences.
    pub total: usize,
    /// Number of objects a marked or weak-composition listing may produce.
    /// The part bounds alone admit lists of ~10^9 weak compositions.
    pub marked_items: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            inset_ground: 26,
            minpart_n: 30,
            marked_n: 20,
            marked_k: 6,
            total: 20,
            marked_items: 1 << 20,
        }
    }
}

impl EnumLimits {
    /// Replaces every size bound (not the marked-part count) with `max` and
    /// lifts the item cap.
    pub fn with_override(self, max: usize) -> Self {
        EnumLimits {
            inset_ground: max,
            minpart_n: max,
            marked_n: max,
            total: max,
            marked_items: usize::MAX,
            ..self
        }
    }

    /// No limits at all. Meant for callers that bound their own inputs.
    pub fn unbounded() -> Self {
        EnumLimits {
            inset_ground: usize::MAX,
            minpart_n: usize::MAX,
            marked_n: usize::MAX,
            marked_k: usize::MAX,
            total: usize::MAX,
            marked_items: usize::MAX,
        }
    }
}
