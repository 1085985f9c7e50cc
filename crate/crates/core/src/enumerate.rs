//! Enumeration of tuples of disjoint index sets.

/// Bounds for [`PartSearch::tuples`].
#[derive(Clone, Copy, Debug)]
pub(crate) struct PartSearch {
    pub points: usize,
    pub min_parts: usize,
    pub max_parts: usize,
    pub max_part_size: usize,
    pub max_total: usize,
}

impl PartSearch {
    /// Every unordered tuple of pairwise disjoint nonempty subsets of
    /// `0..points` within the bounds. Parts are sorted internally and ordered
    /// by their least element. Tuples come out in lexicographic order of the
    /// assignment vector (0 for unused, part rank otherwise).
    pub(crate) fn tuples(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut parts: Vec<Vec<usize>> = Vec::new();
        self.recurse(0, 0, &mut parts, &mut out);
        out
    }

    fn recurse(
        &self,
        i: usize,
        total: usize,
        parts: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let missing = self.min_parts.saturating_sub(parts.len());
        if missing > self.points - i || missing > self.max_total - total {
            return;
        }
        if i == self.points {
            if !parts.is_empty() {
                out.push(parts.clone());
            }
            return;
        }
        self.recurse(i + 1, total, parts, out);
        if total == self.max_total {
            return;
        }
        for k in 0..parts.len() {
            if parts[k].len() < self.max_part_size {
                parts[k].push(i);
                self.recurse(i + 1, total + 1, parts, out);
                parts[k].pop();
            }
        }
        if parts.len() < self.max_parts {
            parts.push(vec![i]);
            self.recurse(i + 1, total + 1, parts, out);
            parts.pop();
        }
    }
}
