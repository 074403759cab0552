/// All noncrossing perfect matchings of `2l` points on a circle, each pair
/// written `[min, max]` and pairs sorted.
pub fn enumerate_skeletons(l: usize) -> Vec<Vec<[usize; 2]>> {
    let mut out: Vec<Vec<[usize; 2]>> = on_interval(0, 2 * l)
        .into_iter()
        .map(|mut m| {
            m.sort_unstable();
            m
        })
        .collect();
    out.sort();
    out
}

/// Matchings of the positions `lo..hi`; the first point pairs with some
/// point at odd distance, splitting the rest into inside and outside.
fn on_interval(lo: usize, hi: usize) -> Vec<Vec<[usize; 2]>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for partner in (lo + 1..hi).step_by(2) {
        let inside = on_interval(lo + 1, partner);
        let outside = on_interval(partner + 1, hi);
        for a in &inside {
            for b in &outside {
                let mut m = Vec::with_capacity(1 + a.len() + b.len());
                m.push([lo, partner]);
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                out.push(m);
            }
        }
    }
    out
}
