/// Riemann–Hurwitz feasibility of a degree `deg` sphere cover whose critical
/// points all have local degree 2 and whose critical values number at most
/// `num_values`.
///
/// There are `2·deg − 2` critical points and each fibre holds at most
/// `⌊deg/2⌋` of them. In degree 3 with at most three values the four critical
/// points would map bijectively onto at most three values, which is absurd.
pub fn rh_branched_cover_feasible(deg: u64, num_values: u64) -> bool {
    if deg < 2 || num_values < 1 {
        return false;
    }
    if deg == 3 && num_values <= 3 {
        return false;
    }
    2 * deg - 2 <= num_values * (deg / 2)
}

/// True when `deg_f` admits no factor `deg(s) > 1` of a cover `s` with at most
/// three critical values.
pub fn mcmullen_parity_obstruction(deg_f: u64) -> bool {
    !(2..=deg_f).any(|s| deg_f % s == 0 && rh_branched_cover_feasible(s, 3))
}
